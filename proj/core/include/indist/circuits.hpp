#pragma once

#include <vector>

#include "indist/qstate.hpp"

namespace indist::circuits {

struct PhaseConfig {
    double phi_L = 0.0;
    double phi_D = 0.0;
    double phi_R = 0.0;
    double phi_U = 0.0;

    // (phi_D - phi_L - phi_R + phi_U) / 2
    double phi() const { return 0.5 * (phi_D - phi_L - phi_R + phi_U); }
};

enum class ParticleKind { boson, fermion, distinguishable };

Statistics statistics_of(ParticleKind k);
ParticleKind kind_from_string(const std::string& name);
std::string to_string(ParticleKind k);

// Region names: Alice holds L, D in "s1"; Bob holds R, U in "s2".
inline const char* kAlice = "s1";
inline const char* kBob = "s2";

// DoF 0 is the path {L, D, R, U}; DoF 1 is spin {down, up}.
std::vector<DofSpec> hybrid_dofs();
// DoF 0 is the path {L, D, R, U}; DoF 1 is polarization {H, V}.
std::vector<DofSpec> swap_dofs();

// Two particles through the HBS network. Indistinguishable kinds expand the
// product of the two creation-operator brackets; distinguishable particles
// keep their labels (0 from the first bracket, 1 from the second).
SymState li_circuit(ParticleKind kind, const PhaseConfig& phases);

// Two bosons through the HBS + BS exchange network.
SymState swap_circuit(const PhaseConfig& phases);

// Probabilities over 2^n detectors when a qubit state (a0, a1) is copied onto
// n DoFs and each DoF is sorted in the Z basis. Index b has bit j = branch of DoF j.
std::vector<double> sorter_cascade(int n_dofs, cplx a0, cplx a1);

struct HardyStates {
    Vec analytic;    // ordering |AB>: 00, 01, 10, 11
    Vec gate_built;  // U_C (U_B(pi/4) x U_B(theta)) |00>, U_C from U1 and CNOT
};

HardyStates hardy_state(double theta, double phi);

// Standard single-qubit gates; u3(theta, phi, lambda) follows the usual IBM form.
Mat u1(double lambda);
Mat u3(double theta, double phi, double lambda);
Mat cnot();  // control is the first (most significant) qubit
Mat beam_splitter(double theta);  // [[cos, -sin], [sin, cos]]

}  // namespace indist::circuits
