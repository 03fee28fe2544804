#pragma once

#include <array>
#include <string>
#include <vector>

#include "indist/circuits.hpp"
#include "indist/qstate.hpp"

namespace indist::measurement {

enum class Observable { external, internal };

std::string to_string(Observable o);
Observable observable_from_string(const std::string& s);

// Joint detection probabilities with exactly one particle per party.
// Rows are Alice's outcomes, columns Bob's; signs are the dichotomic values.
struct CoincidenceTable {
    Observable obs_a = Observable::external;
    Observable obs_b = Observable::external;
    std::array<std::string, 2> rows;
    std::array<std::string, 2> cols;
    std::array<std::array<double, 2>, 2> probs{};

    double total() const;
};

struct Signs {
    std::array<int, 2> rows{-1, +1};
    std::array<int, 2> cols{-1, +1};
};

// Outcome order: external s1 (D, L), s2 (R, U); internal by the DoF's label
// order ({down, up} or {H, V}). With the default signs L, U and the second
// internal label count as +1.
CoincidenceTable coincidence_table(const SymState& state, Observable a, Observable b);

// sum_rc s_r s_c P_rc / total
double expectation(const CoincidenceTable& t, const Signs& s = {});

struct ChshSettings {
    double phiA0 = 0.0;
    double phiA1 = kPi;
    double phiB0 = kPi / 4;
    double phiB1 = -kPi / 4;
};

// Alice's setting goes on the D arm, Bob's on the R arm.
circuits::PhaseConfig phases_for(double phi_a, double phi_b);

// |E00 + E10 + E01 - E11| with Exy evaluated at (phiAx, phiBy).
double chsh(circuits::ParticleKind kind, const ChshSettings& s, Observable a = Observable::external,
            Observable b = Observable::external);
double chsh_swap(const ChshSettings& s, Observable a = Observable::external,
                 Observable b = Observable::external);

// The four tables (ext/ext, int/int, int/ext, ext/int) in closed form for a
// given phase difference phi1 - phi2.
std::array<CoincidenceTable, 4> generalized_tables(double phi1, double phi2);

// (phi1, phi2) as printed for the unified form: phi1 = phi_D - phi_L,
// phi2 = -(phi_R - phi_U), plus pi/2 for fermions.
std::array<double, 2> unified_phases_printed(circuits::ParticleKind kind, const circuits::PhaseConfig& p);

// Half-angle variant that reproduces the circuit tables:
// phi1 = (phi_D - phi_L)/2, phi2 = (phi_R - phi_U)/2, plus pi/2 for bosons.
std::array<double, 2> unified_phases_half(circuits::ParticleKind kind, const circuits::PhaseConfig& p);

// All four tables straight from the circuit.
std::array<CoincidenceTable, 4> circuit_tables(const SymState& state);

double max_abs_diff(const CoincidenceTable& a, const CoincidenceTable& b);

}  // namespace indist::measurement
