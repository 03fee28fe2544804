#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "indist/circuits.hpp"
#include "indist/qstate.hpp"
#include "indist/trace.hpp"

namespace indist::measures {

// Wootters concurrence of a 4x4 two-qubit density matrix.
double concurrence(const Mat& rho);
// Eigenvalues of rho (sy x sy) rho^* (sy x sy), descending, clipped at zero.
std::array<double, 4> spin_flip_spectrum(const Mat& rho);

// Negativity of a dim_a x dim_b bipartite matrix with respect to B.
double negativity(const Mat& rho, int dim_a = 2, int dim_b = 2);
double log_negativity(const Mat& rho, int dim_a = 2, int dim_b = 2);

// Natural-log von Neumann entropy.
double vn_entropy(const Mat& rho);

// Partial trace over qubits; qubit 0 is the most significant bit.
Mat partial_trace_qubits(const Mat& rho, int n_qubits, const std::vector<int>& keep);

enum class Verdict { holds, equality, violated, violated_maximally };
std::string to_string(Verdict v);

struct MonogamyReport {
    double c2_ab = 0.0;
    double c2_ac = 0.0;
    double c2_a_bc = 0.0;
    double residual = 0.0;  // c2_a_bc - c2_ab - c2_ac
    Verdict verdict = Verdict::holds;
    // c2_a_bc is an ensemble upper bound rather than the exact value (mixed input)
    bool a_bc_is_bound = false;
    std::array<double, 4> spectrum_ab{};
    std::array<double, 4> spectrum_ac{};
};

inline constexpr double kMonogamyTol = 1e-9;

Verdict classify(double c2_ab, double c2_ac, double residual);

// rho is 8x8 over qubits (A, B, C). Pure input uses 4 det(rho_A); mixed
// input falls back to the eigen-ensemble bound sum_k p_k 4 det(rho_A^(k)).
MonogamyReport monogamy_report(const Mat& rho_abc);
MonogamyReport monogamy_report(const DensityMatrix& rho, const std::array<trace::QubitAxis, 3>& axes);

// Convexity check for a finite ensemble of pure three-qubit states.
struct MixedMonogamy {
    MonogamyReport report;      // pairwise terms from the mixture, a_bc = ensemble average
    double pairwise_sum = 0.0;  // c2_ab + c2_ac of the mixture
    double ensemble_bound = 0.0;
    bool holds = false;
};
MixedMonogamy mixed_monogamy_check(const std::vector<std::pair<double, Vec>>& ensemble);

// Three indistinguishable particles in regions s1, s2, s3, each carrying
// three qubit DoFs. The case id selects which particles share eigenstates,
// which are superposed and which DoF is read out in each region.
struct ThreeParticleCase {
    int id = 1;
    // internal amplitudes per particle and DoF (DoF order: j, j', j'')
    std::array<std::array<std::array<cplx, 2>, 3>, 3> internal{};
    std::array<std::array<cplx, 3>, 3> spatial{};  // particle x region
    std::array<int, 3> measured{0, 0, 0};          // DoF read out in s1, s2, s3
    int k = 0;                                     // shared eigen label
};

std::vector<DofSpec> three_particle_dofs();
ThreeParticleCase random_case(int id, std::mt19937_64& rng);

// One-per-region projection, DoF trace of the unread DoFs, then qubit view.
DensityMatrix three_particle_state(const ThreeParticleCase& c, Statistics stats);
Mat three_particle_reduced(const ThreeParticleCase& c, Statistics stats);

struct ZCoeffs {
    cplx z1, z2, z3;  // odd particle in s3, s2, s1 respectively
};

// z coefficients of a pure W-type reduced state (two particles share label k).
ZCoeffs z_coeffs(const Mat& rho8, int k);
double c2_a_bc_from_z(const ZCoeffs& z);

struct CaseResult {
    MonogamyReport report;
    std::optional<ZCoeffs> z;
    bool pure = false;
};

CaseResult three_particle_case(const ThreeParticleCase& c, Statistics stats);

// Two-particle HHES from the Li circuit, one particle per region, with one
// DoF removed in each region. spin_path keeps the path in s1 and the spin in
// s2. `coherent` erases the DoF label instead of tracing it.
enum class ReducedPair { spin_spin, spin_path };
ReducedPair reduced_pair_from_string(const std::string& s);
std::string to_string(ReducedPair p);

DensityMatrix hhes_projected(circuits::ParticleKind kind, const circuits::PhaseConfig& phases);
Mat hhes_reduced(const DensityMatrix& projected, ReducedPair pair, bool coherent);

}  // namespace indist::measures
