#pragma once

#include <cstdint>
#include <vector>

#include "indist/qstate.hpp"
#include "indist/trace.hpp"

namespace indist::fidelity {

enum class Kind { distinguishable, indistinguishable };
// How the unused DoFs of a region are removed before a pair is read out.
enum class TraceMode { literal, erase };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);
std::string to_string(TraceMode m);
TraceMode trace_mode_from_string(const std::string& s);

struct ChannelLayout {
    Kind kind = Kind::distinguishable;
    int n = 1;
    int d = 2;
    std::vector<trace::QubitAxis> a;  // one axis per DoF of the sending party
    std::vector<trace::QubitAxis> b;  // and of the receiving party
    TraceMode mode = TraceMode::literal;

    void validate() const;
};

struct FidelityParams {
    double f_max = 1.0;
    double F_max = 1.0;

    // 1 and 1 + (n-1)/d for distinguishable; 5/6 and n otherwise
    static FidelityParams defaults(const ChannelLayout& layout);
    void validate(const ChannelLayout& layout) const;
};

struct SfResult {
    double value = 0.0;
    Mat unitary;         // maximizer: |psi> = (1 x U)|Phi+>
    int agreeing = 0;    // restarts within 1e-6 of the best
    bool flagged = false;
};

// max over U of <Phi+|(1 x U)^dagger rho (1 x U)|Phi+> by multi-start
// coordinate ascent on U = e^{ia} Rz(b) Ry(c) Rz(e). Only d = 2.
SfResult singlet_fraction_detail(const Mat& rho, int d = 2, int restarts = 32, std::uint64_t seed = 0x5F);
double singlet_fraction(const Mat& rho, int d = 2);

// Pair (i, j) of the layout as a 4x4 matrix.
Mat pair_state(const DensityMatrix& rho, const ChannelLayout& layout, int i, int j);

struct GsfResult {
    double value = 0.0;
    RMat pairs;  // n x n pairwise singlet fractions
};
GsfResult generalized_singlet_fraction(const DensityMatrix& rho, const ChannelLayout& layout);

// Standard BSM + Pauli correction through a two-qubit channel; returns
// <psi|rho_out|psi> for the pure input psi.
double teleport_fidelity(const Mat& channel, const Vec& input);
// The six Pauli-axis inputs.
std::vector<Vec> axis_inputs();
// Average over axis inputs after rotating Bob's side by the singlet-fraction maximizer.
double average_teleport_fidelity(const Mat& channel);

struct GtfResult {
    double value = 0.0;
    double raw = 0.0;  // before the indistinguishable efficiency map
    RMat pairs;
};
// Max over DoF pairs. For indistinguishable channels the protocol is modelled
// with efficiency: f = 1/d + (f_max - 1/d)(f_raw - 1/d)/(1 - 1/d).
GtfResult generalized_teleportation_fidelity(const DensityMatrix& rho, const ChannelLayout& layout,
                                             const FidelityParams& params);

// Canonical layout: parties "A"/"B" (distinguishable) or regions "sx"/"sy".
ChannelLayout reference_layout(Kind kind, int n, TraceMode mode = TraceMode::erase);
// The reference state P: a Bell pair on (a1, b1) with the rest maximally
// mixed, or |0..0>|1..1> + |1..1>|0..0> over two regions.
DensityMatrix reference_state(Kind kind, int n);
// p P + (1 - p) I/d^{2n}
DensityMatrix two_param_state(double p, Kind kind, int n);
// Distinguishable two-particle state over n qubit DoFs each from a 4^n matrix.
DensityMatrix distinguishable_state(int n, const Mat& rho);

// Distinguishable signal/idler pair over (polarization, OAM):
// cos t |H,+l>|V,-l> + e^{i phi} sin t |V,-l>|H,+l>.
DensityMatrix dishhes_state(double theta, double phi);
// Layout over the projected two-region HHES: (path, spin) in s1 and in s2.
ChannelLayout hhes_layout(TraceMode mode = TraceMode::erase);

struct RelationRecord {
    double p = 0.0;
    double f_g = 0.0;
    double F_g = 0.0;
    double predicted_f_g = 0.0;
    double residual = 0.0;
};
RelationRecord relation_check(double p, const ChannelLayout& layout, const FidelityParams& params);
// f_max and F_max measured on the reference state itself.
FidelityParams measured_params(const ChannelLayout& layout);

struct BoundReport {
    int n = 0;
    int samples = 0;
    double bound = 0.0;
    double max_seen = 0.0;
    int violations = 0;
};
BoundReport sf_upper_bound_check(int n, int samples, std::uint64_t seed);

}  // namespace indist::fidelity
