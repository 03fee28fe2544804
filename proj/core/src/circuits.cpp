#include "indist/circuits.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace indist::circuits {

namespace {

struct ModeAmp {
    Ket mode;
    cplx amp;
};

using Bracket = std::vector<ModeAmp>;

Ket slot(const std::vector<DofSpec>& dofs, const char* region, const char* path, const char* internal) {
    return Ket{-1, region, {dofs[0].index_of(path), dofs[1].index_of(internal)}};
}

cplx ph(double a) { return std::polar(1.0, a); }

// amp_a * amp_b * a^dagger b^dagger |0> for every pair, scaled by 1/4
SymState expand(ParticleKind kind, const std::vector<DofSpec>& dofs, const Bracket& first, const Bracket& second) {
    SymState s(statistics_of(kind), dofs);
    for (const auto& a : first) {
        for (const auto& b : second) {
            Ket x = a.mode, y = b.mode;
            if (kind == ParticleKind::distinguishable) {
                x.particle = 0;
                y.particle = 1;
            }
            s.add({x, y}, 0.25 * a.amp * b.amp);
        }
    }
    return s;
}

}  // namespace

Statistics statistics_of(ParticleKind k) {
    switch (k) {
        case ParticleKind::boson: return Statistics::boson;
        case ParticleKind::fermion: return Statistics::fermion;
        case ParticleKind::distinguishable: break;
    }
    return Statistics::distinguishable;
}

ParticleKind kind_from_string(const std::string& name) {
    if (name == "boson") return ParticleKind::boson;
    if (name == "fermion") return ParticleKind::fermion;
    if (name == "distinguishable") return ParticleKind::distinguishable;
    throw ValidationError("unknown particle kind '" + name + "'");
}

std::string to_string(ParticleKind k) { return indist::to_string(statistics_of(k)); }

std::vector<DofSpec> hybrid_dofs() {
    return {DofSpec{"path", {"L", "D", "R", "U"}}, DofSpec{"spin", {"down", "up"}}};
}

std::vector<DofSpec> swap_dofs() {
    return {DofSpec{"path", {"L", "D", "R", "U"}}, DofSpec{"polarization", {"H", "V"}}};
}

SymState li_circuit(ParticleKind kind, const PhaseConfig& p) {
    const auto dofs = hybrid_dofs();
    auto m = [&](const char* path, const char* spin) {
        const char* region = (path[0] == 'L' || path[0] == 'D') ? kAlice : kBob;
        return slot(dofs, region, path, spin);
    };
    Bracket first{
        {m("R", "down"), ph(p.phi_R)},
        {m("U", "up"), kI * ph(p.phi_R)},
        {m("D", "up"), kI * ph(p.phi_D)},
        {m("L", "down"), kI * kI * ph(p.phi_D)},
    };
    Bracket second{
        {m("L", "down"), ph(p.phi_L)},
        {m("D", "up"), kI * ph(p.phi_L)},
        {m("U", "up"), kI * ph(p.phi_U)},
        {m("R", "down"), kI * kI * ph(p.phi_U)},
    };
    return normalize(expand(kind, dofs, first, second));
}

SymState swap_circuit(const PhaseConfig& p) {
    const auto dofs = swap_dofs();
    auto m = [&](const char* path, const char* pol) {
        const char* region = (path[0] == 'L' || path[0] == 'D') ? kAlice : kBob;
        return slot(dofs, region, path, pol);
    };
    Bracket first{
        {m("R", "H"), ph(p.phi_R)},
        {m("U", "H"), kI * ph(p.phi_R)},
        {m("D", "V"), kI * ph(p.phi_D)},
        {m("L", "H"), kI * kI * ph(p.phi_D)},
    };
    Bracket second{
        {m("L", "H"), ph(p.phi_L)},
        {m("D", "V"), kI * ph(p.phi_L)},
        {m("U", "H"), kI * ph(p.phi_U)},
        {m("R", "H"), kI * kI * ph(p.phi_U)},
    };
    return normalize(expand(ParticleKind::boson, dofs, first, second));
}

std::vector<double> sorter_cascade(int n_dofs, cplx a0, cplx a1) {
    if (n_dofs < 1 || n_dofs > 20) throw ValidationError("n_dofs must be in 1..20");
    double n2 = std::norm(a0) + std::norm(a1);
    if (!(n2 > 0.0)) throw ValidationError("zero input state");
    const double p0 = std::norm(a0) / n2, p1 = std::norm(a1) / n2;
    std::vector<double> out(std::size_t{1} << n_dofs);
    for (std::size_t b = 0; b < out.size(); ++b) {
        double p = 1.0;
        for (int j = 0; j < n_dofs; ++j) p *= (b >> j) & 1U ? p1 : p0;
        out[b] = p;
    }
    return out;
}

Mat u1(double lambda) {
    Mat m = Mat::Identity(2, 2);
    m(1, 1) = ph(lambda);
    return m;
}

Mat u3(double theta, double phi, double lambda) {
    Mat m(2, 2);
    m << std::cos(theta / 2), -ph(lambda) * std::sin(theta / 2),
         ph(phi) * std::sin(theta / 2), ph(phi + lambda) * std::cos(theta / 2);
    return m;
}

Mat cnot() {
    Mat m = Mat::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
    return m;
}

Mat beam_splitter(double theta) {
    Mat m(2, 2);
    m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return m;
}

HardyStates hardy_state(double theta, double phi) {
    const double r = 1.0 / std::sqrt(2.0);
    Vec a(4);
    a << r * std::cos(theta), r * std::sin(theta), r * std::cos(theta), r * std::sin(theta) * ph(2 * phi);

    const Mat id = Mat::Identity(2, 2);
    const double lambda = phi;
    Mat m1 = Eigen::kroneckerProduct(id, u1(-lambda)).eval();
    Mat m2 = Eigen::kroneckerProduct(u1(lambda), u1(-lambda)).eval();
    Mat m3 = Eigen::kroneckerProduct(id, u1(2 * lambda)).eval();
    Mat uc = m3 * cnot() * m2 * cnot() * m1;
    Mat prep = Eigen::kroneckerProduct(u3(kPi / 2, 0, 0), u3(2 * theta, 0, 0)).eval();
    Vec zero = Vec::Zero(4);
    zero(0) = 1.0;
    Vec g = uc * prep * zero;
    return HardyStates{a, g};
}

}  // namespace indist::circuits
