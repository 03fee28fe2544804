#include "indist/measures.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace indist::measures {

namespace {

void check_square(const Mat& rho, Eigen::Index n, const char* what) {
    if (rho.rows() != n || rho.cols() != n) throw ValidationError(std::string(what) + ": wrong matrix size");
}

void check_state(const Mat& rho, const char* what) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
        throw ValidationError(std::string(what) + ": matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(rho);
    if (es.eigenvalues().minCoeff() < -1e-8) throw ValidationError(std::string(what) + ": matrix is not PSD");
}

Mat sy_sy() {
    Mat sy(2, 2);
    sy << 0.0, -kI, kI, 0.0;
    return Eigen::kroneckerProduct(sy, sy).eval();
}

// singular values of V^T (sy x sy) V with rho = V V^dagger; these are the
// square roots of the spin-flip spectrum without forming the non-Hermitian product
Eigen::VectorXd flip_singulars(const Mat& rho) {
    Eigen::SelfAdjointEigenSolver<Mat> es(rho);
    Eigen::VectorXd w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Mat v = es.eigenvectors() * w.asDiagonal();
    Mat t = v.transpose() * sy_sy() * v;
    Eigen::JacobiSVD<Mat> svd(t);
    return svd.singularValues();  // descending
}

double det_real(const Mat& m) { return m.determinant().real(); }

}  // namespace

double concurrence(const Mat& rho) {
    check_square(rho, 4, "concurrence");
    check_state(rho, "concurrence");
    auto s = flip_singulars(rho);
    return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

std::array<double, 4> spin_flip_spectrum(const Mat& rho) {
    check_square(rho, 4, "spin_flip_spectrum");
    check_state(rho, "spin_flip_spectrum");
    auto s = flip_singulars(rho);
    return {s(0) * s(0), s(1) * s(1), s(2) * s(2), s(3) * s(3)};
}

double negativity(const Mat& rho, int dim_a, int dim_b) {
    if (dim_a < 1 || dim_b < 1) throw ValidationError("negativity: bad bipartition");
    check_square(rho, static_cast<Eigen::Index>(dim_a) * dim_b, "negativity");
    Mat pt(rho.rows(), rho.cols());
    for (int a = 0; a < dim_a; ++a)
        for (int b = 0; b < dim_b; ++b)
            for (int a2 = 0; a2 < dim_a; ++a2)
                for (int b2 = 0; b2 < dim_b; ++b2)
                    pt(a * dim_b + b, a2 * dim_b + b2) = rho(a * dim_b + b2, a2 * dim_b + b);
    Eigen::SelfAdjointEigenSolver<Mat> es(pt);
    double norm1 = es.eigenvalues().cwiseAbs().sum();
    return std::max(0.0, (norm1 - 1.0) / 2.0);
}

double log_negativity(const Mat& rho, int dim_a, int dim_b) {
    return std::log2(2.0 * negativity(rho, dim_a, dim_b) + 1.0);
}

double vn_entropy(const Mat& rho) {
    Eigen::SelfAdjointEigenSolver<Mat> es(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double l = es.eigenvalues()(i);
        if (l > 1e-15) s -= l * std::log(l);
    }
    return s;
}

Mat partial_trace_qubits(const Mat& rho, int n_qubits, const std::vector<int>& keep) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    check_square(rho, dim, "partial_trace_qubits");
    std::vector<int> traced;
    for (int q = 0; q < n_qubits; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
    for (int q : keep)
        if (q < 0 || q >= n_qubits) throw ValidationError("partial_trace_qubits: qubit out of range");
    const int k = static_cast<int>(keep.size());
    const Eigen::Index out_dim = Eigen::Index{1} << k;
    Mat out = Mat::Zero(out_dim, out_dim);
    auto compose = [&](Eigen::Index kept, Eigen::Index rest) {
        Eigen::Index idx = 0;
        for (int i = 0; i < k; ++i)
            if ((kept >> (k - 1 - i)) & 1) idx |= Eigen::Index{1} << (n_qubits - 1 - keep[static_cast<std::size_t>(i)]);
        const int r = static_cast<int>(traced.size());
        for (int i = 0; i < r; ++i)
            if ((rest >> (r - 1 - i)) & 1) idx |= Eigen::Index{1} << (n_qubits - 1 - traced[static_cast<std::size_t>(i)]);
        return idx;
    };
    const Eigen::Index rest_dim = Eigen::Index{1} << traced.size();
    for (Eigen::Index a = 0; a < out_dim; ++a)
        for (Eigen::Index b = 0; b < out_dim; ++b)
            for (Eigen::Index r = 0; r < rest_dim; ++r) out(a, b) += rho(compose(a, r), compose(b, r));
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::equality: return "equality";
        case Verdict::violated: return "violated";
        case Verdict::violated_maximally: return "violated_maximally";
    }
    return "?";
}

Verdict classify(double c2_ab, double c2_ac, double residual) {
    if (c2_ab >= 1.0 - kMonogamyTol && c2_ac >= 1.0 - kMonogamyTol) return Verdict::violated_maximally;
    if (residual < -kMonogamyTol) return Verdict::violated;
    if (std::abs(residual) <= kMonogamyTol) return Verdict::equality;
    return Verdict::holds;
}

namespace {

double tangle_a(const Vec& psi) {
    Mat r = psi * psi.adjoint();
    return std::max(0.0, 4.0 * det_real(partial_trace_qubits(r, 3, {0})));
}

MonogamyReport pairwise(const Mat& rho_abc) {
    MonogamyReport rep;
    Mat ab = partial_trace_qubits(rho_abc, 3, {0, 1});
    Mat ac = partial_trace_qubits(rho_abc, 3, {0, 2});
    double cab = concurrence(ab), cac = concurrence(ac);
    rep.c2_ab = cab * cab;
    rep.c2_ac = cac * cac;
    rep.spectrum_ab = spin_flip_spectrum(ab);
    rep.spectrum_ac = spin_flip_spectrum(ac);
    return rep;
}

void finish(MonogamyReport& rep) {
    rep.residual = rep.c2_a_bc - rep.c2_ab - rep.c2_ac;
    rep.verdict = classify(rep.c2_ab, rep.c2_ac, rep.residual);
}

}  // namespace

MonogamyReport monogamy_report(const Mat& rho_abc) {
    check_square(rho_abc, 8, "monogamy_report");
    check_state(rho_abc, "monogamy_report");
    Mat rho = rho_abc / rho_abc.trace().real();
    MonogamyReport rep = pairwise(rho);
    Eigen::SelfAdjointEigenSolver<Mat> es(rho);
    const double purity = (rho * rho).trace().real();
    if (std::abs(purity - 1.0) < 1e-9) {
        rep.c2_a_bc = tangle_a(es.eigenvectors().col(7));
    } else {
        rep.a_bc_is_bound = true;
        for (Eigen::Index k = 0; k < 8; ++k) {
            double l = es.eigenvalues()(k);
            if (l > 1e-14) rep.c2_a_bc += l * tangle_a(es.eigenvectors().col(k));
        }
    }
    finish(rep);
    return rep;
}

MonogamyReport monogamy_report(const DensityMatrix& rho, const std::array<trace::QubitAxis, 3>& axes) {
    return monogamy_report(trace::qubit_view(rho, {axes[0], axes[1], axes[2]}));
}

MixedMonogamy mixed_monogamy_check(const std::vector<std::pair<double, Vec>>& ensemble) {
    if (ensemble.empty()) throw ValidationError("empty ensemble");
    double wsum = 0.0;
    Mat rho = Mat::Zero(8, 8);
    double bound = 0.0;
    for (const auto& [w, psi] : ensemble) {
        if (w < 0.0) throw ValidationError("negative ensemble weight");
        if (psi.size() != 8) throw ValidationError("ensemble states must be three-qubit vectors");
        Vec v = psi.normalized();
        wsum += w;
        rho += w * v * v.adjoint();
        bound += w * tangle_a(v);
    }
    if (std::abs(wsum - 1.0) > 1e-9) throw ValidationError("ensemble weights must sum to 1");
    MixedMonogamy out;
    out.report = pairwise(rho);
    out.report.c2_a_bc = bound;
    out.report.a_bc_is_bound = ensemble.size() > 1;
    finish(out.report);
    out.pairwise_sum = out.report.c2_ab + out.report.c2_ac;
    out.ensemble_bound = bound;
    out.holds = out.pairwise_sum <= bound + kMonogamyTol;
    return out;
}

std::vector<DofSpec> three_particle_dofs() {
    return {DofSpec{"spin", {"up", "down"}}, DofSpec{"path", {"R", "L"}}, DofSpec{"oam", {"+l", "-l"}}};
}

namespace {

using Amp2 = std::array<cplx, 2>;

Amp2 eigen(int k) { return k == 0 ? Amp2{1.0, 0.0} : Amp2{0.0, 1.0}; }

Amp2 superposed(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double kappa = u(rng);
    double phase = 2.0 * kPi * u(rng);
    return {std::sqrt(kappa), std::sqrt(1.0 - kappa) * std::polar(1.0, phase)};
}

}  // namespace

ThreeParticleCase random_case(int id, std::mt19937_64& rng) {
    if (id < 1 || id > 13) throw ValidationError("case id must be in 1..13");
    ThreeParticleCase c;
    c.id = id;
    std::uniform_int_distribution<int> bit(0, 1);
    std::normal_distribution<double> g(0.0, 1.0);
    c.k = bit(rng);
    const int k = c.k, kp = 1 - c.k;
    for (auto& p : c.internal)
        for (auto& d : p) d = eigen(0);
    auto set = [&](int particle, int dof, Amp2 a) { c.internal[static_cast<std::size_t>(particle)][static_cast<std::size_t>(dof)] = a; };
    switch (id) {
        case 1: set(0, 0, eigen(k)); set(1, 0, eigen(k)); set(2, 0, eigen(k)); c.measured = {0, 0, 0}; break;
        case 2: set(0, 0, eigen(k)); set(1, 0, eigen(k)); set(2, 0, eigen(kp)); c.measured = {0, 0, 0}; break;
        case 3: set(0, 0, eigen(k)); set(1, 0, eigen(k)); set(2, 1, eigen(bit(rng))); c.measured = {0, 0, 1}; break;
        case 4: set(0, 0, eigen(k)); set(1, 0, eigen(kp)); set(2, 1, eigen(bit(rng))); c.measured = {0, 0, 1}; break;
        case 5: set(0, 0, eigen(k)); set(1, 2, eigen(bit(rng))); set(2, 1, eigen(bit(rng))); c.measured = {0, 2, 1}; break;
        case 6: set(0, 0, eigen(k)); set(1, 0, eigen(k)); set(2, 0, superposed(rng)); c.measured = {0, 0, 0}; break;
        case 7: set(0, 0, eigen(k)); set(1, 0, eigen(kp)); set(2, 0, superposed(rng)); c.measured = {0, 0, 0}; break;
        case 8: {
            auto s = superposed(rng);
            set(0, 0, s); set(1, 0, s); set(2, 0, s); c.measured = {0, 0, 0};
            break;
        }
        case 9: set(0, 0, superposed(rng)); set(1, 0, superposed(rng)); set(2, 0, superposed(rng)); c.measured = {0, 0, 0}; break;
        case 10: set(0, 0, eigen(k)); set(1, 0, eigen(k)); set(2, 1, superposed(rng)); c.measured = {0, 0, 1}; break;
        case 11: set(0, 0, eigen(k)); set(1, 0, eigen(kp)); set(2, 1, superposed(rng)); c.measured = {0, 0, 1}; break;
        case 12: set(0, 0, eigen(k)); set(1, 0, superposed(rng)); set(2, 1, superposed(rng)); c.measured = {0, 0, 1}; break;
        case 13: set(0, 0, superposed(rng)); set(1, 2, superposed(rng)); set(2, 1, superposed(rng)); c.measured = {0, 2, 1}; break;
        default: break;
    }
    for (auto& row : c.spatial)
        for (auto& v : row) v = cplx{g(rng), g(rng)};
    return c;
}

DensityMatrix three_particle_state(const ThreeParticleCase& c, Statistics stats) {
    if (stats == Statistics::distinguishable) throw ValidationError("three-particle cases are for identical particles");
    static const char* regions[3] = {"s1", "s2", "s3"};
    SymState s(stats, three_particle_dofs());
    // creation-operator expansion of each particle over regions and DoF values
    std::array<std::vector<std::pair<Ket, cplx>>, 3> modes;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t h = 0; h < 3; ++h) {
            for (int x = 0; x < 8; ++x) {
                cplx amp = c.spatial[i][h];
                Ket k{-1, regions[h], {}};
                for (std::size_t j = 0; j < 3; ++j) {
                    int v = (x >> (2 - j)) & 1;
                    amp *= c.internal[i][j][static_cast<std::size_t>(v)];
                    k.dofs.push_back(v);
                }
                if (std::abs(amp) > 1e-15) modes[i].emplace_back(std::move(k), amp);
            }
        }
    }
    for (const auto& [k0, a0] : modes[0])
        for (const auto& [k1, a1] : modes[1])
            for (const auto& [k2, a2] : modes[2]) s.add({k0, k1, k2}, a0 * a1 * a2);
    auto projected = trace::project_one_per_region(s, {"s1", "s2", "s3"});
    auto rho = to_density(projected);
    for (std::size_t r = 0; r < 3; ++r)
        for (int j = 0; j < 3; ++j)
            if (j != c.measured[r]) rho = trace::trace_dof_indist(rho, {regions[r], j});
    return rho;
}

Mat three_particle_reduced(const ThreeParticleCase& c, Statistics stats) {
    auto rho = three_particle_state(c, stats);
    return trace::qubit_view(rho, {{"s1", c.measured[0], 0, 1}, {"s2", c.measured[1], 0, 1}, {"s3", c.measured[2], 0, 1}});
}

ZCoeffs z_coeffs(const Mat& rho8, int k) {
    check_square(rho8, 8, "z_coeffs");
    Eigen::SelfAdjointEigenSolver<Mat> es(rho8);
    Vec v = es.eigenvectors().col(7);
    const int kp = 1 - k;
    auto at = [&](int b1, int b2, int b3) { return v(4 * b1 + 2 * b2 + b3); };
    return ZCoeffs{at(k, k, kp), at(k, kp, k), at(kp, k, k)};
}

double c2_a_bc_from_z(const ZCoeffs& z) {
    double a = std::norm(z.z3);
    return 4.0 * (1.0 - a) * a;
}

CaseResult three_particle_case(const ThreeParticleCase& c, Statistics stats) {
    CaseResult out;
    Mat r = three_particle_reduced(c, stats);
    out.pure = std::abs((r * r).trace().real() - 1.0) < 1e-9;
    out.report = monogamy_report(r);
    if (c.id == 2 && out.pure) out.z = z_coeffs(r, c.k);
    return out;
}

}  // namespace indist::measures

namespace indist::measures {

ReducedPair reduced_pair_from_string(const std::string& s) {
    if (s == "spin-spin") return ReducedPair::spin_spin;
    if (s == "spin-path") return ReducedPair::spin_path;
    throw ValidationError("unknown reduced pair '" + s + "'");
}

std::string to_string(ReducedPair p) { return p == ReducedPair::spin_spin ? "spin-spin" : "spin-path"; }

DensityMatrix hhes_projected(circuits::ParticleKind kind, const circuits::PhaseConfig& phases) {
    const auto s = circuits::li_circuit(kind, phases);
    return to_density(trace::project_one_per_region(s, {circuits::kAlice, circuits::kBob}));
}

Mat hhes_reduced(const DensityMatrix& projected, ReducedPair pair, bool coherent) {
    constexpr int kPath = 0, kSpin = 1;
    const int drop_a = pair == ReducedPair::spin_spin ? kPath : kSpin;
    auto remove = [coherent](const DensityMatrix& r, const char* region, int dof) {
        return coherent ? trace::erase_dof_label(r, {region, dof}) : trace::trace_dof_indist(r, {region, dof});
    };
    auto r = remove(projected, circuits::kAlice, drop_a);
    r = remove(r, circuits::kBob, kPath);
    const auto a = drop_a == kPath ? trace::axis(r, circuits::kAlice, "spin", "down", "up")
                                   : trace::axis(r, circuits::kAlice, "path", "D", "L");
    return trace::qubit_view(r, {a, trace::axis(r, circuits::kBob, "spin", "down", "up")});
}

}  // namespace indist::measures
