#include "indist/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "indist/rng.hpp"

namespace indist::fidelity {

std::string to_string(Kind k) { return k == Kind::distinguishable ? "distinguishable" : "indistinguishable"; }

Kind kind_from_string(const std::string& s) {
    if (s == "distinguishable") return Kind::distinguishable;
    if (s == "indistinguishable") return Kind::indistinguishable;
    throw ValidationError("unknown channel kind '" + s + "'");
}

std::string to_string(TraceMode m) { return m == TraceMode::literal ? "literal" : "erase"; }

TraceMode trace_mode_from_string(const std::string& s) {
    if (s == "literal") return TraceMode::literal;
    if (s == "erase") return TraceMode::erase;
    throw ValidationError("unknown trace mode '" + s + "'");
}

void ChannelLayout::validate() const {
    if (n < 1) throw ValidationError("layout needs n >= 1");
    if (d != 2) throw ValidationError("only qubit DoFs (d = 2) are supported");
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw ValidationError("layout needs one axis per DoF on each side");
}

FidelityParams FidelityParams::defaults(const ChannelLayout& layout) {
    const double n = layout.n, d = layout.d;
    if (layout.kind == Kind::distinguishable) return {1.0, 1.0 + (n - 1.0) / d};
    return {5.0 / 6.0, n};
}

void FidelityParams::validate(const ChannelLayout& layout) const {
    const double d = layout.d, n = layout.n;
    if (!(f_max > 1.0 / d && f_max <= 1.0)) throw ValidationError("f_max must lie in (1/d, 1]");
    if (!(F_max <= n + 1e-12)) throw ValidationError("F_max must not exceed n");
    if (!(F_max > n / (d * d))) throw ValidationError("F_max must exceed n/d^2");
}

namespace {

Mat unitary(const std::array<double, 4>& x) {
    const cplx g = std::polar(1.0, x[0]);
    const cplx e1 = std::polar(1.0, -x[1] / 2), e2 = std::polar(1.0, x[1] / 2);
    const cplx f1 = std::polar(1.0, -x[3] / 2), f2 = std::polar(1.0, x[3] / 2);
    const double c = std::cos(x[2] / 2), s = std::sin(x[2] / 2);
    Mat u(2, 2);
    u << g * e1 * c * f1, -g * e1 * s * f2, g * e2 * s * f1, g * e2 * c * f2;
    return u;
}

double overlap(const Mat& rho, const Mat& u) {
    // (1 x U)|Phi+> has components U(b, a)/sqrt(2) at |ab>
    Vec psi(4);
    psi << u(0, 0), u(1, 0), u(0, 1), u(1, 1);
    psi /= std::sqrt(2.0);
    return (psi.adjoint() * rho * psi)(0, 0).real();
}

// Each angle enters the objective as A + B cos t + C sin t, so one coordinate
// step is solved exactly from three samples.
double ascend(const Mat& rho, std::array<double, 4>& x) {
    double best = overlap(rho, unitary(x));
    for (int sweep = 0; sweep < 500; ++sweep) {
        const double start = best;
        for (std::size_t k = 1; k < 4; ++k) {
            auto at = [&](double t) {
                auto y = x;
                y[k] += t;
                return overlap(rho, unitary(y));
            };
            double f0 = at(0.0), f1 = at(kPi / 2), f2 = at(kPi);
            double a = 0.5 * (f0 + f2), b = 0.5 * (f0 - f2), c = f1 - a;
            x[k] += std::atan2(c, b);
            best = a + std::hypot(b, c);
        }
        if (best - start < 1e-15) break;
    }
    return overlap(rho, unitary(x));
}

}  // namespace

SfResult singlet_fraction_detail(const Mat& rho, int d, int restarts, std::uint64_t seed) {
    if (d != 2) throw ValidationError("singlet fraction is implemented for d = 2");
    if (rho.rows() != 4 || rho.cols() != 4) throw ValidationError("singlet fraction needs a 4x4 matrix");
    if (restarts < 2) throw ValidationError("need at least two restarts");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    std::vector<std::pair<double, std::array<double, 4>>> runs;
    for (int r = 0; r < restarts; ++r) {
        std::array<double, 4> x{0.0, ang(rng), ang(rng), ang(rng)};
        double v = ascend(rho, x);
        runs.emplace_back(v, x);
    }
    auto best = std::max_element(runs.begin(), runs.end(), [](auto& l, auto& r) { return l.first < r.first; });
    SfResult out;
    out.value = best->first;
    out.unitary = unitary(best->second);
    out.agreeing = static_cast<int>(std::count_if(runs.begin(), runs.end(),
                                                  [&](auto& r) { return best->first - r.first <= 1e-6; }));
    out.flagged = out.agreeing < 2;
    return out;
}

double singlet_fraction(const Mat& rho, int d) {
    auto r = singlet_fraction_detail(rho, d);
    if (r.flagged) throw NumericError("singlet fraction restarts disagree");
    return r.value;
}

namespace {

int particle_of(const DensityMatrix& rho, const std::string& region) {
    for (const auto& t : rho.basis())
        for (const auto& k : t)
            if (k.region == region) return k.particle;
    throw ValidationError("no particle tagged '" + region + "'");
}

}  // namespace

Mat pair_state(const DensityMatrix& rho, const ChannelLayout& layout, int i, int j) {
    layout.validate();
    if (i < 0 || j < 0 || i >= layout.n || j >= layout.n) throw ValidationError("pair index out of range");
    const auto& ax = layout.a[static_cast<std::size_t>(i)];
    const auto& bx = layout.b[static_cast<std::size_t>(j)];
    DensityMatrix r = rho;
    auto drop = [&](const trace::QubitAxis& keep, const std::vector<trace::QubitAxis>& side) {
        for (const auto& other : side) {
            if (other.dof == keep.dof) continue;
            if (layout.kind == Kind::distinguishable)
                r = trace::trace_dof_dist(r, particle_of(r, other.region), other.dof);
            else if (layout.mode == TraceMode::literal)
                r = trace::trace_dof_indist(r, {other.region, other.dof});
            else
                r = trace::erase_dof_label(r, {other.region, other.dof});
        }
    };
    drop(ax, layout.a);
    drop(bx, layout.b);
    return trace::qubit_view(r, {ax, bx});
}

GsfResult generalized_singlet_fraction(const DensityMatrix& rho, const ChannelLayout& layout) {
    layout.validate();
    GsfResult out;
    out.pairs = RMat::Zero(layout.n, layout.n);
    for (int i = 0; i < layout.n; ++i)
        for (int j = 0; j < layout.n; ++j) out.pairs(i, j) = singlet_fraction(pair_state(rho, layout, i, j), layout.d);
    out.value = std::max(out.pairs.rowwise().sum().maxCoeff(), out.pairs.colwise().sum().maxCoeff());
    return out;
}

namespace {

Mat pauli(int k) {
    Mat m = Mat::Zero(2, 2);
    switch (k) {
        case 0: m(0, 0) = m(1, 1) = 1.0; break;
        case 1: m(0, 1) = m(1, 0) = 1.0; break;
        case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
        default: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    }
    return m;
}

// <beta_k|_{CA} x 1_B as a 2 x 8 map with beta_k = (1 x sigma_k)|Phi+>
Mat bell_projector(int k) {
    Vec phi = Vec::Zero(4);
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    Mat id = Mat::Identity(2, 2);
    Mat op(4, 4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int e = 0; e < 2; ++e) op(2 * a + b, 2 * c + e) = id(a, c) * pauli(k)(b, e);
    Vec beta = op * phi;
    Mat m = Mat::Zero(2, 8);
    for (int ca = 0; ca < 4; ++ca)
        for (int b = 0; b < 2; ++b) m(b, 2 * ca + b) = std::conj(beta(ca));
    return m;
}

struct Protocol {
    std::array<Mat, 4> proj;
    std::array<Mat, 4> fix;  // Bob's correction for outcome k
};

const Protocol& protocol() {
    static const Protocol p = [] {
        Protocol out;
        Vec phi = Vec::Zero(4);
        phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
        for (int k = 0; k < 4; ++k) {
            out.proj[static_cast<std::size_t>(k)] = bell_projector(k);
            // for the ideal channel psi -> M_k (psi x Phi+) = X_k psi / 2; undo X_k
            Mat xk(2, 2);
            for (int c = 0; c < 2; ++c) {
                Vec e = Vec::Zero(2);
                e(c) = 1.0;
                Vec full(8);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 4; ++j) full(4 * i + j) = e(i) * phi(j);
                xk.col(c) = 2.0 * out.proj[static_cast<std::size_t>(k)] * full;
            }
            out.fix[static_cast<std::size_t>(k)] = xk.adjoint();
        }
        return out;
    }();
    return p;
}

}  // namespace

double teleport_fidelity(const Mat& channel, const Vec& input) {
    if (channel.rows() != 4 || channel.cols() != 4) throw ValidationError("channel must be 4x4");
    if (input.size() != 2) throw ValidationError("input must be a qubit");
    Vec psi = input.normalized();
    Mat in = psi * psi.adjoint();
    Mat omega(8, 8);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) omega.block(4 * i, 4 * j, 4, 4) = in(i, j) * channel;
    Mat out = Mat::Zero(2, 2);
    const auto& p = protocol();
    for (std::size_t k = 0; k < 4; ++k) {
        Mat m = p.fix[k] * p.proj[k];
        out += m * omega * m.adjoint();
    }
    out /= out.trace().real();
    return (psi.adjoint() * out * psi)(0, 0).real();
}

std::vector<Vec> axis_inputs() {
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<Vec> v(6, Vec(2));
    v[0] << 1.0, 0.0;
    v[1] << 0.0, 1.0;
    v[2] << r, r;
    v[3] << r, -r;
    v[4] << r, kI * r;
    v[5] << r, -kI * r;
    return v;
}

double average_teleport_fidelity(const Mat& channel) {
    auto sf = singlet_fraction_detail(channel);
    Mat u = Mat::Identity(4, 4);
    // rotate Bob's qubit so the best maximally entangled state becomes Phi+
    Mat bob = sf.unitary.adjoint();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int e = 0; e < 2; ++e) u(2 * a + b, 2 * c + e) = (a == c ? 1.0 : 0.0) * bob(b, e);
    Mat aligned = u * channel * u.adjoint();
    double acc = 0.0;
    auto inputs = axis_inputs();
    for (const auto& v : inputs) acc += teleport_fidelity(aligned, v);
    return acc / static_cast<double>(inputs.size());
}

GtfResult generalized_teleportation_fidelity(const DensityMatrix& rho, const ChannelLayout& layout,
                                             const FidelityParams& params) {
    layout.validate();
    GtfResult out;
    out.pairs = RMat::Zero(layout.n, layout.n);
    for (int i = 0; i < layout.n; ++i)
        for (int j = 0; j < layout.n; ++j) out.pairs(i, j) = average_teleport_fidelity(pair_state(rho, layout, i, j));
    out.raw = out.pairs.maxCoeff();
    out.value = out.raw;
    if (layout.kind == Kind::indistinguishable) {
        params.validate(layout);
        const double floor = 1.0 / layout.d;
        out.value = floor + (params.f_max - floor) * (out.raw - floor) / (1.0 - floor);
    }
    return out;
}

namespace {

std::vector<DofSpec> qubit_dofs(int n) {
    std::vector<DofSpec> dofs;
    for (int j = 0; j < n; ++j) dofs.push_back(DofSpec{"q" + std::to_string(j + 1), {"0", "1"}});
    return dofs;
}

std::vector<int> bits(int x, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = (x >> (n - 1 - j)) & 1;
    return v;
}

std::vector<KetTuple> pair_basis(Kind kind, int n) {
    std::vector<KetTuple> basis;
    const int dim = 1 << n;
    const bool dist = kind == Kind::distinguishable;
    for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y)
            basis.push_back({Ket{dist ? 0 : -1, dist ? "A" : "sx", bits(x, n)},
                             Ket{dist ? 1 : -1, dist ? "B" : "sy", bits(y, n)}});
    return basis;
}

void check_n(int n) {
    if (n < 1 || n > 5) throw ValidationError("n must be in 1..5");
}

}  // namespace

DensityMatrix distinguishable_state(int n, const Mat& rho) {
    check_n(n);
    const Eigen::Index dim = Eigen::Index{1} << (2 * n);
    if (rho.rows() != dim || rho.cols() != dim) throw ValidationError("state size does not match n");
    return DensityMatrix(Statistics::distinguishable, qubit_dofs(n), pair_basis(Kind::distinguishable, n), rho);
}

ChannelLayout reference_layout(Kind kind, int n, TraceMode mode) {
    check_n(n);
    ChannelLayout l;
    l.kind = kind;
    l.n = n;
    l.mode = mode;
    const bool dist = kind == Kind::distinguishable;
    for (int j = 0; j < n; ++j) {
        l.a.push_back({dist ? "A" : "sx", j, 0, 1});
        l.b.push_back({dist ? "B" : "sy", j, 0, 1});
    }
    return l;
}

DensityMatrix reference_state(Kind kind, int n) {
    check_n(n);
    const int dim = 1 << n;
    const Eigen::Index full = static_cast<Eigen::Index>(dim) * dim;
    Mat m = Mat::Zero(full, full);
    if (kind == Kind::distinguishable) {
        const int rest = 1 << (n - 1);
        const double w = 1.0 / (static_cast<double>(rest) * rest);
        // Phi+ on the leading bits, identity on the others
        for (int x = 0; x < dim; ++x)
            for (int y = 0; y < dim; ++y)
                for (int x2 = 0; x2 < dim; ++x2)
                    for (int y2 = 0; y2 < dim; ++y2) {
                        if ((x % rest) != (x2 % rest) || (y % rest) != (y2 % rest)) continue;
                        const int a = x / rest, b = y / rest, a2 = x2 / rest, b2 = y2 / rest;
                        if (a != b || a2 != b2) continue;
                        m(static_cast<Eigen::Index>(x) * dim + y, static_cast<Eigen::Index>(x2) * dim + y2) = 0.5 * w;
                    }
        return DensityMatrix(Statistics::distinguishable, qubit_dofs(n), pair_basis(kind, n), m);
    }
    Vec g = Vec::Zero(full);
    g(dim - 1) = 1.0 / std::sqrt(2.0);                                // |0..0>|1..1>
    g(static_cast<Eigen::Index>(dim - 1) * dim) = 1.0 / std::sqrt(2.0);  // |1..1>|0..0>
    m = g * g.adjoint();
    return DensityMatrix(Statistics::boson, qubit_dofs(n), pair_basis(kind, n), m);
}

DensityMatrix dishhes_state(double theta, double phi) {
    Vec v = Vec::Zero(16);
    v(0 * 4 + 3) = std::cos(theta);           // |H,+l>|V,-l>
    v(3 * 4 + 0) = std::polar(std::sin(theta), phi);
    return distinguishable_state(2, v * v.adjoint());
}

ChannelLayout hhes_layout(TraceMode mode) {
    ChannelLayout l;
    l.kind = Kind::indistinguishable;
    l.n = 2;
    l.mode = mode;
    // path labels index the {L, D, R, U} DoF; spin is {down, up}
    l.a = {{"s1", 0, 1, 0}, {"s1", 1, 0, 1}};
    l.b = {{"s2", 0, 2, 3}, {"s2", 1, 0, 1}};
    return l;
}

DensityMatrix two_param_state(double p, Kind kind, int n) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
    auto ref = reference_state(kind, n);
    const auto dim = static_cast<Eigen::Index>(ref.dim());
    Mat m = p * ref.data() + (1.0 - p) * Mat::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(ref.statistics(), ref.dofs(), ref.basis(), m);
}

RelationRecord relation_check(double p, const ChannelLayout& layout, const FidelityParams& params) {
    layout.validate();
    params.validate(layout);
    auto rho = two_param_state(p, layout.kind, layout.n);
    RelationRecord r;
    r.p = p;
    r.F_g = generalized_singlet_fraction(rho, layout).value;
    r.f_g = generalized_teleportation_fidelity(rho, layout, params).value;
    const double n = layout.n, d = layout.d;
    const double floor_F = n / (d * d);
    r.predicted_f_g = (r.F_g - floor_F) * (params.f_max - 1.0 / d) / (params.F_max - floor_F) + 1.0 / d;
    r.residual = r.f_g - r.predicted_f_g;
    return r;
}

FidelityParams measured_params(const ChannelLayout& layout) {
    auto defaults = FidelityParams::defaults(layout);
    auto ref = reference_state(layout.kind, layout.n);
    FidelityParams out;
    out.F_max = generalized_singlet_fraction(ref, layout).value;
    out.f_max = generalized_teleportation_fidelity(ref, layout, defaults).value;
    return out;
}

BoundReport sf_upper_bound_check(int n, int samples, std::uint64_t seed) {
    check_n(n);
    if (samples < 1) throw ValidationError("need at least one sample");
    BoundReport rep;
    rep.n = n;
    rep.samples = samples;
    rep.bound = 1.0 + (n - 1) / 2.0;
    auto layout = reference_layout(Kind::distinguishable, n);
    const Eigen::Index dim = Eigen::Index{1} << (2 * n);
    for (int s = 0; s < samples; ++s) {
        std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(s)));
        Vec psi = random_state(dim, rng);
        auto rho = distinguishable_state(n, psi * psi.adjoint());
        double v = generalized_singlet_fraction(rho, layout).value;
        rep.max_seen = std::max(rep.max_seen, v);
        if (v > rep.bound + 1e-6) ++rep.violations;
    }
    return rep;
}

}  // namespace indist::fidelity
