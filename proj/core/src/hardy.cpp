#include "indist/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/math/distributions/students_t.hpp>

#include "indist/circuits.hpp"
#include "indist/rng.hpp"

namespace indist::hardy {

using circuits::beam_splitter;
using circuits::u1;

double HardyParams::chi() const {
    if (!std::isfinite(theta) || !std::isfinite(phi)) throw ValidationError("non-finite Hardy parameters");
    if (std::abs(theta - kPi / 2) < 1e-12 && std::abs(phi - kPi / 2) < 1e-12)
        throw ValidationError("chi is undefined at theta = phi = 90 degrees");
    return std::atan2(1.0, std::tan(theta) * std::cos(phi));
}

Settings settings(const HardyParams& p) {
    const double chi = p.chi();
    Settings s;
    s.a1 = beam_splitter(kPi / 4);
    s.b1 = beam_splitter(0.0);
    s.a2 = u1(2 * p.phi) * beam_splitter(kPi / 4) * u1(-2 * p.phi);
    s.b2 = u1(p.phi) * beam_splitter(chi) * u1(-p.phi);
    return s;
}

namespace {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// full outcome distribution (index 2a + b, bit 0 = +1) for each circuit
std::array<std::array<double, 4>, 4> distributions(const HardyParams& p, const Vec& state) {
    auto s = settings(p);
    const std::array<std::pair<const Mat*, const Mat*>, 4> circuits{
        {{&s.a1, &s.b1}, {&s.a2, &s.b1}, {&s.a1, &s.b2}, {&s.a2, &s.b2}}};
    std::array<std::array<double, 4>, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) {
        Vec v = kron(*circuits[k].first, *circuits[k].second) * state;
        for (Eigen::Index i = 0; i < 4; ++i) out[k][static_cast<std::size_t>(i)] = std::norm(v(i));
    }
    return out;
}

// target outcome per circuit: (+,+), (+,-), (-,+), (+,+)
constexpr std::array<std::array<int, 2>, 4> kTarget{{{0, 0}, {0, 1}, {1, 0}, {0, 0}}};

}  // namespace

std::array<double, 4> hardy_probs(const HardyParams& p, const Vec& state) {
    if (state.size() != 4) throw ValidationError("Hardy state must be a two-qubit vector");
    auto d = distributions(p, state.normalized());
    std::array<double, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) out[k] = d[k][static_cast<std::size_t>(2 * kTarget[k][0] + kTarget[k][1])];
    return out;
}

std::array<double, 4> hardy_probs(const HardyParams& p) {
    return hardy_probs(p, circuits::hardy_state(p.theta, p.phi).analytic);
}

double hardy_q(const HardyParams& p) {
    const cplx v = 0.5 * std::cos(p.theta) * std::cos(p.chi()) * (1.0 - std::polar(1.0, -2.0 * p.phi));
    return std::norm(v);
}

double qmax_closed_form() { return (5.0 * std::sqrt(5.0) - 11.0) / 2.0; }

QmaxResult qmax_solve(double grid_step_deg) {
    if (!(grid_step_deg > 0.0 && grid_step_deg <= 10.0)) throw ValidationError("grid step must be in (0, 10] degrees");
    auto q = [](double t, double f) {
        if (std::abs(t - kPi / 2) < 1e-12 && std::abs(f - kPi / 2) < 1e-12) return 0.0;
        return hardy_q({t, f});
    };
    QmaxResult best{0.0, 0.0, -1.0};
    const int steps = static_cast<int>(std::round(90.0 / grid_step_deg));
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j <= steps; ++j) {
            double t = deg2rad(i * grid_step_deg), f = deg2rad(j * grid_step_deg);
            double v = q(t, f);
            if (v > best.q) best = {t, f, v};
        }
    // compass search down to 1e-12 rad
    for (double h = deg2rad(grid_step_deg); h > 1e-12;) {
        bool moved = false;
        for (auto [dt, df] : {std::pair{h, 0.0}, {-h, 0.0}, {0.0, h}, {0.0, -h}}) {
            double t = std::clamp(best.theta + dt, 0.0, kPi / 2), f = std::clamp(best.phi + df, 0.0, kPi / 2);
            double v = q(t, f);
            if (v > best.q) {
                best = {t, f, v};
                moved = true;
            }
        }
        if (!moved) h /= 2;
    }
    return best;
}

void NoiseModel::validate() const {
    auto prob = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!prob(depolarizing) || !prob(readout_0to1) || !prob(readout_1to0))
        throw ValidationError("noise probabilities must lie in [0, 1]");
    if (shots < 1) throw ValidationError("shots must be positive");
}

std::array<double, 4> noisy_probs(const HardyParams& p, const NoiseModel& noise) {
    noise.validate();
    auto d = distributions(p, circuits::hardy_state(p.theta, p.phi).analytic);
    auto read = [&](int truth, int seen) {
        if (truth == 0) return seen == 0 ? 1.0 - noise.readout_0to1 : noise.readout_0to1;
        return seen == 1 ? 1.0 - noise.readout_1to0 : noise.readout_1to0;
    };
    std::array<double, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) {
        double acc = 0.0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                double pt = (1.0 - noise.depolarizing) * d[k][static_cast<std::size_t>(2 * a + b)] + noise.depolarizing / 4.0;
                acc += pt * read(a, kTarget[k][0]) * read(b, kTarget[k][1]);
            }
        out[k] = acc;
    }
    return out;
}

double SampleSet::mean() const {
    if (values.empty()) throw ValidationError("empty sample set");
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double SampleSet::sd() const {
    if (values.size() < 2) throw ValidationError("standard deviation needs n >= 2");
    const double m = mean();
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

std::array<SampleSet, 4> noisy_sample(const HardyParams& p, const NoiseModel& noise, int n_runs, std::uint64_t seed) {
    if (n_runs < 1) throw ValidationError("n_runs must be positive");
    auto probs = noisy_probs(p, noise);
    std::array<SampleSet, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
        for (int r = 0; r < n_runs; ++r) {
            std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(r), k));
            std::binomial_distribution<int> bin(noise.shots, std::clamp(probs[k], 0.0, 1.0));
            out[k].values.push_back(static_cast<double>(bin(rng)) / noise.shots);
        }
    }
    return out;
}

double t_quantile(double alpha, double nu) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha must lie in (0, 1)");
    if (!(nu > 0.0)) throw ValidationError("degrees of freedom must be positive");
    boost::math::students_t dist(nu);
    return boost::math::quantile(boost::math::complement(dist, alpha / 2.0));
}

std::pair<double, double> t_ci(const SampleSet& s, double alpha) {
    if (s.n() < 2) throw ValidationError("confidence interval needs n >= 2");
    const double half = t_quantile(alpha, static_cast<double>(s.n() - 1)) * s.sd() / std::sqrt(static_cast<double>(s.n()));
    return {s.mean() - half, s.mean() + half};
}

double diff_lower_bound(const SampleSet& x, const SampleSet& y, double alpha) {
    if (x.n() < 2 || x.n() != y.n()) throw ValidationError("difference bound needs two sets of equal size >= 2");
    const double n = static_cast<double>(x.n());
    const double sx = x.sd(), sy = y.sd();
    return x.mean() - y.mean() - t_quantile(alpha, n - 1.0) * std::sqrt(sx * sx + sy * sy) / std::sqrt(n);
}

Estimate estimate_qlb(const std::vector<SampleSet>& offline, const SampleSet& online, double alpha) {
    if (offline.empty()) throw ValidationError("offline calibration set is empty");
    Estimate e;
    e.offline_argmax = 0;
    for (std::size_t i = 1; i < offline.size(); ++i)
        if (offline[i].mean() > offline[e.offline_argmax].mean()) e.offline_argmax = i;
    const auto& sigma = offline[e.offline_argmax];
    e.sigma4_bar = sigma.mean();
    e.s_sigma4 = sigma.sd();
    e.eps5_bar = online.mean();
    e.s_eps5 = online.sd();
    e.q_lb_hat = diff_lower_bound(online, sigma, alpha);
    e.delta = e.eps5_bar - e.sigma4_bar - e.q_lb_hat;
    e.nonlocal = e.q_lb_hat > 0.0;
    return e;
}

Experiment run_experiment(const HardyParams& target, const NoiseModel& noise, int n_runs, std::uint64_t seed,
                          double alpha) {
    Experiment ex;
    std::vector<SampleSet> offline;
    const auto catalogue = mes_ps_catalogue_deg();
    for (std::size_t i = 0; i < catalogue.size(); ++i) {
        const HardyParams p{deg2rad(catalogue[i].first), deg2rad(catalogue[i].second)};
        offline.push_back(noisy_sample(p, noise, n_runs, stream_seed(seed, i + 1))[3]);
        ex.offline_means.push_back(offline.back().mean());
    }
    ex.online = noisy_sample(target, noise, n_runs, stream_seed(seed, 0));
    ex.estimate = estimate_qlb(offline, ex.online[3], alpha);
    return ex;
}

double chsh_hardy_lhs(const std::array<double, 4>& eps) { return eps[3] - eps[0] - eps[1] - eps[2]; }

std::vector<std::pair<double, double>> mes_ps_catalogue_deg() {
    std::vector<std::pair<double, double>> out{{45.0, 90.0}};
    for (double f : {0.0, 30.0, 45.0, 60.0, 90.0}) out.emplace_back(0.0, f);
    for (double t : {15.0, 30.0, 45.0, 60.0, 75.0, 90.0}) out.emplace_back(t, 0.0);
    for (double f : {15.0, 30.0, 45.0, 60.0, 75.0}) out.emplace_back(90.0, f);
    return out;
}

}  // namespace indist::hardy
