#include <doctest.h>

#include "helpers.hpp"
#include "indist/circuits.hpp"
#include "indist/hardy.hpp"
#include "oracles.hpp"

using namespace indist;
using namespace indist::hardy;

TEST_CASE("maximum Hardy probability") {
    const double d = deg2rad(51.827);
    CHECK(std::abs(hardy_q({d, d}) - qmax_closed_form()) < 1e-9);
    auto m = qmax_solve();
    CHECK(std::abs(m.q - qmax_closed_form()) < 1e-12);
    CHECK(std::abs(rad2deg(m.theta) - 51.827) < 1e-3);
    CHECK(std::abs(rad2deg(m.phi) - 51.827) < 1e-3);
}

TEST_CASE("three Hardy conditions vanish and the fourth equals q") {
    for (double t : {20.0, 45.0, 51.827, 70.0})
        for (double f : {10.0, 51.827, 80.0}) {
            HardyParams p{deg2rad(t), deg2rad(f)};
            auto pr = hardy_probs(p);
            CHECK(pr[0] < 1e-12);
            CHECK(pr[1] < 1e-12);
            CHECK(pr[2] < 1e-12);
            CHECK(std::abs(pr[3] - hardy_q(p)) < 1e-12);
            auto g = hardy_probs(p, circuits::hardy_state(p.theta, p.phi).gate_built);
            for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(g[k] - pr[k]) < 1e-9);
        }
}

TEST_CASE("MES and product states have q = 0") {
    for (auto [t, f] : mes_ps_catalogue_deg()) CHECK(hardy_q({deg2rad(t), deg2rad(f)}) < 1e-12);
}

TEST_CASE("chi is undefined at theta = phi = 90 degrees") {
    CHECK_THROWS_AS((HardyParams{kPi / 2, kPi / 2}.chi()), ValidationError);
    CHECK_NOTHROW((HardyParams{deg2rad(89.99), deg2rad(89.99)}.chi()));
}

TEST_CASE("Student t quantiles match the table") {
    for (auto row : oracle::kT9) CHECK(std::abs(t_quantile(row.alpha, 9) - row.t) < 5e-6);
    CHECK_THROWS_AS(t_quantile(0.0, 9), ValidationError);
    CHECK_THROWS_AS(t_quantile(0.05, 0), ValidationError);
}

TEST_CASE("confidence interval width scales as 1/sqrt(n)") {
    auto make = [](int n) {
        SampleSet s;
        for (int i = 0; i < n; ++i) s.values.push_back(i % 2 ? 1.0 : -1.0);
        return s;
    };
    auto w = [&](int n) {
        auto s = make(n);
        auto [lo, hi] = t_ci(s, 0.05);
        return (hi - lo) / t_quantile(0.05, n - 1) / s.sd();
    };
    CHECK(std::abs(w(10) / w(40) - 2.0) < 0.04);
}

TEST_CASE("noise model: zero noise reproduces ideal probabilities, readout only moves mass") {
    HardyParams p{deg2rad(51.827), deg2rad(51.827)};
    NoiseModel none{0.0, 0.0, 0.0, 8192};
    auto a = noisy_probs(p, none), b = hardy_probs(p);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-12);
    auto c = noisy_probs(p, {});
    CHECK(std::abs(c[3] - 0.1281) < 5e-4);
    CHECK_THROWS_AS(noisy_probs(p, NoiseModel{1.5, 0.0, 0.0, 10}), ValidationError);
}

TEST_CASE("sampling is deterministic per seed and the estimator separates large q from zero") {
    HardyParams p{deg2rad(51.827), deg2rad(51.827)};
    NoiseModel nm;
    auto s1 = noisy_sample(p, nm, 10, 5), s2 = noisy_sample(p, nm, 10, 5);
    CHECK(s1[3].values == s2[3].values);
    auto hi = run_experiment(p, nm, 10, 5, 0.01);
    CHECK(hi.estimate.nonlocal);
    auto mes = run_experiment({deg2rad(45.0), deg2rad(90.0)}, nm, 10, 5, 0.01);
    CHECK_FALSE(mes.estimate.nonlocal);
}

TEST_CASE("lower bound decreases as alpha shrinks") {
    HardyParams p{deg2rad(55.0), deg2rad(55.0)};
    auto a = run_experiment(p, {}, 10, 3, 0.2), b = run_experiment(p, {}, 10, 3, 0.01);
    CHECK(a.estimate.q_lb_hat > b.estimate.q_lb_hat);
}

TEST_CASE("CHSH-form combination of the Hardy probabilities") {
    CHECK(chsh_hardy_lhs({0.01, 0.02, 0.03, 0.1}) == doctest::Approx(0.04));
}
