#include <doctest.h>

#include "helpers.hpp"
#include "indist/circuits.hpp"
#include "indist/measurement.hpp"
#include "oracles.hpp"

using namespace indist;
using namespace indist::circuits;
using measurement::Observable;

namespace {

// Cell predicates in the library's outcome order.
bool ext_a(int m, int r) { return m / 2 == (r == 0 ? oracle::D : oracle::L); }
bool ext_b(int m, int c) { return m / 2 == (c == 0 ? oracle::R : oracle::U); }
bool in(int m, int v) { return m % 2 == v; }

void compare(ParticleKind kind, const PhaseConfig& p, bool swap_variant) {
    const int eta = kind == ParticleKind::boson ? 1 : kind == ParticleKind::fermion ? -1 : 0;
    auto o = oracle::li_first_quantized(eta, p.phi_L, p.phi_D, p.phi_R, p.phi_U, swap_variant);
    auto lib = measurement::circuit_tables(swap_variant ? swap_circuit(p) : li_circuit(kind, p));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const double ee = oracle::coincidence(o, [&](int m) { return ext_a(m, r); }, [&](int m) { return ext_b(m, c); });
            const double ii = oracle::coincidence(o, [&](int m) { return in(m, r); }, [&](int m) { return in(m, c); });
            const double ie = oracle::coincidence(o, [&](int m) { return in(m, r); }, [&](int m) { return ext_b(m, c); });
            const double ei = oracle::coincidence(o, [&](int m) { return ext_a(m, r); }, [&](int m) { return in(m, c); });
            CHECK(std::abs(lib[0].probs[r][c] - ee) < 1e-12);
            CHECK(std::abs(lib[1].probs[r][c] - ii) < 1e-12);
            CHECK(std::abs(lib[2].probs[r][c] - ie) < 1e-12);
            CHECK(std::abs(lib[3].probs[r][c] - ei) < 1e-12);
        }
}

}  // namespace

TEST_CASE("second-quantized circuit matches a first-quantized simulation") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int i = 0; i < 20; ++i) {
        PhaseConfig p{u(rng), u(rng), u(rng), u(rng)};
        compare(ParticleKind::boson, p, false);
        compare(ParticleKind::fermion, p, false);
        compare(ParticleKind::distinguishable, p, false);
        compare(ParticleKind::boson, p, true);
    }
}

TEST_CASE("circuit outputs are normalized states") {
    for (auto k : {ParticleKind::boson, ParticleKind::fermion, ParticleKind::distinguishable})
        CHECK(norm2(li_circuit(k, {0.1, 0.2, 0.3, 0.4})) == doctest::Approx(1.0));
}

TEST_CASE("sorter cascade is a probability distribution") {
    auto d = sorter_cascade(5, cplx{0.6}, cplx{0.0, 0.8});
    double sum = 0.0;
    for (double x : d) sum += x;
    CHECK(sum == doctest::Approx(1.0));
    CHECK(d.front() == doctest::Approx(std::pow(0.36, 5)));
    CHECK_THROWS_AS(sorter_cascade(0, 1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(sorter_cascade(3, 0.0, 0.0), ValidationError);
}

TEST_CASE("gates are unitary") {
    for (const Mat& g : {u1(0.3), u3(0.4, 0.5, 0.6), cnot(), beam_splitter(0.7)}) {
        const auto n = g.rows();
        CHECK(testing::max_diff(g * g.adjoint(), Mat::Identity(n, n)) < 1e-12);
    }
}

TEST_CASE("gate-built Hardy state equals the analytic one") {
    for (double t : {0.1, 0.5, 0.9045, 1.3})
        for (double f : {0.2, 0.9045, 1.4}) {
            auto h = hardy_state(t, f);
            CHECK((h.analytic - h.gate_built).norm() < 1e-12);
        }
}
