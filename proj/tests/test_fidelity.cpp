#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "helpers.hpp"
#include "indist/fidelity.hpp"
#include "indist/measures.hpp"
#include "oracles.hpp"

using namespace indist;
using namespace indist::fidelity;

TEST_CASE("singlet fraction matches the magic-basis eigenvalue") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 100; ++i) {
        Mat rho = testing::random_density(4, 1 + i % 4, rng);
        auto r = singlet_fraction_detail(rho);
        CHECK_FALSE(r.flagged);
        CHECK(std::abs(r.value - oracle::singlet_fraction_magic(rho)) < 1e-6);
        CHECK(r.value >= 0.25 - 1e-9);
        CHECK(r.value <= 1.0 + 1e-9);
    }
}

TEST_CASE("singlet fraction is invariant under local unitaries on either side") {
    std::mt19937_64 rng(62);
    for (int i = 0; i < 20; ++i) {
        Mat rho = testing::random_density(4, 2, rng);
        Mat u = random_unitary(2, rng);
        Mat w = Eigen::kroneckerProduct(Mat::Identity(2, 2), u).eval();
        Mat v = Eigen::kroneckerProduct(u, Mat::Identity(2, 2)).eval();
        CHECK(std::abs(singlet_fraction(rho) - singlet_fraction(w * rho * w.adjoint())) < 1e-6);
        CHECK(std::abs(singlet_fraction(rho) - singlet_fraction(v * rho * v.adjoint())) < 1e-6);
    }
}

TEST_CASE("average teleportation fidelity is (2F + 1)/3") {
    std::mt19937_64 rng(63);
    for (int i = 0; i < 30; ++i) {
        Mat rho = testing::random_density(4, 1 + i % 4, rng);
        const double f = singlet_fraction(rho);
        CHECK(std::abs(average_teleport_fidelity(rho) - (2 * f + 1) / 3) < 1e-6);
    }
}

TEST_CASE("Bell channel teleports every input perfectly") {
    Vec b(4);
    b << 1, 0, 0, 1;
    b /= std::sqrt(2.0);
    Mat rho = b * b.adjoint();
    for (const auto& in : axis_inputs()) CHECK(teleport_fidelity(rho, in) == doctest::Approx(1.0));
}

TEST_CASE("DIsHHES: pairwise singlet fractions 1/2, generalized value 1") {
    for (double t : {0.3, kPi / 4, 1.1}) {
        auto rho = dishhes_state(t, 0.7);
        auto g = generalized_singlet_fraction(rho, reference_layout(Kind::distinguishable, 2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(std::abs(g.pairs(i, j) - 0.5) < 1e-4);
        CHECK(std::abs(g.value - 1.0) < 1e-4);
    }
}

TEST_CASE("HHES reaches F_g = 2 with label erasure and only 1 with the literal trace") {
    auto proj = measures::hhes_projected(circuits::ParticleKind::boson, {});
    CHECK(std::abs(generalized_singlet_fraction(proj, hhes_layout(TraceMode::erase)).value - 2.0) < 1e-4);
    CHECK(std::abs(generalized_singlet_fraction(proj, hhes_layout(TraceMode::literal)).value - 1.0) < 1e-4);
}

TEST_CASE("distinguishable generalized singlet fraction stays below 1 + (n-1)/d") {
    for (int n : {1, 2, 3}) {
        auto b = sf_upper_bound_check(n, 20, 64);
        CHECK(b.violations == 0);
        CHECK(b.max_seen <= b.bound + 1e-6);
    }
}

TEST_CASE("n = 1 relation reduces to f = (2F + 1)/3") {
    auto l = reference_layout(Kind::distinguishable, 1);
    auto params = FidelityParams::defaults(l);
    for (double p : {0.0, 0.25, 0.6, 1.0}) {
        auto r = relation_check(p, l, params);
        CHECK(std::abs(r.f_g - (2 * r.F_g + 1) / 3) < 1e-9);
        CHECK(std::abs(r.residual) < 1e-6);
    }
}

TEST_CASE("indistinguishable relation holds on the erase layout") {
    for (int n : {1, 2, 3}) {
        auto l = reference_layout(Kind::indistinguishable, n);
        auto params = FidelityParams::defaults(l);
        for (double p : {0.0, 0.5, 1.0}) CHECK(std::abs(relation_check(p, l, params).residual) < 1e-6);
    }
}

TEST_CASE("measured parameters close the distinguishable relation") {
    auto l = reference_layout(Kind::distinguishable, 2);
    auto params = measured_params(l);
    for (double p : {0.0, 0.5, 1.0}) CHECK(std::abs(relation_check(p, l, params).residual) < 1e-6);
}

TEST_CASE("parameter validation") {
    auto l = reference_layout(Kind::distinguishable, 2);
    CHECK_THROWS_AS((FidelityParams{2.0, 1.0}.validate(l)), ValidationError);
    CHECK_THROWS_AS(two_param_state(1.5, Kind::distinguishable, 2), ValidationError);
    CHECK_THROWS_AS(reference_layout(Kind::distinguishable, 0), ValidationError);
    CHECK_THROWS_AS(kind_from_string("classical"), ValidationError);
}
