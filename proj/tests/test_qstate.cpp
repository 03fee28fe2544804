#include <doctest.h>

#include "helpers.hpp"

using namespace indist;

TEST_CASE("fermion tuples obey exclusion and antisymmetry") {
    SymState s(Statistics::fermion, testing::qubit_dofs(1));
    Ket a{-1, "s1", {0}}, b{-1, "s2", {1}};
    s.add({a, a}, 1.0);
    CHECK(s.terms().empty());
    s.add({b, a}, 1.0);
    CHECK(s.amplitude({a, b}) == cplx{-1.0});
    CHECK(s.amplitude({b, a}) == cplx{1.0});
}

TEST_CASE("boson amplitudes are symmetric and double occupancy carries m!") {
    SymState s(Statistics::boson, testing::qubit_dofs(1));
    Ket a{-1, "s1", {0}}, b{-1, "s2", {1}};
    s.add({b, a}, 2.0);
    CHECK(s.amplitude({a, b}) == cplx{2.0});
    CHECK(occupation_factor({a, a}) == doctest::Approx(2.0));
    SymState d(Statistics::boson, testing::qubit_dofs(1));
    d.add({a, a}, 1.0);
    CHECK(norm2(d) == doctest::Approx(2.0));
    auto rho = to_density(normalize(d));
    CHECK(rho.trace() == doctest::Approx(1.0));
    CHECK(rho.purity() == doctest::Approx(1.0));
}

TEST_CASE("symmetric inner product of orthogonal two-particle states vanishes") {
    SymState x(Statistics::fermion, testing::qubit_dofs(1)), y(Statistics::fermion, testing::qubit_dofs(1));
    x.add({Ket{-1, "s1", {0}}, Ket{-1, "s2", {0}}}, 1.0);
    y.add({Ket{-1, "s1", {1}}, Ket{-1, "s2", {0}}}, 1.0);
    CHECK(std::abs(symmetric_inner(x, y)) < 1e-15);
    CHECK(std::abs(symmetric_inner(x, x) - 1.0) < 1e-15);
}

TEST_CASE("density matrices from random states are valid and mixing keeps validity") {
    std::mt19937_64 rng(11);
    for (auto st : {Statistics::boson, Statistics::fermion}) {
        auto a = to_density(testing::random_two_region(st, 2, rng));
        auto b = to_density(testing::random_two_region(st, 2, rng));
        CHECK(a.is_valid());
        auto m = mix({{0.3, a}, {0.7, b}});
        CHECK(m.is_valid());
        CHECK(m.purity() < 1.0);
    }
}

TEST_CASE("bad labels and empty states are rejected") {
    DofSpec d{"spin", {"down", "up"}};
    CHECK_THROWS_AS(d.index_of("sideways"), ValidationError);
    SymState s(Statistics::boson, testing::qubit_dofs(1));
    CHECK_THROWS(normalize(s));
}
