#pragma once

#include <random>

#include "indist/qstate.hpp"
#include "indist/rng.hpp"

namespace testing {

using namespace indist;

inline double max_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Same basis and entries within tol.
inline bool same(const DensityMatrix& a, const DensityMatrix& b, double tol = 1e-9) {
    return a.basis() == b.basis() && max_diff(a.data(), b.data()) <= tol;
}

inline cplx gauss(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    return {g(rng), g(rng)};
}

inline std::vector<DofSpec> qubit_dofs(int n) {
    std::vector<DofSpec> d;
    for (int j = 0; j < n; ++j) d.push_back({"d" + std::to_string(j), {"0", "1"}});
    return d;
}

inline std::vector<int> bits(int x, int n) {
    std::vector<int> v;
    for (int j = n - 1; j >= 0; --j) v.push_back((x >> j) & 1);
    return v;
}

// Random pure state of two indistinguishable particles, one in "s1" and one
// in "s2", each carrying n qubit DoFs.
inline SymState random_two_region(Statistics st, int n, std::mt19937_64& rng) {
    SymState s(st, qubit_dofs(n));
    for (int x = 0; x < (1 << n); ++x)
        for (int y = 0; y < (1 << n); ++y) s.add({Ket{-1, "s1", bits(x, n)}, Ket{-1, "s2", bits(y, n)}}, gauss(rng));
    return normalize(s);
}

inline Mat random_density(int dim, int rank, std::mt19937_64& rng) {
    Mat g(dim, rank);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = gauss(rng);
    Mat r = g * g.adjoint();
    return r / r.trace().real();
}

}  // namespace testing
