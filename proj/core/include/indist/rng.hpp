#pragma once

#include <cstdint>
#include <random>

#include "indist/types.hpp"

namespace indist {

// splitmix64 finalizer; used to derive independent per-task seeds so results
// do not depend on how tasks are scheduled.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t sub = 0) {
    return splitmix64(splitmix64(master ^ splitmix64(stream)) + sub);
}

// Haar-random pure state of dimension dim.
inline Vec random_state(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = cplx{g(rng), g(rng)};
    return v.normalized();
}

// Haar-random unitary via QR of a Ginibre matrix with the phase fix.
inline Mat random_unitary(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat z(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = cplx{g(rng), g(rng)};
    Eigen::HouseholderQR<Mat> qr(z);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; ++i) {
        cplx d = r(i, i);
        q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : cplx{1.0};
    }
    return q;
}

}  // namespace indist
