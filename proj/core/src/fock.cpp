#include "fock.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace indist::detail {

std::optional<Branch> annihilate(const KetTuple& t, const Ket& mode, Statistics s) {
    auto first = std::lower_bound(t.begin(), t.end(), mode);
    if (first == t.end() || *first != mode) return std::nullopt;
    auto last = std::upper_bound(first, t.end(), mode);
    auto pos = first - t.begin();
    double n = static_cast<double>(last - first);
    cplx c = 1.0;
    if (s == Statistics::boson) c = std::sqrt(n);
    if (s == Statistics::fermion && pos % 2 == 1) c = -1.0;
    KetTuple out = t;
    out.erase(out.begin() + pos);
    return Branch{std::move(out), c};
}

std::optional<Branch> create(const KetTuple& t, const Ket& mode, Statistics s) {
    auto first = std::lower_bound(t.begin(), t.end(), mode);
    auto last = std::upper_bound(first, t.end(), mode);
    auto pos = first - t.begin();
    double n = static_cast<double>(last - first);
    cplx c = 1.0;
    if (s == Statistics::fermion) {
        if (n > 0) return std::nullopt;
        if (pos % 2 == 1) c = -1.0;
    } else if (s == Statistics::boson) {
        c = std::sqrt(n + 1.0);
    } else if (n > 0) {
        return std::nullopt;
    }
    KetTuple out = t;
    out.insert(out.begin() + pos, mode);
    return Branch{std::move(out), c};
}

DensityMatrix apply_kraus(const DensityMatrix& rho, const std::vector<KrausOp>& ops, bool renormalize) {
    const auto n = static_cast<Eigen::Index>(rho.dim());
    // images[k][i] = K_k |basis_i>
    std::vector<std::vector<std::vector<Branch>>> images(ops.size());
    std::set<KetTuple> targets;
    for (std::size_t k = 0; k < ops.size(); ++k) {
        images[k].resize(rho.dim());
        for (std::size_t i = 0; i < rho.dim(); ++i) {
            std::map<KetTuple, cplx> merged;
            for (auto& b : ops[k](rho.basis()[i])) merged[b.kets] += b.coeff;
            for (auto& [kets, c] : merged) {
                if (std::abs(c) < 1e-15) continue;
                targets.insert(kets);
                images[k][i].push_back(Branch{kets, c});
            }
        }
    }
    std::vector<KetTuple> basis(targets.begin(), targets.end());
    auto index = [&](const KetTuple& t) {
        return static_cast<Eigen::Index>(std::lower_bound(basis.begin(), basis.end(), t) - basis.begin());
    };
    const auto m = static_cast<Eigen::Index>(basis.size());
    Mat out = Mat::Zero(m, m);
    for (std::size_t k = 0; k < ops.size(); ++k) {
        std::vector<std::vector<std::pair<Eigen::Index, cplx>>> cols(rho.dim());
        for (std::size_t i = 0; i < rho.dim(); ++i)
            for (auto& b : images[k][i]) cols[i].emplace_back(index(b.kets), b.coeff);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (cols[i].empty()) continue;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (cols[j].empty()) continue;
                cplx r = rho.data()(i, j);
                if (r == cplx{}) continue;
                for (auto& [a, ka] : cols[i])
                    for (auto& [b, kb] : cols[j]) out(a, b) += ka * r * std::conj(kb);
            }
        }
    }
    DensityMatrix result(rho.statistics(), rho.dofs(), std::move(basis), std::move(out));
    return renormalize ? result.normalized() : result;
}

}  // namespace indist::detail
