#pragma once

// Occupation-number bookkeeping shared by the trace and circuit code.

#include <functional>
#include <optional>
#include <vector>

#include "indist/qstate.hpp"

namespace indist::detail {

struct Branch {
    KetTuple kets;
    cplx coeff;
};

// a_mode |T> in the orthonormal occupation basis.
std::optional<Branch> annihilate(const KetTuple& t, const Ket& mode, Statistics s);
// a_mode^dagger |T>.
std::optional<Branch> create(const KetTuple& t, const Ket& mode, Statistics s);

using KrausOp = std::function<std::vector<Branch>(const KetTuple&)>;

// rho -> sum_k K_k rho K_k^dagger, optionally renormalized to unit trace.
DensityMatrix apply_kraus(const DensityMatrix& rho, const std::vector<KrausOp>& ops, bool renormalize);

}  // namespace indist::detail
