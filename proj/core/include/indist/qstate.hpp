#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indist/types.hpp"

namespace indist {

enum class Statistics { boson, fermion, distinguishable };

// +1 for bosons, -1 for fermions; distinguishable particles never permute so
// callers should not ask.
int eta(Statistics s);
std::string to_string(Statistics s);
Statistics statistics_from_string(std::string_view name);

struct DofSpec {
    std::string name;
    std::vector<std::string> labels;

    int dim() const { return static_cast<int>(labels.size()); }
    int index_of(std::string_view label) const;  // throws ValidationError
    void validate() const;
};

// Marks a DoF that has been traced out of a slot.
inline constexpr int kAbsent = -1;

// One single-particle slot: region label plus one eigenvalue index per DoF.
// `particle` is only set (>= 0) for distinguishable particles; for those the
// region string doubles as a readable particle tag.
struct Ket {
    int particle = -1;
    std::string region;
    std::vector<int> dofs;

    auto operator<=>(const Ket&) const = default;
    bool empty() const;  // every DoF traced
};

using KetTuple = std::vector<Ket>;

// Sparse amplitude map over canonical (sorted) ket tuples.
//
// For indistinguishable particles a tuple T stands for the symmetrized ket
// |t1,...,tp> = (p!)^(-1/2) sum_sigma eta^sigma |t_sigma(1)>...|t_sigma(p)>,
// whose inner products are permanents (bosons) or determinants (fermions).
class SymState {
public:
    SymState(Statistics stats, std::vector<DofSpec> dofs);

    // Adds amp * |kets>. The tuple is sorted and the fermionic parity sign is
    // folded into the amplitude. Pauli-excluded fermion tuples are dropped.
    void add(KetTuple kets, cplx amp);

    Statistics statistics() const { return stats_; }
    const std::vector<DofSpec>& dofs() const { return dofs_; }
    const std::map<KetTuple, cplx>& terms() const { return terms_; }
    std::size_t particles() const { return particles_; }

    // Amplitude for a tuple given in any order (sign applied).
    cplx amplitude(KetTuple kets) const;
    SymState scaled(cplx factor) const;

    // Convenience: make a slot from labels, e.g. ket("s1", {"L", "up"}).
    Ket ket(std::string region, const std::vector<std::string>& labels,
            int particle = -1) const;

private:
    void check_ket(const Ket& k) const;

    Statistics stats_;
    std::vector<DofSpec> dofs_;
    std::map<KetTuple, cplx> terms_;
    std::size_t particles_ = 0;
};

// Sorts `kets` in place and returns the permutation parity (+1 or -1).
int canonicalize(KetTuple& kets);

// Bosonic occupation factor prod_k m_k! of a canonical tuple.
double occupation_factor(const KetTuple& kets);

cplx symmetric_inner(const SymState& a, const SymState& b);
double norm2(const SymState& s);
SymState normalize(const SymState& s);

// Density matrix over an orthonormal basis of occupation-number kets. A basis
// entry is a canonical tuple; for bosons with repeated slots it denotes the
// normalized state |T>/sqrt(prod m_k!).
class DensityMatrix {
public:
    DensityMatrix(Statistics stats, std::vector<DofSpec> dofs,
                  std::vector<KetTuple> basis, Mat data);

    Statistics statistics() const { return stats_; }
    const std::vector<DofSpec>& dofs() const { return dofs_; }
    const std::vector<KetTuple>& basis() const { return basis_; }
    const Mat& data() const { return data_; }
    std::size_t dim() const { return basis_.size(); }

    double trace() const;
    double purity() const;
    // Hermitian, PSD and unit trace within tol.
    bool is_valid(double tol = 1e-9) const;
    std::ptrdiff_t index_of(const KetTuple& t) const;  // -1 when missing
    DensityMatrix normalized() const;

private:
    Statistics stats_;
    std::vector<DofSpec> dofs_;
    std::vector<KetTuple> basis_;
    Mat data_;
};

DensityMatrix to_density(const SymState& s);
DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& parts);

}  // namespace indist
