#include "indist/trace.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fock.hpp"

namespace indist::trace {

using detail::Branch;
using detail::KrausOp;

namespace {

bool one_per_region(const KetTuple& t, const std::vector<std::string>& regions) {
    std::map<std::string, int> count;
    for (const auto& k : t) count[k.region]++;
    for (const auto& [r, n] : count)
        if (n != 1 || std::find(regions.begin(), regions.end(), r) == regions.end()) return false;
    return count.size() == regions.size();
}

void check_distinct(const std::vector<std::string>& regions) {
    std::set<std::string> s(regions.begin(), regions.end());
    if (s.size() != regions.size()) throw ValidationError("regions must be distinct");
}

void check_region(const DensityMatrix& rho, const std::string& region) {
    for (const auto& t : rho.basis())
        for (const auto& k : t)
            if (k.region == region) return;
    throw ValidationError("unknown region '" + region + "'");
}

std::set<Ket> modes_in(const DensityMatrix& rho, const std::string& region) {
    std::set<Ket> out;
    for (const auto& t : rho.basis())
        for (const auto& k : t)
            if (k.region == region) out.insert(k);
    return out;
}

// b_to^dagger a_from |t>
std::vector<Branch> move(const KetTuple& t, const Ket& from, const Ket& to, Statistics s) {
    auto a = detail::annihilate(t, from, s);
    if (!a) return {};
    auto c = detail::create(a->kets, to, s);
    if (!c) return {};
    return {Branch{c->kets, a->coeff * c->coeff}};
}

// all branches of sum_{u: region x, dof j == m} move(u -> u with j absent)
std::vector<Branch> strip(const KetTuple& t, const std::string& region, int dof, int m, Statistics s) {
    std::vector<Branch> out;
    std::set<Ket> seen;
    for (const auto& u : t) {
        if (u.region != region || u.dofs[static_cast<std::size_t>(dof)] != m || !seen.insert(u).second) continue;
        Ket v = u;
        v.dofs[static_cast<std::size_t>(dof)] = kAbsent;
        for (auto& b : move(t, u, v, s)) out.push_back(std::move(b));
    }
    return out;
}

int check_dof(const DensityMatrix& rho, const std::optional<int>& dof) {
    if (!dof) throw ValidationError("subsystem has no DoF index");
    if (*dof < 0 || *dof >= static_cast<int>(rho.dofs().size())) throw ValidationError("DoF index out of range");
    return *dof;
}

}  // namespace

DensityMatrix project_one_per_region(const DensityMatrix& rho, const std::vector<std::string>& regions) {
    check_distinct(regions);
    std::vector<KetTuple> basis;
    std::vector<Eigen::Index> keep;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        if (one_per_region(rho.basis()[i], regions)) {
            basis.push_back(rho.basis()[i]);
            keep.push_back(static_cast<Eigen::Index>(i));
        }
    }
    Mat data(static_cast<Eigen::Index>(keep.size()), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            data(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = rho.data()(keep[a], keep[b]);
    DensityMatrix out(rho.statistics(), rho.dofs(), std::move(basis), std::move(data));
    if (!(out.trace() > 1e-14)) throw DegenerateStateError("projection onto one particle per region is empty");
    return out.normalized();
}

SymState project_one_per_region(const SymState& s, const std::vector<std::string>& regions) {
    check_distinct(regions);
    SymState out(s.statistics(), s.dofs());
    for (const auto& [t, amp] : s.terms())
        if (one_per_region(t, regions)) out.add(t, amp);
    if (out.terms().empty()) throw DegenerateStateError("projection onto one particle per region is empty");
    return normalize(out);
}

DensityMatrix trace_region(const DensityMatrix& rho, const std::string& region) {
    check_region(rho, region);
    std::vector<KrausOp> ops;
    const auto stats = rho.statistics();
    for (const auto& m : modes_in(rho, region)) {
        ops.emplace_back([m, stats](const KetTuple& t) {
            auto b = detail::annihilate(t, m, stats);
            return b ? std::vector<Branch>{*b} : std::vector<Branch>{};
        });
    }
    return detail::apply_kraus(rho, ops, true);
}

DensityMatrix trace_dof_indist(const DensityMatrix& rho, const Subsystem& sub) {
    if (rho.statistics() == Statistics::distinguishable)
        throw ValidationError("trace_dof_indist needs an indistinguishable representation");
    int dof = check_dof(rho, sub.dof);
    check_region(rho, sub.region);
    std::vector<KrausOp> ops;
    const auto stats = rho.statistics();
    for (int m = 0; m < rho.dofs()[static_cast<std::size_t>(dof)].dim(); ++m)
        ops.emplace_back([=, region = sub.region](const KetTuple& t) { return strip(t, region, dof, m, stats); });
    return detail::apply_kraus(rho, ops, true);
}

DensityMatrix trace_dof_dist(const DensityMatrix& rho, int particle, int dof) {
    if (rho.statistics() != Statistics::distinguishable)
        throw ValidationError("trace_dof_dist needs a distinguishable representation");
    if (dof < 0 || dof >= static_cast<int>(rho.dofs().size())) throw ValidationError("DoF index out of range");
    bool found = false;
    for (const auto& t : rho.basis())
        for (const auto& k : t) found = found || k.particle == particle;
    if (!found) throw ValidationError("particle index out of range");
    std::vector<KrausOp> ops;
    for (int m = 0; m < rho.dofs()[static_cast<std::size_t>(dof)].dim(); ++m) {
        ops.emplace_back([=](const KetTuple& t) {
            KetTuple out = t;
            for (auto& k : out) {
                if (k.particle != particle) continue;
                if (k.dofs[static_cast<std::size_t>(dof)] != m) return std::vector<Branch>{};
                k.dofs[static_cast<std::size_t>(dof)] = kAbsent;
                return std::vector<Branch>{Branch{out, 1.0}};
            }
            return std::vector<Branch>{};
        });
    }
    return detail::apply_kraus(rho, ops, true);
}

DensityMatrix particle_trace_lofranco(const SymState& s, const std::optional<std::string>& region) {
    if (s.particles() != 2 || s.dofs().size() != 1)
        throw ValidationError("Lo Franco trace needs two particles with one DoF each");
    if (s.statistics() == Statistics::distinguishable)
        throw ValidationError("Lo Franco trace is for indistinguishable particles");
    auto rho = to_density(normalize(s));
    std::set<Ket> modes;
    for (const auto& t : rho.basis())
        for (const auto& k : t)
            if (!region || k.region == *region) modes.insert(k);
    if (modes.empty()) throw DegenerateStateError("localized norm is zero");
    std::vector<KrausOp> ops;
    const auto stats = s.statistics();
    for (const auto& m : modes) {
        ops.emplace_back([m, stats](const KetTuple& t) {
            auto b = detail::annihilate(t, m, stats);
            return b ? std::vector<Branch>{*b} : std::vector<Branch>{};
        });
    }
    auto out = detail::apply_kraus(rho, ops, false);
    if (!(out.trace() > 1e-14)) throw DegenerateStateError("localized norm is zero");
    return out.normalized();
}

DensityMatrix erase_dof_label(const DensityMatrix& rho, const Subsystem& sub) {
    if (rho.statistics() == Statistics::distinguishable)
        throw ValidationError("erase_dof_label needs an indistinguishable representation");
    int dof = check_dof(rho, sub.dof);
    check_region(rho, sub.region);
    const auto stats = rho.statistics();
    const int dim = rho.dofs()[static_cast<std::size_t>(dof)].dim();
    KrausOp op = [=, region = sub.region](const KetTuple& t) {
        std::vector<Branch> out;
        for (int m = 0; m < dim; ++m)
            for (auto& b : strip(t, region, dof, m, stats)) out.push_back(std::move(b));
        return out;
    };
    return detail::apply_kraus(rho, {op}, true);
}

DensityMatrix drop_empty_slots(const DensityMatrix& rho) {
    const auto stats = rho.statistics();
    KrausOp op = [stats](const KetTuple& t) {
        Branch cur{t, 1.0};
        for (std::size_t i = cur.kets.size(); i-- > 0;) {
            if (!cur.kets[i].empty()) continue;
            Ket ghost = cur.kets[i];
            auto b = detail::annihilate(cur.kets, ghost, stats);
            cur = Branch{b->kets, cur.coeff * b->coeff};
        }
        return std::vector<Branch>{cur};
    };
    return detail::apply_kraus(rho, {op}, true);
}

QubitAxis axis(const DensityMatrix& rho, std::string region, const std::string& dof_name,
               const std::string& label0, const std::string& label1) {
    for (std::size_t j = 0; j < rho.dofs().size(); ++j) {
        const auto& d = rho.dofs()[j];
        if (d.name == dof_name)
            return QubitAxis{std::move(region), static_cast<int>(j), d.index_of(label0), d.index_of(label1)};
    }
    throw ValidationError("unknown DoF '" + dof_name + "'");
}

Mat qubit_view(const DensityMatrix& rho, const std::vector<QubitAxis>& axes) {
    const auto k = axes.size();
    if (k == 0 || k > 12) throw ValidationError("qubit_view needs 1..12 axes");
    std::vector<Eigen::Index> code(rho.dim());
    std::set<Eigen::Index> used;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        const auto& t = rho.basis()[i];
        Eigen::Index c = 0;
        for (const auto& ax : axes) {
            const Ket* slot = nullptr;
            for (const auto& s : t) {
                if (s.region != ax.region) continue;
                if (slot) throw ValidationError("region " + ax.region + " holds more than one particle");
                slot = &s;
            }
            if (!slot) throw ValidationError("region " + ax.region + " is empty in a basis tuple");
            int v = slot->dofs[static_cast<std::size_t>(ax.dof)];
            int bit = v == ax.label0 ? 0 : v == ax.label1 ? 1 : -1;
            if (bit < 0) throw ValidationError("non-qubit value on axis in region " + ax.region);
            c = 2 * c + bit;
        }
        if (!used.insert(c).second) throw ValidationError("axes do not resolve the basis; trace other DoFs first");
        code[i] = c;
    }
    const Eigen::Index dim = Eigen::Index{1} << k;
    Mat out = Mat::Zero(dim, dim);
    for (std::size_t a = 0; a < rho.dim(); ++a)
        for (std::size_t b = 0; b < rho.dim(); ++b)
            out(code[a], code[b]) = rho.data()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    return out;
}

}  // namespace indist::trace
