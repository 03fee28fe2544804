#include "indist/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace indist {

int eta(Statistics s) {
    switch (s) {
        case Statistics::boson: return 1;
        case Statistics::fermion: return -1;
        case Statistics::distinguishable: break;
    }
    throw ValidationError("eta is undefined for distinguishable particles");
}

std::string to_string(Statistics s) {
    switch (s) {
        case Statistics::boson: return "boson";
        case Statistics::fermion: return "fermion";
        case Statistics::distinguishable: return "distinguishable";
    }
    return "?";
}

Statistics statistics_from_string(std::string_view name) {
    if (name == "boson") return Statistics::boson;
    if (name == "fermion") return Statistics::fermion;
    if (name == "distinguishable") return Statistics::distinguishable;
    throw ValidationError("unknown particle kind '" + std::string(name) + "'");
}

int DofSpec::index_of(std::string_view label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw ValidationError("label '" + std::string(label) + "' not in DoF " + name);
    return static_cast<int>(it - labels.begin());
}

void DofSpec::validate() const {
    if (labels.size() < 2) throw ValidationError("DoF " + name + " needs at least two labels");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw ValidationError("DoF " + name + " has repeated labels");
}

bool Ket::empty() const {
    return std::all_of(dofs.begin(), dofs.end(), [](int v) { return v == kAbsent; });
}

int canonicalize(KetTuple& kets) {
    // insertion sort so the parity comes for free; tuples are tiny
    int sign = 1;
    for (std::size_t i = 1; i < kets.size(); ++i) {
        for (std::size_t j = i; j > 0 && kets[j] < kets[j - 1]; --j) {
            std::swap(kets[j], kets[j - 1]);
            sign = -sign;
        }
    }
    return sign;
}

double occupation_factor(const KetTuple& kets) {
    double f = 1.0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= kets.size(); ++i) {
        if (i < kets.size() && kets[i] == kets[i - 1]) {
            ++run;
            f *= static_cast<double>(run);
        } else {
            run = 1;
        }
    }
    return f;
}

SymState::SymState(Statistics stats, std::vector<DofSpec> dofs)
    : stats_(stats), dofs_(std::move(dofs)) {
    for (const auto& d : dofs_) d.validate();
}

void SymState::check_ket(const Ket& k) const {
    if (k.dofs.size() != dofs_.size()) throw ValidationError("ket has wrong number of DoFs");
    for (std::size_t j = 0; j < dofs_.size(); ++j) {
        if (k.dofs[j] != kAbsent && (k.dofs[j] < 0 || k.dofs[j] >= dofs_[j].dim()))
            throw ValidationError("DoF value out of range for " + dofs_[j].name);
    }
    if (k.region.empty()) throw ValidationError("ket without region");
    bool labeled = k.particle >= 0;
    if (labeled != (stats_ == Statistics::distinguishable))
        throw ValidationError("particle labels are required exactly for distinguishable states");
}

void SymState::add(KetTuple kets, cplx amp) {
    if (kets.empty()) throw ValidationError("empty ket tuple");
    if (particles_ == 0) particles_ = kets.size();
    if (kets.size() != particles_) throw ValidationError("inconsistent particle number");
    for (const auto& k : kets) check_ket(k);
    int sign = canonicalize(kets);
    if (stats_ == Statistics::distinguishable) {
        for (std::size_t i = 1; i < kets.size(); ++i)
            if (kets[i].particle == kets[i - 1].particle)
                throw ValidationError("repeated particle label");
        sign = 1;
    } else if (stats_ == Statistics::fermion) {
        for (std::size_t i = 1; i < kets.size(); ++i)
            if (kets[i] == kets[i - 1]) return;  // Pauli
    } else {
        sign = 1;
    }
    auto& slot = terms_[kets];
    slot += static_cast<double>(sign) * amp;
    if (std::abs(slot) < 1e-15) terms_.erase(kets);
}

cplx SymState::amplitude(KetTuple kets) const {
    int sign = canonicalize(kets);
    if (stats_ != Statistics::fermion) sign = 1;
    auto it = terms_.find(kets);
    return it == terms_.end() ? cplx{} : static_cast<double>(sign) * it->second;
}

SymState SymState::scaled(cplx factor) const {
    SymState out = *this;
    for (auto& [k, v] : out.terms_) v *= factor;
    return out;
}

Ket SymState::ket(std::string region, const std::vector<std::string>& labels, int particle) const {
    if (labels.size() != dofs_.size()) throw ValidationError("ket label count mismatch");
    Ket k{particle, std::move(region), {}};
    for (std::size_t j = 0; j < labels.size(); ++j)
        k.dofs.push_back(labels[j] == "-" ? kAbsent : dofs_[j].index_of(labels[j]));
    return k;
}

namespace {

// sum over permutations of eta^sigma prod <a_i|b_sigma(i)> for orthonormal slots
double perm_overlap(const KetTuple& a, const KetTuple& b, Statistics stats) {
    if (a.size() != b.size()) return 0.0;
    if (stats == Statistics::distinguishable) return a == b ? 1.0 : 0.0;
    std::vector<std::size_t> sigma(a.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    double total = 0.0;
    do {
        bool hit = true;
        for (std::size_t i = 0; i < a.size() && hit; ++i) hit = a[i] == b[sigma[i]];
        if (!hit) continue;
        int parity = 1;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            for (std::size_t j = i + 1; j < sigma.size(); ++j)
                if (sigma[i] > sigma[j]) parity = -parity;
        total += stats == Statistics::fermion ? parity : 1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

}  // namespace

cplx symmetric_inner(const SymState& a, const SymState& b) {
    if (a.statistics() != b.statistics()) throw ValidationError("statistics mismatch");
    if (a.dofs().size() != b.dofs().size()) throw ValidationError("DoF shape mismatch");
    for (std::size_t j = 0; j < a.dofs().size(); ++j)
        if (a.dofs()[j].labels != b.dofs()[j].labels) throw ValidationError("DoF shape mismatch");
    cplx acc{};
    // canonical tuples are sorted, so only identical tuples overlap
    for (const auto& [t, amp] : a.terms()) {
        auto it = b.terms().find(t);
        if (it == b.terms().end()) continue;
        acc += std::conj(amp) * it->second * perm_overlap(t, t, a.statistics());
    }
    return acc;
}

double norm2(const SymState& s) { return symmetric_inner(s, s).real(); }

SymState normalize(const SymState& s) {
    double n2 = norm2(s);
    if (!(n2 > 1e-24)) throw DegenerateStateError("state has zero norm");
    return s.scaled(1.0 / std::sqrt(n2));
}

DensityMatrix::DensityMatrix(Statistics stats, std::vector<DofSpec> dofs,
                             std::vector<KetTuple> basis, Mat data)
    : stats_(stats), dofs_(std::move(dofs)), basis_(std::move(basis)), data_(std::move(data)) {
    if (data_.rows() != data_.cols() || static_cast<std::size_t>(data_.rows()) != basis_.size())
        throw ValidationError("density matrix shape does not match its basis");
}

double DensityMatrix::trace() const { return data_.trace().real(); }

double DensityMatrix::purity() const { return (data_ * data_).trace().real(); }

bool DensityMatrix::is_valid(double tol) const {
    if ((data_ - data_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(trace() - 1.0) > tol) return false;
    Eigen::SelfAdjointEigenSolver<Mat> es(data_);
    return es.eigenvalues().minCoeff() >= -tol;
}

std::ptrdiff_t DensityMatrix::index_of(const KetTuple& t) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), t);
    if (it == basis_.end() || *it != t) return -1;
    return it - basis_.begin();
}

DensityMatrix DensityMatrix::normalized() const {
    double tr = trace();
    if (!(tr > 1e-14)) throw DegenerateStateError("density matrix has zero trace");
    return DensityMatrix(stats_, dofs_, basis_, data_ / tr);
}

DensityMatrix to_density(const SymState& s) {
    std::vector<KetTuple> basis;
    Vec c(static_cast<Eigen::Index>(s.terms().size()));
    Eigen::Index i = 0;
    for (const auto& [t, amp] : s.terms()) {
        basis.push_back(t);
        double w = s.statistics() == Statistics::boson ? std::sqrt(occupation_factor(t)) : 1.0;
        c(i++) = amp * w;
    }
    return DensityMatrix(s.statistics(), s.dofs(), std::move(basis), c * c.adjoint());
}

DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& parts) {
    if (parts.empty()) throw ValidationError("empty mixture");
    double wsum = 0.0;
    std::set<KetTuple> all;
    for (const auto& [w, rho] : parts) {
        if (w < 0.0) throw ValidationError("negative mixture weight");
        if (rho.statistics() != parts.front().second.statistics())
            throw ValidationError("mixture of different statistics");
        wsum += w;
        all.insert(rho.basis().begin(), rho.basis().end());
    }
    if (std::abs(wsum - 1.0) > 1e-9) throw ValidationError("mixture weights must sum to 1");
    std::vector<KetTuple> basis(all.begin(), all.end());
    Mat data = Mat::Zero(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(basis.size()));
    for (const auto& [w, rho] : parts) {
        std::vector<Eigen::Index> map;
        for (const auto& t : rho.basis())
            map.push_back(std::lower_bound(basis.begin(), basis.end(), t) - basis.begin());
        for (std::size_t a = 0; a < map.size(); ++a)
            for (std::size_t b = 0; b < map.size(); ++b)
                data(map[a], map[b]) += w * rho.data()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    }
    const auto& first = parts.front().second;
    return DensityMatrix(first.statistics(), first.dofs(), std::move(basis), std::move(data));
}

}  // namespace indist
