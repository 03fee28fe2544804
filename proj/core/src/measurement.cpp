#include "indist/measurement.hpp"

#include <cmath>

namespace indist::measurement {

using circuits::ParticleKind;
using circuits::PhaseConfig;

std::string to_string(Observable o) { return o == Observable::external ? "external" : "internal"; }

Observable observable_from_string(const std::string& s) {
    if (s == "external" || s == "path") return Observable::external;
    if (s == "internal" || s == "spin" || s == "polarization") return Observable::internal;
    throw ValidationError("unknown observable '" + s + "'");
}

double CoincidenceTable::total() const {
    return probs[0][0] + probs[0][1] + probs[1][0] + probs[1][1];
}

namespace {

const Ket* in_region(const KetTuple& t, const char* region) {
    const Ket* hit = nullptr;
    for (const auto& k : t) {
        if (k.region != region) continue;
        if (hit) return nullptr;
        hit = &k;
    }
    return hit;
}

int outcome(const SymState& s, const Ket& k, Observable o, bool alice) {
    if (o == Observable::internal) return k.dofs[1];
    const auto& label = s.dofs()[0].labels[static_cast<std::size_t>(k.dofs[0])];
    if (alice) return label == "D" ? 0 : label == "L" ? 1 : -1;
    return label == "R" ? 0 : label == "U" ? 1 : -1;
}

std::array<std::string, 2> labels_for(const SymState& s, Observable o, bool alice) {
    if (o == Observable::internal) return {s.dofs()[1].labels[0], s.dofs()[1].labels[1]};
    return alice ? std::array<std::string, 2>{"D", "L"} : std::array<std::string, 2>{"R", "U"};
}

}  // namespace

CoincidenceTable coincidence_table(const SymState& state, Observable a, Observable b) {
    if (state.particles() != 2 || state.dofs().size() != 2 || state.dofs()[0].name != "path")
        throw ValidationError("coincidence tables need a two-particle path + internal state");
    CoincidenceTable t;
    t.obs_a = a;
    t.obs_b = b;
    t.rows = labels_for(state, a, true);
    t.cols = labels_for(state, b, false);
    for (const auto& [tuple, amp] : state.terms()) {
        const Ket* ka = in_region(tuple, circuits::kAlice);
        const Ket* kb = in_region(tuple, circuits::kBob);
        if (!ka || !kb) continue;
        int r = outcome(state, *ka, a, true);
        int c = outcome(state, *kb, b, false);
        if (r < 0 || c < 0) throw ValidationError("path label outside the party's detectors");
        t.probs[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += std::norm(amp);
    }
    return t;
}

double expectation(const CoincidenceTable& t, const Signs& s) {
    const double total = t.total();
    if (!(total > 1e-15)) throw DegenerateStateError("coincidence table is empty");
    double acc = 0.0;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) acc += s.rows[r] * s.cols[c] * t.probs[r][c];
    return acc / total;
}

PhaseConfig phases_for(double phi_a, double phi_b) {
    PhaseConfig p;
    p.phi_D = phi_a;
    p.phi_R = phi_b;
    return p;
}

namespace {

template <class Make>
double chsh_with(Make make, const ChshSettings& s, Observable a, Observable b) {
    auto e = [&](double x, double y) { return expectation(coincidence_table(make(phases_for(x, y)), a, b)); };
    return std::abs(e(s.phiA0, s.phiB0) + e(s.phiA1, s.phiB0) + e(s.phiA0, s.phiB1) - e(s.phiA1, s.phiB1));
}

}  // namespace

double chsh(ParticleKind kind, const ChshSettings& s, Observable a, Observable b) {
    return chsh_with([kind](const PhaseConfig& p) { return circuits::li_circuit(kind, p); }, s, a, b);
}

double chsh_swap(const ChshSettings& s, Observable a, Observable b) {
    return chsh_with([](const PhaseConfig& p) { return circuits::swap_circuit(p); }, s, a, b);
}

std::array<CoincidenceTable, 4> generalized_tables(double phi1, double phi2) {
    const double d = phi1 - phi2;
    const double c = 0.25 * std::cos(d) * std::cos(d);
    const double s = 0.25 * std::sin(d) * std::sin(d);
    std::array<CoincidenceTable, 4> out;
    const std::array<std::string, 2> ext_a{"D", "L"}, ext_b{"R", "U"}, in{"down", "up"};
    out[0] = {Observable::external, Observable::external, ext_a, ext_b, {{{c, s}, {s, c}}}};
    out[1] = {Observable::internal, Observable::internal, in, in, {{{s, c}, {c, s}}}};
    out[2] = {Observable::internal, Observable::external, in, ext_b, {{{s, c}, {c, s}}}};
    out[3] = {Observable::external, Observable::internal, ext_a, in, {{{c, s}, {s, c}}}};
    return out;
}

std::array<double, 2> unified_phases_printed(ParticleKind kind, const PhaseConfig& p) {
    if (kind == ParticleKind::distinguishable) throw ValidationError("unified tables are for indistinguishable kinds");
    double phi2 = -(p.phi_R - p.phi_U);
    if (kind == ParticleKind::fermion) phi2 += kPi / 2;
    return {p.phi_D - p.phi_L, phi2};
}

std::array<double, 2> unified_phases_half(ParticleKind kind, const PhaseConfig& p) {
    if (kind == ParticleKind::distinguishable) throw ValidationError("unified tables are for indistinguishable kinds");
    double phi2 = 0.5 * (p.phi_R - p.phi_U);
    if (kind == ParticleKind::boson) phi2 += kPi / 2;
    return {0.5 * (p.phi_D - p.phi_L), phi2};
}

std::array<CoincidenceTable, 4> circuit_tables(const SymState& state) {
    return {coincidence_table(state, Observable::external, Observable::external),
            coincidence_table(state, Observable::internal, Observable::internal),
            coincidence_table(state, Observable::internal, Observable::external),
            coincidence_table(state, Observable::external, Observable::internal)};
}

double max_abs_diff(const CoincidenceTable& a, const CoincidenceTable& b) {
    double m = 0.0;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) m = std::max(m, std::abs(a.probs[r][c] - b.probs[r][c]));
    return m;
}

}  // namespace indist::measurement
