#include "indist/protocols.hpp"

#include <cmath>

#include "indist/fidelity.hpp"
#include "indist/hardy.hpp"
#include "indist/rng.hpp"
#include "indist/trace.hpp"

namespace indist::protocols {

namespace {

void check_n(int n) {
    if (n < 2 || n > 30) throw ValidationError("n_dofs must be in 2..30");
}

void check_trials(long trials) {
    if (trials < 1) throw ValidationError("trials must be positive");
}

// P(all detectors agree) for N copies of a qubit with P(0) = p0.
double agree_prob(int n, double p0) {
    if (n <= 20) {
        auto dist = circuits::sorter_cascade(n, cplx{std::sqrt(p0)}, cplx{std::sqrt(1.0 - p0)});
        return dist.front() + dist.back();
    }
    // beyond the explicit table, group outcomes by Hamming weight (exact)
    return std::pow(p0, n) + std::pow(1.0 - p0, n);
}

// Counter-based uniform bits: word w of trial t.
std::uint64_t draw(std::uint64_t seed, std::uint64_t trial, std::uint64_t word) {
    return splitmix64(stream_seed(seed, trial) + word);
}

McEstimate finish(long hits, long trials, double exact) {
    McEstimate e;
    e.trials = trials;
    e.exact = exact;
    e.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    e.stderr_ = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(trials));
    return e;
}

}  // namespace

double signaling_exact(int n_dofs) {
    check_n(n_dofs);
    // Z basis: the copies are |0..0> or |1..1>, Bob always sees agreement.
    const double z = 0.5 * agree_prob(n_dofs, 1.0) + 0.5 * agree_prob(n_dofs, 0.0);
    // X basis: |+> or |-> copies, Bob is right when the detectors disagree.
    const double x = 1.0 - agree_prob(n_dofs, 0.5);
    return 0.5 * z + 0.5 * x;
}

McEstimate signaling_mc(int n_dofs, long trials, std::uint64_t seed) {
    check_n(n_dofs);
    check_trials(trials);
    long hits = 0;
    const std::uint64_t mask = n_dofs == 64 ? ~0ULL : (1ULL << n_dofs) - 1;
    for (long t = 0; t < trials; ++t) {
        const auto ut = static_cast<std::uint64_t>(t);
        const std::uint64_t w0 = draw(seed, ut, 0);
        const bool x_basis = w0 & 1U;
        const bool bit = (w0 >> 1) & 1U;
        std::uint64_t outcome;
        if (x_basis)
            outcome = draw(seed, ut, 1) & mask;
        else
            outcome = bit ? mask : 0;
        const bool agree = outcome == 0 || outcome == mask;
        hits += (agree != x_basis) ? 1 : 0;
    }
    return finish(hits, trials, signaling_exact(n_dofs));
}

MultiCopy signaling_multicopy(int copies) {
    if (copies < 1 || copies > 60) throw ValidationError("copies must be in 1..60");
    // Under X each copy lands in {D1, D4} with probability 1/2; Bob spots the
    // X basis unless every copy does.
    double miss = 1.0;
    for (int m = 0; m < copies; ++m) miss *= 0.5;
    MultiCopy r;
    r.p_identify = 1.0 - miss;
    r.p_average = 0.5 * 1.0 + 0.5 * r.p_identify;
    return r;
}

McEstimate signaling_multicopy_mc(int copies, long trials, std::uint64_t seed) {
    if (copies < 1 || copies > 60) throw ValidationError("copies must be in 1..60");
    check_trials(trials);
    const std::uint64_t mask = (1ULL << copies) - 1;
    long hits = 0;
    for (long t = 0; t < trials; ++t) hits += (draw(seed, static_cast<std::uint64_t>(t), 0) & mask) != mask ? 1 : 0;
    return finish(hits, trials, signaling_multicopy(copies).p_identify);
}

Ancilla ancilla_from_string(const std::string& s) {
    if (s == "particle") return Ancilla::particle;
    if (s == "dof") return Ancilla::dof;
    throw ValidationError("unknown ancilla '" + s + "'");
}

namespace {

// Amplitudes of the three-qubit state over |B A X> (or |B A1 A2>).
std::array<std::pair<std::array<int, 3>, double>, 4> qpq_terms(double theta) {
    const double c = std::cos(theta / 2) / std::sqrt(2.0), s = std::sin(theta / 2) / std::sqrt(2.0);
    return {{{{0, 0, 0}, c}, {{0, 1, 0}, s}, {{1, 1, 1}, c}, {{1, 0, 0}, -s}}};
}

QpqResult qpq_particle(double theta) {
    const std::vector<DofSpec> dofs{{"q", {"0", "1"}}};
    SymState st(Statistics::distinguishable, dofs);
    for (const auto& [bits, amp] : qpq_terms(theta))
        st.add({Ket{0, "B", {bits[0]}}, Ket{1, "A", {bits[1]}}, Ket{2, "X", {bits[2]}}}, amp);
    const auto rho = to_density(st);
    auto pair = [&](const std::string& sender, const std::string& other) {
        auto r = trace::trace_region(rho, other);
        return fidelity::singlet_fraction(trace::qubit_view(r, {{sender, 0, 0, 1}, {"B", 0, 0, 1}}));
    };
    QpqResult out;
    out.pairs = {pair("A", "X"), pair("X", "A")};
    // one receiving DoF: the column sum over both sending DoFs dominates
    out.value = std::max({out.pairs[0], out.pairs[1], out.pairs[0] + out.pairs[1]});
    return out;
}

QpqResult qpq_dof(double theta) {
    // A carries (A1, A2) in region sA; B's second DoF is an idle |0>.
    const std::vector<DofSpec> dofs{{"q1", {"0", "1"}}, {"q2", {"0", "1"}}};
    SymState st(Statistics::boson, dofs);
    for (const auto& [bits, amp] : qpq_terms(theta))
        st.add({Ket{-1, "sB", {bits[0], 0}}, Ket{-1, "sA", {bits[1], bits[2]}}}, amp);
    const auto rho = to_density(normalize(st));
    auto pair = [&](int keep) {
        auto r = trace::erase_dof_label(rho, {"sA", 1 - keep});
        r = trace::erase_dof_label(r, {"sB", 1});
        return fidelity::singlet_fraction(trace::qubit_view(r, {{"sA", keep, 0, 1}, {"sB", 0, 0, 1}}));
    };
    QpqResult out;
    out.pairs = {pair(0), pair(1)};
    out.value = std::max({out.pairs[0], out.pairs[1], out.pairs[0] + out.pairs[1]});
    return out;
}

}  // namespace

QpqResult qpq_sf(double theta, Ancilla ancilla) {
    if (!(theta > 0.0 && theta < kPi / 2)) throw ValidationError("theta must lie in (0, pi/2)");
    return ancilla == Ancilla::particle ? qpq_particle(theta) : qpq_dof(theta);
}

SwapResult swap_verify(const circuits::PhaseConfig& phases) {
    SwapResult r;
    r.tables = measurement::circuit_tables(circuits::swap_circuit(phases));
    r.chsh_printed = measurement::chsh_swap({});
    r.chsh_best = measurement::chsh_swap({0.0, kPi / 2, kPi / 4, -kPi / 4});
    return r;
}

AttackResult hardy_attack(double theta, double phi, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in [0, 1]");
    const hardy::HardyParams p{theta, phi};
    const double chi = p.chi();
    AttackResult r;
    r.q = hardy::hardy_q(p);
    const cplx v = 0.5 * std::cos(chi) * (std::cos(theta) - std::sin(theta) * std::polar(1.0, 2 * phi)) -
                   std::sin(chi) * std::polar(1.0, -phi) * (std::cos(theta) - std::sin(theta));
    r.q_prime = std::norm(v);
    r.q_alpha = alpha * alpha * r.q + (1.0 - alpha) * (1.0 - alpha) * r.q_prime;
    return r;
}

}  // namespace indist::protocols
