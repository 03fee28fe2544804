#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "indist/circuits.hpp"
#include "indist/fidelity.hpp"
#include "indist/hardy.hpp"
#include "indist/measurement.hpp"
#include "indist/measures.hpp"
#include "indist/protocols.hpp"
#include "indist/rng.hpp"

using namespace indist;
using cli::num;
using cli::ordered_json;
using cli::Record;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

circuits::PhaseConfig phases_deg(const std::string& text) {
    auto v = cli::parse_list(text, 4);
    return {deg2rad(v[0]), deg2rad(v[1]), deg2rad(v[2]), deg2rad(v[3])};
}

ordered_json phases_json(const circuits::PhaseConfig& p) {
    return {{"L", num(rad2deg(p.phi_L))}, {"D", num(rad2deg(p.phi_D))}, {"R", num(rad2deg(p.phi_R))},
            {"U", num(rad2deg(p.phi_U))}, {"phi", num(rad2deg(p.phi()))}};
}

ordered_json tables_json(const std::array<measurement::CoincidenceTable, 4>& ts) {
    ordered_json out = ordered_json::array();
    for (const auto& t : ts) out.push_back(cli::table(t));
    return out;
}

hardy::HardyParams hardy_params(double theta_deg, double phi_deg, bool nudge) {
    if (nudge && theta_deg == 90.0 && phi_deg == 90.0) theta_deg = phi_deg = 89.99;
    return {deg2rad(theta_deg), deg2rad(phi_deg)};
}

struct NoiseOpts {
    hardy::NoiseModel model;

    void add(CLI::App* app) {
        app->add_option("--depol", model.depolarizing, "two-qubit depolarizing probability")->capture_default_str();
        app->add_option("--r01", model.readout_0to1, "readout flip 0 -> 1")->capture_default_str();
        app->add_option("--r10", model.readout_1to0, "readout flip 1 -> 0")->capture_default_str();
        app->add_option("--shots", model.shots, "shots per run")->capture_default_str();
    }
    ordered_json json() const {
        return {{"depolarizing", num(model.depolarizing)}, {"readout_0to1", num(model.readout_0to1)},
                {"readout_1to0", num(model.readout_1to0)}, {"shots", model.shots}};
    }
};

ordered_json sample_json(const hardy::SampleSet& s, double alpha) {
    ordered_json j{{"mean", num(s.mean())}, {"values", ordered_json::array()}};
    for (double v : s.values) j["values"].push_back(num(v));
    if (s.n() >= 2) {
        auto [lo, hi] = hardy::t_ci(s, alpha);
        j["sd"] = num(s.sd());
        j["ci"] = {num(lo), num(hi)};
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Indistinguishable-particle entanglement toolkit", "indist"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    std::string format = "json", csv_path, out_path;
    app.add_option("--format", format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--csv", csv_path, "also write results as CSV");
    app.add_option("--output,-o", out_path, "write the record here instead of stdout");
    app.set_help_flag("--help,-h", "usage");

    std::string command;
    std::function<Record()> run;
    auto bind = [&](CLI::App* sub, std::string name, std::function<Record()> fn) {
        sub->callback([&command, &run, name = std::move(name), fn = std::move(fn)] {
            command = name;
            run = fn;
        });
    };

    // shared option storage
    std::string kind = "fermion", phases = "0,0,0,0", mode = "erase", pair = "spin-spin";
    std::string settings = "0,180,45,-45", obs_a = "external", obs_b = "external", stats = "boson";
    std::string ancilla = "particle", channel = "distinguishable";
    int n = 2, samples = 50, points = 21, case_id = 1, runs = 10, copies = 0, random_states = 0;
    long trials = 0;
    std::uint64_t seed = 7;
    double theta = 51.827, phi = 51.827, alpha = 0.5, ci_alpha = 0.01, grid_step = 0.5;
    bool measured = false, nudge = false;

    auto* tables = app.add_subcommand("tables", "four coincidence tables of the HBS circuit");
    tables->add_option("--kind", kind)->capture_default_str();
    tables->add_option("--phases", phases, "phi_L,phi_D,phi_R,phi_U in degrees")->capture_default_str();
    bind(tables, "tables", [&] {
        Record r;
        const auto k = circuits::kind_from_string(kind);
        const auto p = phases_deg(phases);
        r.config = {{"kind", kind}, {"phases_deg", phases_json(p)}};
        const auto ts = measurement::circuit_tables(circuits::li_circuit(k, p));
        r.results["tables"] = tables_json(ts);
        if (k != circuits::ParticleKind::distinguishable) {
            auto u = measurement::unified_phases_half(k, p);
            auto g = measurement::generalized_tables(u[0], u[1]);
            double diff = 0.0;
            for (std::size_t i = 0; i < 4; ++i) diff = std::max(diff, measurement::max_abs_diff(ts[i], g[i]));
            r.results["closed_form_max_diff"] = num(diff);
        }
        r.refs = {"hybrid beam-splitter output state", "path-path, spin-spin, spin-path and path-spin tables"};
        return r;
    });

    auto* chsh = app.add_subcommand("chsh", "CHSH value of the HBS circuit");
    chsh->add_option("--kind", kind)->capture_default_str();
    chsh->add_option("--settings", settings, "a0,a1,b0,b1 in degrees")->capture_default_str();
    chsh->add_option("--alice", obs_a)->capture_default_str();
    chsh->add_option("--bob", obs_b)->capture_default_str();
    bind(chsh, "chsh", [&] {
        Record r;
        auto v = cli::parse_list(settings, 4);
        measurement::ChshSettings s{deg2rad(v[0]), deg2rad(v[1]), deg2rad(v[2]), deg2rad(v[3])};
        r.config = {{"kind", kind}, {"settings_deg", v}, {"alice", obs_a}, {"bob", obs_b}};
        const double value = measurement::chsh(circuits::kind_from_string(kind), s,
                                               measurement::observable_from_string(obs_a),
                                               measurement::observable_from_string(obs_b));
        r.results = {{"value", num(value)},
                     {"classical_bound", 2},
                     {"tsirelson_bound", num(2 * std::sqrt(2.0))},
                     {"verdict", value > 2.0 + 1e-9 ? "violation" : "no violation"}};
        r.refs = {"CHSH combination", "Tsirelson bound"};
        return r;
    });

    auto* tr = app.add_subcommand("trace", "reduced two-qubit state of the HHES after a DoF trace");
    tr->add_option("--kind", kind)->capture_default_str();
    tr->add_option("--pair", pair, "spin-spin or spin-path")->capture_default_str();
    tr->add_option("--mode", mode, "literal or erase")->capture_default_str();
    tr->add_option("--phases", phases)->capture_default_str();
    bind(tr, "trace", [&] {
        Record r;
        const auto p = phases_deg(phases);
        const auto m = fidelity::trace_mode_from_string(mode);
        r.config = {{"kind", kind}, {"pair", pair}, {"mode", mode}, {"phases_deg", phases_json(p)}};
        const auto proj = measures::hhes_projected(circuits::kind_from_string(kind), p);
        const Mat rho = measures::hhes_reduced(proj, measures::reduced_pair_from_string(pair),
                                               m == fidelity::TraceMode::erase);
        auto spec = measures::spin_flip_spectrum(rho);
        r.results = {{"rho", cli::matrix(rho)},
                     {"concurrence", num(measures::concurrence(rho))},
                     {"log_negativity", num(measures::log_negativity(rho))},
                     {"spin_flip_spectrum", {num(spec[0]), num(spec[1]), num(spec[2]), num(spec[3])}},
                     {"purity", num((rho * rho).trace().real())}};
        r.refs = {"one-particle-per-region projector", "DoF trace rule", "reduced spin-spin state"};
        return r;
    });

    auto* mono = app.add_subcommand("monogamy", "monogamy check on the HHES or on random qubit states");
    mono->add_option("--kind", kind)->capture_default_str();
    mono->add_option("--mode", mode)->capture_default_str();
    mono->add_option("--phases", phases)->capture_default_str();
    mono->add_option("--random", random_states, "random pure three-qubit states instead of the HHES");
    mono->add_option("--seed", seed)->capture_default_str();
    bind(mono, "monogamy", [&] {
        Record r;
        if (random_states > 0) {
            r.config = {{"random", random_states}, {"seed", seed}};
            double min_res = 1e9;
            int violations = 0;
            for (int i = 0; i < random_states; ++i) {
                std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
                Vec v = random_state(8, rng);
                auto rep = measures::monogamy_report(Mat(v * v.adjoint()));
                min_res = std::min(min_res, rep.residual);
                violations += rep.residual < -measures::kMonogamyTol ? 1 : 0;
            }
            r.results = {{"min_residual", num(min_res)}, {"violations", violations}};
            r.refs = {"CKW inequality", "squared concurrence"};
            return r;
        }
        const auto p = phases_deg(phases);
        const bool coherent = fidelity::trace_mode_from_string(mode) == fidelity::TraceMode::erase;
        r.config = {{"kind", kind}, {"mode", mode}, {"phases_deg", phases_json(p)}};
        const auto proj = measures::hhes_projected(circuits::kind_from_string(kind), p);
        const Mat ss = measures::hhes_reduced(proj, measures::ReducedPair::spin_spin, coherent);
        const Mat sp = measures::hhes_reduced(proj, measures::ReducedPair::spin_path, coherent);
        const double c_ss = std::pow(measures::concurrence(ss), 2), c_sp = std::pow(measures::concurrence(sp), 2);
        r.results = {{"c2_spin_spin", num(c_ss)},
                     {"c2_spin_path", num(c_sp)},
                     {"log_negativity_spin_spin", num(measures::log_negativity(ss))},
                     {"log_negativity_spin_path", num(measures::log_negativity(sp))},
                     {"sum", num(c_ss + c_sp)},
                     {"qubit_bound", 1},
                     {"verdict", c_ss + c_sp > 1.0 + measures::kMonogamyTol ? "violated" : "holds"}};
        r.refs = {"generalized monogamy relation", "degree of monogamy"};
        return r;
    });

    auto* cases = app.add_subcommand("cases", "three-particle monogamy case");
    cases->add_option("--case", case_id, "1..13")->capture_default_str();
    cases->add_option("--samples", samples)->capture_default_str();
    cases->add_option("--seed", seed)->capture_default_str();
    cases->add_option("--stats", stats, "boson or fermion")->capture_default_str();
    bind(cases, "cases", [&] {
        Record r;
        if (case_id < 1 || case_id > 13) throw ValidationError("case must be in 1..13");
        if (samples < 1) throw ValidationError("samples must be positive");
        r.config = {{"case", case_id}, {"samples", samples}, {"seed", seed}, {"stats", stats}};
        const auto st = statistics_from_string(stats);
        double max_abs = 0.0, min_res = 1e9, z_diff = 0.0;
        int pure = 0, with_z = 0;
        std::map<std::string, int> verdicts;
        for (int i = 0; i < samples; ++i) {
            std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(case_id), static_cast<std::uint64_t>(i)));
            auto res = measures::three_particle_case(measures::random_case(case_id, rng), st);
            max_abs = std::max(max_abs, std::abs(res.report.residual));
            min_res = std::min(min_res, res.report.residual);
            pure += res.pure ? 1 : 0;
            ++verdicts[measures::to_string(res.report.verdict)];
            if (res.z) {
                ++with_z;
                z_diff = std::max(z_diff, std::abs(measures::c2_a_bc_from_z(*res.z) - res.report.c2_a_bc));
            }
        }
        r.results = {{"max_abs_residual", num(max_abs)}, {"min_residual", num(min_res)}, {"pure_samples", pure},
                     {"verdicts", verdicts}, {"z_samples", with_z}, {"z_form_max_diff", num(z_diff)}};
        r.refs = {"three-particle case table", "z-coefficient closed forms"};
        return r;
    });

    auto* rel = app.add_subcommand("fidelity-relation", "generalized f_g versus F_g on the two-parameter state");
    rel->add_option("--kind", channel, "distinguishable or indistinguishable")->capture_default_str();
    rel->add_option("--n", n)->capture_default_str();
    rel->add_option("--points", points)->capture_default_str();
    rel->add_option("--mode", mode)->capture_default_str();
    rel->add_flag("--measured", measured, "use f_max and F_max measured on the reference state");
    bind(rel, "fidelity-relation", [&] {
        Record r;
        if (points < 2) throw ValidationError("points must be at least 2");
        const auto layout = fidelity::reference_layout(fidelity::kind_from_string(channel), n,
                                                       fidelity::trace_mode_from_string(mode));
        const auto params = measured ? fidelity::measured_params(layout) : fidelity::FidelityParams::defaults(layout);
        r.config = {{"kind", channel}, {"n", n}, {"d", 2}, {"points", points}, {"mode", mode}, {"measured", measured}};
        ordered_json recs = ordered_json::array();
        double worst = 0.0;
        for (int i = 0; i < points; ++i) {
            const double p = static_cast<double>(i) / (points - 1);
            auto rc = fidelity::relation_check(p, layout, params);
            worst = std::max(worst, std::abs(rc.residual));
            recs.push_back({{"p", num(p)}, {"f_g", num(rc.f_g)}, {"F_g", num(rc.F_g)},
                            {"predicted_f_g", num(rc.predicted_f_g)}, {"residual", num(rc.residual)}});
        }
        r.results = {{"f_max", num(params.f_max)}, {"F_max", num(params.F_max)}, {"records", recs},
                     {"max_abs_residual", num(worst)}};
        r.refs = {"generalized teleportation fidelity", "generalized singlet fraction", "two-parameter state",
                  "f_g versus F_g relation"};
        return r;
    });

    auto* bound = app.add_subcommand("sf-bound", "distinguishable generalized singlet-fraction bound");
    bound->add_option("--n", n)->capture_default_str();
    bound->add_option("--samples", samples)->capture_default_str();
    bound->add_option("--seed", seed)->capture_default_str();
    bind(bound, "sf-bound", [&] {
        Record r;
        r.config = {{"n", n}, {"samples", samples}, {"seed", seed}};
        auto b = fidelity::sf_upper_bound_check(n, samples, seed);
        r.results = {{"bound", num(b.bound)}, {"max_seen", num(b.max_seen)}, {"violations", b.violations}};
        r.refs = {"upper bound 1 + (n-1)/d"};
        return r;
    });

    auto* sig = app.add_subcommand("signaling", "signaling probability under hypothetical ideal cloning");
    sig->add_option("--n", n, "number of DoFs")->capture_default_str();
    sig->add_option("--trials", trials, "Monte-Carlo trials (0 skips)")->capture_default_str();
    sig->add_option("--seed", seed)->capture_default_str();
    sig->add_option("--copies", copies, "also run the M-copy variant")->capture_default_str();
    bind(sig, "signaling", [&] {
        Record r;
        r.config = {{"n", n}, {"trials", trials}, {"seed", seed}, {"copies", copies}};
        r.results["non_physical"] = true;
        r.results["note"] = "the copy channel is an idealization used to derive a contradiction";
        r.results["exact"] = num(protocols::signaling_exact(n));
        if (trials > 0) {
            auto mc = protocols::signaling_mc(n, trials, seed);
            r.results["mc"] = {{"estimate", num(mc.estimate)}, {"stderr", num(mc.stderr_)}};
        }
        if (copies > 0) {
            auto m = protocols::signaling_multicopy(copies);
            r.results["multicopy"] = {{"p_identify", num(m.p_identify)}, {"p_average", num(m.p_average)}};
            if (trials > 0) {
                auto mc = protocols::signaling_multicopy_mc(copies, trials, seed);
                r.results["multicopy"]["mc"] = {{"estimate", num(mc.estimate)}, {"stderr", num(mc.stderr_)}};
            }
        }
        r.refs = {"signaling probability", "M-copy signaling probability"};
        return r;
    });

    auto* qpq = app.add_subcommand("qpq", "generalized singlet fraction of the pseudo-telepathy states");
    qpq->add_option("--theta", theta, "degrees")->capture_default_str();
    qpq->add_option("--ancilla", ancilla, "particle or dof")->capture_default_str();
    bind(qpq, "qpq", [&] {
        Record r;
        r.config = {{"theta_deg", num(theta)}, {"ancilla", ancilla}};
        auto q = protocols::qpq_sf(deg2rad(theta), protocols::ancilla_from_string(ancilla));
        r.results = {{"F_g", num(q.value)}, {"pairs", {num(q.pairs[0]), num(q.pairs[1])}}};
        r.refs = {"pseudo-telepathy state with ancilla particle", "pseudo-telepathy state with ancilla DoF"};
        return r;
    });

    auto* swap = app.add_subcommand("swap", "entanglement swapping with two bosons");
    swap->add_option("--phases", phases)->capture_default_str();
    bind(swap, "swap", [&] {
        Record r;
        const auto p = phases_deg(phases);
        r.config = {{"phases_deg", phases_json(p)}};
        auto s = protocols::swap_verify(p);
        r.results = {{"tables", tables_json(s.tables)},
                     {"polarization_path", cli::table(s.tables[2])},
                     {"chsh_0_180_45_m45", num(s.chsh_printed)},
                     {"chsh_0_90_45_m45", num(s.chsh_best)}};
        r.refs = {"swapping output state", "polarization-path table"};
        return r;
    });

    auto* attack = app.add_subcommand("attack", "Hardy probability under particle exchange");
    attack->add_option("--theta", theta)->capture_default_str();
    attack->add_option("--phi", phi)->capture_default_str();
    attack->add_option("--alpha", alpha)->capture_default_str();
    bind(attack, "attack", [&] {
        Record r;
        r.config = {{"theta_deg", num(theta)}, {"phi_deg", num(phi)}, {"alpha", num(alpha)}};
        auto a = protocols::hardy_attack(deg2rad(theta), deg2rad(phi), alpha);
        r.results = {{"q", num(a.q)}, {"q_prime", num(a.q_prime)}, {"q_alpha", num(a.q_alpha)},
                     {"alpha_at_minimum", num(a.q_prime / (a.q + a.q_prime))}};
        r.refs = {"modified Hardy probability", "mixed Hardy probability"};
        return r;
    });

    auto* hardy = app.add_subcommand("hardy", "Hardy paradox tools");
    hardy->require_subcommand(1);
    NoiseOpts noise;

    auto* hp = hardy->add_subcommand("probs", "ideal Hardy probabilities");
    hp->add_option("--theta", theta)->capture_default_str();
    hp->add_option("--phi", phi)->capture_default_str();
    hp->add_flag("--nudge-boundary", nudge, "map theta = phi = 90 to 89.99");
    bind(hp, "hardy probs", [&] {
        Record r;
        r.config = {{"theta_deg", num(theta)}, {"phi_deg", num(phi)}, {"nudge_boundary", nudge}};
        const auto p = hardy_params(theta, phi, nudge);
        auto a = hardy::hardy_probs(p);
        auto g = hardy::hardy_probs(p, circuits::hardy_state(p.theta, p.phi).gate_built);
        double diff = 0.0;
        for (std::size_t i = 0; i < 4; ++i) diff = std::max(diff, std::abs(a[i] - g[i]));
        r.results = {{"probs", {num(a[0]), num(a[1]), num(a[2]), num(a[3])}},
                     {"q", num(hardy::hardy_q(p))},
                     {"chi_deg", num(rad2deg(p.chi()))},
                     {"gate_built_max_diff", num(diff)}};
        r.refs = {"Hardy conditions", "Hardy probability q", "chi relation"};
        return r;
    });

    auto* hq = hardy->add_subcommand("qmax", "maximize q over theta and phi");
    hq->add_option("--grid-step", grid_step, "degrees")->capture_default_str();
    bind(hq, "hardy qmax", [&] {
        Record r;
        r.config = {{"grid_step_deg", num(grid_step)}};
        auto m = hardy::qmax_solve(grid_step);
        r.results = {{"q_max", num(m.q)},
                     {"theta_deg", num(rad2deg(m.theta))},
                     {"phi_deg", num(rad2deg(m.phi))},
                     {"closed_form", num(hardy::qmax_closed_form())}};
        r.refs = {"maximum Hardy probability"};
        return r;
    });

    auto* hs = hardy->add_subcommand("sample", "noisy runs of the four Hardy circuits");
    hs->add_option("--theta", theta)->capture_default_str();
    hs->add_option("--phi", phi)->capture_default_str();
    hs->add_option("--runs", runs)->capture_default_str();
    hs->add_option("--seed", seed)->capture_default_str();
    hs->add_option("--alpha", ci_alpha, "two-sided CI level")->capture_default_str();
    hs->add_flag("--nudge-boundary", nudge);
    noise.add(hs);
    bind(hs, "hardy sample", [&] {
        Record r;
        r.config = {{"theta_deg", num(theta)}, {"phi_deg", num(phi)}, {"runs", runs},
                    {"seed", seed},           {"alpha", num(ci_alpha)}, {"noise", noise.json()}};
        const auto p = hardy_params(theta, phi, nudge);
        auto s = hardy::noisy_sample(p, noise.model, runs, seed);
        ordered_json eps = ordered_json::array();
        std::array<double, 4> means{};
        for (std::size_t k = 0; k < 4; ++k) {
            eps.push_back(sample_json(s[k], ci_alpha));
            means[k] = s[k].mean();
        }
        r.results = {{"epsilon", eps}, {"chsh_hardy_lhs", num(hardy::chsh_hardy_lhs(means))}};
        r.refs = {"error model", "Student t confidence interval"};
        return r;
    });

    auto* he = hardy->add_subcommand("estimate", "offline calibration and lower bound on q");
    he->add_option("--theta", theta)->capture_default_str();
    he->add_option("--phi", phi)->capture_default_str();
    he->add_option("--runs", runs)->capture_default_str();
    he->add_option("--seed", seed)->capture_default_str();
    he->add_option("--alpha", ci_alpha)->capture_default_str();
    he->add_flag("--nudge-boundary", nudge);
    noise.add(he);
    bind(he, "hardy estimate", [&] {
        Record r;
        r.config = {{"theta_deg", num(theta)}, {"phi_deg", num(phi)}, {"runs", runs},
                    {"seed", seed},           {"alpha", num(ci_alpha)}, {"noise", noise.json()}};
        const auto p = hardy_params(theta, phi, nudge);
        auto ex = hardy::run_experiment(p, noise.model, runs, seed, ci_alpha);
        const auto& e = ex.estimate;
        const auto cat = hardy::mes_ps_catalogue_deg();
        ordered_json off = ordered_json::array();
        for (std::size_t i = 0; i < cat.size(); ++i)
            off.push_back({{"theta_deg", num(cat[i].first)}, {"phi_deg", num(cat[i].second)},
                           {"epsilon5_mean", num(ex.offline_means[i])}});
        r.results = {{"q", num(hardy::hardy_q(p))},
                     {"sigma4_bar", num(e.sigma4_bar)},
                     {"s_sigma4", num(e.s_sigma4)},
                     {"epsilon5_bar", num(e.eps5_bar)},
                     {"s_epsilon5", num(e.s_eps5)},
                     {"delta", num(e.delta)},
                     {"q_lb_hat", num(e.q_lb_hat)},
                     {"decision", e.nonlocal ? "nonlocal" : "inconclusive"},
                     {"offline", off}};
        r.refs = {"lower bound on q", "offline and online phases"};
        return r;
    });

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = cli::expand_config(args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitValidation;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        Record rec = run();
        // commands without randomness still echo the field
        if (!rec.config.contains("seed")) rec.config["seed"] = nullptr;
        const ordered_json j = rec.to_json(command);
        std::string body;
        if (format == "json")
            body = j.dump(2) + "\n";
        else if (format == "csv")
            body = cli::to_csv(j["results"]);
        else
            body = cli::to_text(j);
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream(out_path) << body;
        }
        if (!csv_path.empty()) std::ofstream(csv_path) << cli::to_csv(j["results"]);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DegenerateStateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}
