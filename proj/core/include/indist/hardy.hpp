#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "indist/types.hpp"

namespace indist::hardy {

struct HardyParams {
    double theta = 0.0;  // radians
    double phi = 0.0;

    // cot chi = tan theta cos phi; throws at theta = phi = pi/2
    double chi() const;
};

// Measurement unitaries; outcome +1 is |0> after the rotation.
struct Settings {
    Mat a1, a2, b1, b2;
};
Settings settings(const HardyParams& p);

// P(+1,+1|A1,B1), P(+1,-1|A2,B1), P(-1,+1|A1,B2), P(+1,+1|A2,B2) for the
// analytic state, or for an explicit state vector |AB>.
std::array<double, 4> hardy_probs(const HardyParams& p);
std::array<double, 4> hardy_probs(const HardyParams& p, const Vec& state);

// |1/2 cos theta cos chi (1 - e^{-2i phi})|^2
double hardy_q(const HardyParams& p);
double qmax_closed_form();

struct QmaxResult {
    double theta = 0.0;
    double phi = 0.0;
    double q = 0.0;
};
// Grid search over [0, 90] degrees followed by local refinement.
QmaxResult qmax_solve(double grid_step_deg = 0.5);

// Two-qubit depolarizing channel after preparation, asymmetric readout
// flips, then binomial shot noise. Defaults are fitted to a superconducting
// device: MES background near 0.081 and epsilon_5 near 0.128 at q_max.
struct NoiseModel {
    double depolarizing = 0.145;
    double readout_0to1 = 0.01;
    double readout_1to0 = 0.049;
    int shots = 8192;

    void validate() const;
};

// Exact noisy outcome distribution (before shots) for the four circuits.
std::array<double, 4> noisy_probs(const HardyParams& p, const NoiseModel& noise);

struct SampleSet {
    std::vector<double> values;

    std::size_t n() const { return values.size(); }
    double mean() const;
    double sd() const;  // sample standard deviation (n - 1)
};

// One SampleSet per circuit, each run an independent shots-binomial estimate.
std::array<SampleSet, 4> noisy_sample(const HardyParams& p, const NoiseModel& noise, int n_runs,
                                      std::uint64_t seed);

// Two-sided Student t quantile t_{alpha/2} with nu degrees of freedom.
double t_quantile(double alpha, double nu);
std::pair<double, double> t_ci(const SampleSet& s, double alpha);
// mean(x) - mean(y) - t_{alpha/2} sqrt(Sx^2 + Sy^2)/sqrt(n)
double diff_lower_bound(const SampleSet& x, const SampleSet& y, double alpha);

struct Estimate {
    double sigma4_bar = 0.0;
    double s_sigma4 = 0.0;
    double eps5_bar = 0.0;
    double s_eps5 = 0.0;
    double delta = 0.0;
    double q_lb_hat = 0.0;
    bool nonlocal = false;  // q_lb_hat > 0
    std::size_t offline_argmax = 0;
};
Estimate estimate_qlb(const std::vector<SampleSet>& offline, const SampleSet& online, double alpha);

// Offline phase over the MES/PS catalogue (shared calibration streams) and
// online phase on the target state, both under the same noise.
struct Experiment {
    Estimate estimate;
    std::vector<double> offline_means;  // epsilon_5 per catalogue entry
    std::array<SampleSet, 4> online;
};
Experiment run_experiment(const HardyParams& target, const NoiseModel& noise, int n_runs, std::uint64_t seed,
                          double alpha);

// epsilon_5 - epsilon_1 - epsilon_2 - epsilon_3
double chsh_hardy_lhs(const std::array<double, 4>& eps);

// Maximally entangled and product parameter points in [0, 90] degrees.
std::vector<std::pair<double, double>> mes_ps_catalogue_deg();

}  // namespace indist::hardy
