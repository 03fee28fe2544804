#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "indist/circuits.hpp"
#include "indist/measurement.hpp"

namespace indist::protocols {

// Ideal cloning onto N DoFs followed by Z sorters. Bob guesses "Z" when all
// detectors agree. Computed by enumerating the 2^N outcomes.
double signaling_exact(int n_dofs);

struct McEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    double exact = 0.0;
    long trials = 0;
};

// Monte-Carlo version with counter-based per-trial seeding.
McEstimate signaling_mc(int n_dofs, long trials, std::uint64_t seed);

// M copies, two DoFs each. p_identify is the chance Bob catches an X-basis
// measurement (1 - 2^-M); p_average also counts the always-correct Z branch.
struct MultiCopy {
    double p_identify = 0.0;
    double p_average = 0.0;
};
MultiCopy signaling_multicopy(int copies);
McEstimate signaling_multicopy_mc(int copies, long trials, std::uint64_t seed);

enum class Ancilla { particle, dof };
Ancilla ancilla_from_string(const std::string& s);

struct QpqResult {
    double value = 0.0;              // generalized singlet fraction
    std::array<double, 2> pairs{};   // the two pairwise singlet fractions
};
// Particle ancilla: three labelled particles (B, A, X). DoF ancilla: two
// bosons with the ancilla carried as a second DoF of A.
QpqResult qpq_sf(double theta, Ancilla ancilla);

struct SwapResult {
    std::array<measurement::CoincidenceTable, 4> tables;
    double chsh_printed = 0.0;  // settings (0, pi, pi/4, -pi/4)
    double chsh_best = 0.0;     // settings (0, pi/2, pi/4, -pi/4)
};
SwapResult swap_verify(const circuits::PhaseConfig& phases);

struct AttackResult {
    double q = 0.0;
    double q_prime = 0.0;
    double q_alpha = 0.0;
};
AttackResult hardy_attack(double theta, double phi, double alpha);

}  // namespace indist::protocols
