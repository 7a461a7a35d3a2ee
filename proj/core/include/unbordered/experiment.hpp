#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unbordered/muf.hpp"
#include "unbordered/word.hpp"

namespace unbordered {

enum class MufAlgorithm { brute, basic, early_stop, dispatch };

std::string_view to_string(MufAlgorithm alg);
MufAlgorithm muf_algorithm_from_string(std::string_view name);
MufResult run_muf_algorithm(MufAlgorithm alg, const Word& w);

/**
 * Parameters for the average-gap and running-time experiments.
 *
 * Exhaustive mode walks all sigma^n words and is enumeration-guarded;
 * Monte-Carlo mode draws `trials` words per (sigma, n) cell. Trial seeds
 * are derived from `seed` by a stable mixing function, so a fixed config
 * reproduces the same sample bit for bit.
 */
struct ExperimentConfig {
    enum class Mode { exhaustive, montecarlo };

    int n_min = 1;
    int n_max = 100;
    std::vector<std::uint32_t> sigmas = {2, 3, 4, 5};
    Mode mode = Mode::montecarlo;
    long trials = 10000;
    std::uint64_t seed = 1;
    std::vector<MufAlgorithm> algorithms = {MufAlgorithm::basic, MufAlgorithm::early_stop};
    std::ostream* progress = nullptr;  // one line per finished (sigma, n) cell
};

struct ExperimentRow {
    std::uint32_t sigma = 0;
    int n = 0;
    long trials_used = 0;
    double mean_gap = 0.0;  // average of n - muf length
    double mean_muf = 0.0;
    std::vector<std::pair<MufAlgorithm, double>> mean_time_s;  // empty for gap rows
};

/// Stable 64-bit mix (splitmix64 finalizer over a golden-ratio increment).
std::uint64_t mix64(std::uint64_t x);

/// Seed for one trial: mix(mix(mix(master ^ sigma) ^ n) ^ trial_index).
std::uint64_t trial_seed(std::uint64_t master, std::uint32_t sigma, int n, long trial_index);

/// Uniform random word of A^n, a pure function of (n, sigma, seed).
/// Letters are drawn by rejection sampling, so the distribution is exact.
Word random_word(int n, std::uint32_t sigma, std::uint64_t seed);

/// Mean gap n - b(S) per (sigma, n) cell, rows sorted by (sigma, n).
/// Uses the dispatcher to compute b(S).
std::vector<ExperimentRow> gap_experiment(const ExperimentConfig& cfg);

/// Mean wall-clock seconds per word for each selected algorithm over the
/// same word sample (identical trial seeds). Every trial cross-checks
/// that all algorithms agree on the factor length and throws
/// std::logic_error otherwise. Requires at least two algorithms; always
/// samples `trials` random words per cell.
std::vector<ExperimentRow> timing_experiment(const ExperimentConfig& cfg);

/// Header `sigma,n,trials,mean_gap,mean_muf[,time_<alg>...]`, one row per
/// (sigma, n), reals with 6 significant digits. Rows must be nonempty.
void write_csv(std::span<const ExperimentRow> rows, std::ostream& out);

/// As above into a file; failures mention the destination path.
void write_csv(std::span<const ExperimentRow> rows, const std::string& path);

}  // namespace unbordered
