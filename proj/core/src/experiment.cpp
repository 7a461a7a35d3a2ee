#include "unbordered/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "unbordered/counting.hpp"

namespace unbordered {

namespace {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        return mix64_finalize(state);
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    static std::uint64_t mix64_finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

void validate_common(const ExperimentConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
        throw std::invalid_argument("experiment: need 1 <= n_min <= n_max");
    if (cfg.sigmas.empty()) throw std::invalid_argument("experiment: no alphabet sizes given");
    for (std::uint32_t s : cfg.sigmas) {
        if (s < 2) throw std::invalid_argument("experiment: sigma must be at least 2");
    }
}

std::vector<std::uint32_t> sorted_sigmas(const ExperimentConfig& cfg) {
    std::vector<std::uint32_t> sigmas = cfg.sigmas;
    std::sort(sigmas.begin(), sigmas.end());
    sigmas.erase(std::unique(sigmas.begin(), sigmas.end()), sigmas.end());
    return sigmas;
}

void report_progress(const ExperimentConfig& cfg, const char* what, std::uint32_t sigma, int n) {
    if (cfg.progress) *cfg.progress << what << " sigma=" << sigma << " n=" << n << '\n';
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string_view to_string(MufAlgorithm alg) {
    switch (alg) {
        case MufAlgorithm::brute: return "brute";
        case MufAlgorithm::basic: return "basic";
        case MufAlgorithm::early_stop: return "early_stop";
        case MufAlgorithm::dispatch: return "dispatch";
    }
    throw std::invalid_argument("unknown algorithm");
}

MufAlgorithm muf_algorithm_from_string(std::string_view name) {
    if (name == "brute") return MufAlgorithm::brute;
    if (name == "basic") return MufAlgorithm::basic;
    if (name == "early_stop" || name == "early-stop") return MufAlgorithm::early_stop;
    if (name == "dispatch") return MufAlgorithm::dispatch;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

MufResult run_muf_algorithm(MufAlgorithm alg, const Word& w) {
    switch (alg) {
        case MufAlgorithm::brute: return muf_brute(w);
        case MufAlgorithm::basic: return muf_basic(w);
        case MufAlgorithm::early_stop: return muf_early_stop(w);
        case MufAlgorithm::dispatch: return muf(w);
    }
    throw std::invalid_argument("unknown algorithm");
}

std::uint64_t mix64(std::uint64_t x) {
    return SplitMix64::mix64_finalize(x + 0x9e3779b97f4a7c15ULL);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint32_t sigma, int n, long trial_index) {
    std::uint64_t h = master;
    h = mix64(h ^ static_cast<std::uint64_t>(sigma));
    h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)));
    h = mix64(h ^ static_cast<std::uint64_t>(trial_index));
    return h;
}

Word random_word(int n, std::uint32_t sigma, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_word: n must be at least 1");
    if (sigma < 2) throw std::invalid_argument("random_word: sigma must be at least 2");
    SplitMix64 gen(seed);
    std::vector<Letter> letters(static_cast<std::size_t>(n));
    for (auto& l : letters) l = static_cast<Letter>(gen.bounded(sigma));
    return Word(std::move(letters), sigma);
}

std::vector<ExperimentRow> gap_experiment(const ExperimentConfig& cfg) {
    validate_common(cfg);
    const bool exhaustive = cfg.mode == ExperimentConfig::Mode::exhaustive;
    if (!exhaustive && cfg.trials < 1)
        throw std::invalid_argument("gap_experiment: trials must be at least 1");

    const auto sigmas = sorted_sigmas(cfg);
    if (exhaustive) {
        for (std::uint32_t sigma : sigmas) require_enumeration_guard(cfg.n_max, sigma);
    }

    std::vector<ExperimentRow> rows;
    for (std::uint32_t sigma : sigmas) {
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
            std::uint64_t gap_sum = 0;
            long count = 0;
            if (exhaustive) {
                for_each_word(n, sigma, [&](std::span<const Letter> text) {
                    Word w(std::vector<Letter>(text.begin(), text.end()), sigma);
                    gap_sum += static_cast<std::uint64_t>(n - muf(w).length);
                    ++count;
                });
            } else {
                for (long t = 0; t < cfg.trials; ++t) {
                    Word w = random_word(n, sigma, trial_seed(cfg.seed, sigma, n, t));
                    gap_sum += static_cast<std::uint64_t>(n - muf(w).length);
                }
                count = cfg.trials;
            }
            ExperimentRow row;
            row.sigma = sigma;
            row.n = n;
            row.trials_used = count;
            row.mean_gap = static_cast<double>(gap_sum) / static_cast<double>(count);
            row.mean_muf = static_cast<double>(n) - row.mean_gap;
            rows.push_back(std::move(row));
            report_progress(cfg, "gap", sigma, n);
        }
    }
    return rows;
}

std::vector<ExperimentRow> timing_experiment(const ExperimentConfig& cfg) {
    validate_common(cfg);
    if (cfg.trials < 1) throw std::invalid_argument("timing_experiment: trials must be at least 1");
    if (cfg.algorithms.size() < 2)
        throw std::invalid_argument("timing_experiment: select at least two algorithms");

    using Clock = std::chrono::steady_clock;
    const auto sigmas = sorted_sigmas(cfg);
    const long warmup = std::min<long>(cfg.trials, 16);

    std::vector<ExperimentRow> rows;
    std::vector<int> lengths(static_cast<std::size_t>(cfg.trials));
    for (std::uint32_t sigma : sigmas) {
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
            ExperimentRow row;
            row.sigma = sigma;
            row.n = n;
            row.trials_used = cfg.trials;
            std::uint64_t gap_sum = 0;
            // All algorithms see the identical word sample: trial t always
            // regenerates the word from trial_seed(seed, sigma, n, t).
            for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
                const MufAlgorithm alg = cfg.algorithms[ai];
                for (long t = 0; t < warmup; ++t) {
                    Word w = random_word(n, sigma, trial_seed(cfg.seed, sigma, n, t));
                    run_muf_algorithm(alg, w);
                }
                std::chrono::nanoseconds total{0};
                for (long t = 0; t < cfg.trials; ++t) {
                    Word w = random_word(n, sigma, trial_seed(cfg.seed, sigma, n, t));
                    const auto before = Clock::now();
                    MufResult result = run_muf_algorithm(alg, w);
                    total += Clock::now() - before;
                    if (ai == 0) {
                        lengths[static_cast<std::size_t>(t)] = result.length;
                        gap_sum += static_cast<std::uint64_t>(n - result.length);
                    } else if (result.length != lengths[static_cast<std::size_t>(t)]) {
                        throw std::logic_error(
                            "timing_experiment: algorithms disagree on factor length (sigma=" +
                            std::to_string(sigma) + ", n=" + std::to_string(n) +
                            ", trial=" + std::to_string(t) + ")");
                    }
                }
                row.mean_time_s.emplace_back(
                    alg, std::chrono::duration<double>(total).count() / static_cast<double>(cfg.trials));
            }
            row.mean_gap = static_cast<double>(gap_sum) / static_cast<double>(cfg.trials);
            row.mean_muf = static_cast<double>(n) - row.mean_gap;
            rows.push_back(std::move(row));
            report_progress(cfg, "bench", sigma, n);
        }
    }
    return rows;
}

void write_csv(std::span<const ExperimentRow> rows, std::ostream& out) {
    if (rows.empty()) throw std::invalid_argument("write_csv: no rows");
    out << "sigma,n,trials,mean_gap,mean_muf";
    for (const auto& [alg, time] : rows.front().mean_time_s) out << ",time_" << to_string(alg);
    out << '\n';
    for (const ExperimentRow& row : rows) {
        if (row.mean_time_s.size() != rows.front().mean_time_s.size())
            throw std::invalid_argument("write_csv: rows have inconsistent timing columns");
        out << row.sigma << ',' << row.n << ',' << row.trials_used << ','
            << format_real(row.mean_gap) << ',' << format_real(row.mean_muf);
        for (const auto& [alg, time] : row.mean_time_s) out << ',' << format_real(time);
        out << '\n';
    }
}

void write_csv(std::span<const ExperimentRow> rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_csv: cannot open '" + path + "'");
    write_csv(rows, out);
    out.flush();
    if (!out) throw std::runtime_error("write_csv: write failed for '" + path + "'");
}

}  // namespace unbordered
