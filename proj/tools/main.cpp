#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unbordered/border.hpp"
#include "unbordered/counting.hpp"
#include "unbordered/experiment.hpp"
#include "unbordered/generate.hpp"
#include "unbordered/muf.hpp"
#include "unbordered/word.hpp"

namespace {

using namespace unbordered;

// Applies fn to the positional word or to every line of --input.
void for_each_input_word(const std::string& word, const std::string& input_path,
                         const std::function<void(const Word&)>& fn) {
    if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) throw std::runtime_error("cannot open input file '" + input_path + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty()) fn(Word::from_ascii(line));
        }
        return;
    }
    if (word.empty()) throw std::invalid_argument("no word given (pass a word or --input FILE)");
    fn(Word::from_ascii(word));
}

void emit_rows(const std::vector<ExperimentRow>& rows, const std::string& out_path) {
    if (out_path.empty())
        write_csv(std::span<const ExperimentRow>(rows), std::cout);
    else
        write_csv(std::span<const ExperimentRow>(rows), out_path);
}

struct CommonExperimentFlags {
    std::vector<std::uint32_t> sigmas{2, 3, 4, 5};
    int n_min = 1;
    int n_max = 100;
    long trials = 10000;
    std::uint64_t seed = 1;
    std::string out_path;
    bool quiet = false;
};

void add_experiment_flags(CLI::App* cmd, CommonExperimentFlags& flags) {
    cmd->add_option("--sigma", flags.sigmas, "alphabet size(s)")->capture_default_str();
    cmd->add_option("--n-min", flags.n_min, "smallest word length")->capture_default_str();
    cmd->add_option("--n-max", flags.n_max, "largest word length")->capture_default_str();
    cmd->add_option("--trials", flags.trials, "random words per (sigma, n)")->capture_default_str();
    cmd->add_option("--seed", flags.seed, "master seed")->capture_default_str();
    cmd->add_option("--out", flags.out_path, "write CSV here instead of stdout");
    cmd->add_flag("--quiet", flags.quiet, "suppress progress on stderr");
}

int run(int argc, char** argv) {
    CLI::App app{"borders, periods, and maximal unbordered factors of strings"};
    app.require_subcommand(1);

    // muf
    std::string muf_word, muf_input, muf_alg = "dispatch";
    auto* muf_cmd = app.add_subcommand("muf", "maximal unbordered factor: prints start end length");
    muf_cmd->add_option("word", muf_word, "word over a-z");
    muf_cmd->add_option("--input", muf_input, "file with one word per line");
    muf_cmd->add_option("--algorithm", muf_alg, "brute|basic|early-stop|dispatch")
        ->capture_default_str();

    // border-array
    std::string ba_word, ba_input;
    auto* ba_cmd = app.add_subcommand("border-array", "prints space-separated border array values");
    ba_cmd->add_option("word", ba_word, "word over a-z");
    ba_cmd->add_option("--input", ba_input, "file with one word per line");

    // period
    std::string period_word, period_input;
    auto* period_cmd = app.add_subcommand("period", "prints the minimal period");
    period_cmd->add_option("word", period_word, "word over a-z");
    period_cmd->add_option("--input", period_input, "file with one word per line");

    // count
    int count_len = 0, count_jdiff = 0;
    std::uint32_t count_sigma = 2;
    bool count_brute = false;
    auto* count_cmd = app.add_subcommand("count", "number of unbordered words");
    count_cmd->add_option("--len", count_len, "word length")->required();
    count_cmd->add_option("--sigma", count_sigma, "alphabet size")->required();
    count_cmd->add_option("--jdiff", count_jdiff,
                          "restrict to first letter differing from the next j letters");
    count_cmd->add_flag("--brute", count_brute, "force enumeration instead of the recurrence");

    // bounds
    std::uint32_t bounds_sigma = 2;
    std::optional<int> bounds_n;
    std::optional<int> bounds_jdiff;
    auto* bounds_cmd = app.add_subcommand("bounds", "expected-factor-length bound calculator");
    bounds_cmd->add_option("--sigma", bounds_sigma, "alphabet size")->required();
    bounds_cmd->add_option("--n", bounds_n, "also print the unbordered-count lower bound for this length");
    bounds_cmd->add_option("--jdiff", bounds_jdiff, "with --n: also print the j-difference lower bound");

    // generate
    std::string gen_seed_word;
    int gen_n = 0, gen_len = 0;
    std::uint32_t gen_sigma = 2;
    auto* gen_cmd = app.add_subcommand("generate", "words with a long unbordered factor, one per line");
    gen_cmd->add_option("--seed-word", gen_seed_word, "unbordered seed word");
    gen_cmd->add_option("--n", gen_n, "target word length")->required();
    gen_cmd->add_option("--len", gen_len, "seed length: generate from every unbordered seed");
    gen_cmd->add_option("--sigma", gen_sigma, "alphabet size for --len")->capture_default_str();

    // experiment (average gap, Monte-Carlo or exhaustive)
    CommonExperimentFlags exp_flags;
    std::string exp_mode = "montecarlo";
    auto* exp_cmd = app.add_subcommand("experiment", "average gap between n and the factor length; CSV output");
    add_experiment_flags(exp_cmd, exp_flags);
    exp_cmd->add_option("--mode", exp_mode, "montecarlo|exhaustive")->capture_default_str();

    // bench (runtime comparison)
    CommonExperimentFlags bench_flags;
    bench_flags.trials = 1000;
    int bench_step = 1;
    std::vector<std::string> bench_algs{"basic", "early_stop"};
    auto* bench_cmd = app.add_subcommand("bench", "mean running time per word of selected algorithms; CSV output");
    add_experiment_flags(bench_cmd, bench_flags);
    bench_cmd->add_option("--n-step", bench_step, "stride through [n-min, n-max]")->capture_default_str();
    bench_cmd->add_option("--algorithms", bench_algs, "two or more of brute|basic|early_stop|dispatch")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*muf_cmd) {
            const MufAlgorithm alg = muf_algorithm_from_string(muf_alg);
            for_each_input_word(muf_word, muf_input, [&](const Word& w) {
                MufResult r = run_muf_algorithm(alg, w);
                std::cout << r.start << ' ' << r.end << ' ' << r.length << '\n';
            });
        } else if (*ba_cmd) {
            for_each_input_word(ba_word, ba_input, [&](const Word& w) {
                BorderArray b = border_array(w);
                for (std::size_t i = 0; i < b.values.size(); ++i) {
                    if (i) std::cout << ' ';
                    std::cout << b.values[i];
                }
                std::cout << '\n';
            });
        } else if (*period_cmd) {
            for_each_input_word(period_word, period_input, [&](const Word& w) {
                std::cout << minimal_period(w) << '\n';
            });
        } else if (*count_cmd) {
            BigInt result;
            if (count_cmd->count("--jdiff"))
                result = count_unbordered_jdiff_brute(count_len, count_jdiff, count_sigma);
            else if (count_brute)
                result = count_unbordered_brute(count_len, count_sigma);
            else
                result = count_unbordered(count_len, count_sigma);
            std::cout << result.str() << '\n';
        } else if (*bounds_cmd) {
            std::cout << "gap_factor " << format_fixed(gap_bound_factor(bounds_sigma), 3, RoundDir::up)
                      << '\n';
            std::cout << "muf_coeff "
                      << format_fixed(expected_muf_coefficient(bounds_sigma), 3, RoundDir::down) << '\n';
            if (bounds_n) {
                std::cout << "count_lower_bound "
                          << unbordered_count_lower_bound(*bounds_n, bounds_sigma).str() << '\n';
                if (bounds_jdiff) {
                    std::cout << "jdiff_lower_bound "
                              << jdiff_count_lower_bound(*bounds_n, *bounds_jdiff, bounds_sigma).str()
                              << '\n';
                }
            }
        } else if (*gen_cmd) {
            std::vector<Word> words;
            if (!gen_seed_word.empty()) {
                words = generate_from_seed(Word::from_ascii(gen_seed_word), gen_n).words;
            } else if (gen_len > 0) {
                if (gen_sigma > 26)
                    throw std::invalid_argument("generate: sigma must be at most 26 for ASCII output");
                words = generate_all(gen_len, gen_n, gen_sigma);
            } else {
                throw std::invalid_argument("generate: pass --seed-word or --len");
            }
            for (const Word& w : words) std::cout << w.to_ascii() << '\n';
        } else if (*exp_cmd) {
            ExperimentConfig cfg;
            cfg.n_min = exp_flags.n_min;
            cfg.n_max = exp_flags.n_max;
            cfg.sigmas = exp_flags.sigmas;
            cfg.trials = exp_flags.trials;
            cfg.seed = exp_flags.seed;
            if (exp_mode == "montecarlo")
                cfg.mode = ExperimentConfig::Mode::montecarlo;
            else if (exp_mode == "exhaustive")
                cfg.mode = ExperimentConfig::Mode::exhaustive;
            else
                throw std::invalid_argument("experiment: --mode must be montecarlo or exhaustive");
            if (!exp_flags.quiet) cfg.progress = &std::cerr;
            emit_rows(gap_experiment(cfg), exp_flags.out_path);
        } else if (*bench_cmd) {
            ExperimentConfig cfg;
            cfg.n_min = bench_flags.n_min;
            cfg.n_max = bench_flags.n_max;
            cfg.sigmas = bench_flags.sigmas;
            cfg.trials = bench_flags.trials;
            cfg.seed = bench_flags.seed;
            cfg.algorithms.clear();
            for (const std::string& name : bench_algs)
                cfg.algorithms.push_back(muf_algorithm_from_string(name));
            if (!bench_flags.quiet) cfg.progress = &std::cerr;
            if (bench_step < 1) throw std::invalid_argument("bench: --n-step must be positive");
            std::vector<ExperimentRow> rows;
            for (int n = cfg.n_min; n <= cfg.n_max; n += bench_step) {
                ExperimentConfig cell = cfg;
                cell.n_min = cell.n_max = n;
                auto cell_rows = timing_experiment(cell);
                rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
            }
            std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
                return std::pair(a.sigma, a.n) < std::pair(b.sigma, b.n);
            });
            emit_rows(rows, bench_flags.out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
