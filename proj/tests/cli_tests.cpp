// Exercises the installed command-line surface end to end.
// Usage: cli_tests <path-to-unbordered-binary>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spawn.hpp"

namespace {

int g_failures = 0;

#define CHECK_MSG(cond, msg)                                              \
    do {                                                                  \
        if (!(cond)) {                                                    \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " "  \
                      << msg << "\n";                                     \
            ++g_failures;                                                 \
        }                                                                 \
    } while (0)

using spawn::RunResult;

std::string g_cli;

RunResult run(const std::string& args) { return spawn::run_command(g_cli + " " + args); }

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

void test_word_commands() {
    RunResult r = run("muf ababa");
    CHECK_MSG(r.exit_code == 0, "muf exit code " << r.exit_code);
    CHECK_MSG(r.out == "1 2 2\n", "muf ababa printed '" << r.out << "'");

    // The m=1 family member: the factor length (last field) must be 9.
    r = run("muf abaababaaababaaba");
    {
        auto fields = lines_of(r.out);
        CHECK_MSG(fields.size() == 1 && fields[0].rfind(' ') != std::string::npos &&
                      fields[0].substr(fields[0].rfind(' ') + 1) == "9",
                  "m=1 family factor length, got '" << r.out << "'");
    }

    r = run("border-array ababa");
    CHECK_MSG(r.out == "0 0 1 2 3\n", "border-array ababa printed '" << r.out << "'");

    r = run("period ababa");
    CHECK_MSG(r.out == "2\n", "period ababa printed '" << r.out << "'");
    r = run("period abaababaaababaaba");
    CHECK_MSG(r.out == "11\n", "period of the m=1 family member printed '" << r.out << "'");

    r = run("muf ab9a");
    CHECK_MSG(r.exit_code == 2, "invalid letter should exit 2, got " << r.exit_code);
    CHECK_MSG(contains(r.err, "9"), "error message names the offending character: " << r.err);

    r = run("muf");
    CHECK_MSG(r.exit_code == 2, "missing word should exit 2, got " << r.exit_code);

    r = run("muf ababa --no-such-flag");
    CHECK_MSG(r.exit_code == 2, "unknown flag should exit 2, got " << r.exit_code);

    r = run("");
    CHECK_MSG(r.exit_code == 2, "missing subcommand should exit 2, got " << r.exit_code);

    r = run("--help");
    CHECK_MSG(r.exit_code == 0, "--help should exit 0, got " << r.exit_code);

    r = run("muf ababa --algorithm basic");
    CHECK_MSG(r.out == "1 2 2\n", "muf --algorithm basic printed '" << r.out << "'");
}

void test_batch_input() {
    const auto path = std::filesystem::temp_directory_path() / "unbordered_cli_words.txt";
    {
        std::ofstream out(path);
        out << "ababa\nabc\n";
    }
    RunResult r = run("period --input " + path.string());
    CHECK_MSG(r.out == "2\n3\n", "period --input printed '" << r.out << "'");
    std::filesystem::remove(path);
}

void test_count() {
    RunResult r = run("count --len 8 --sigma 2");
    CHECK_MSG(r.out == "74\n", "count --len 8 --sigma 2 printed '" << r.out << "'");
    r = run("count --len 8 --sigma 2 --brute");
    CHECK_MSG(r.out == "74\n", "count --brute printed '" << r.out << "'");
    r = run("count --len 2 --sigma 2 --jdiff 1");
    CHECK_MSG(r.out == "2\n", "count --jdiff printed '" << r.out << "'");
    r = run("count --len 60 --sigma 2 --brute");
    CHECK_MSG(r.exit_code == 1, "enumeration guard should exit 1, got " << r.exit_code);
    // Value computed independently with arbitrary-precision arithmetic.
    r = run("count --len 40 --sigma 3");
    CHECK_MSG(r.out == "6771574560263686182\n", "count --len 40 --sigma 3 printed '" << r.out << "'");
    CHECK_MSG(r.exit_code == 0, "recurrence count exit code " << r.exit_code);
}

void test_bounds() {
    struct Expect {
        const char* sigma;
        const char* factor;
        const char* coeff;
    };
    const Expect table[] = {
        {"2", "8.000", "0.500"},
        {"3", "7.200", "0.911"},
        {"4", "4.800", "0.981"},
        {"5", "3.922", "0.993"},
    };
    for (const auto& e : table) {
        RunResult r = run(std::string("bounds --sigma ") + e.sigma);
        CHECK_MSG(r.exit_code == 0, "bounds exit code " << r.exit_code);
        CHECK_MSG(contains(r.out, std::string("gap_factor ") + e.factor),
                  "bounds sigma=" << e.sigma << " factor line, got: " << r.out);
        CHECK_MSG(contains(r.out, std::string("muf_coeff ") + e.coeff),
                  "bounds sigma=" << e.sigma << " coefficient line, got: " << r.out);
    }
    RunResult r = run("bounds --sigma 3 --n 4");
    CHECK_MSG(contains(r.out, "count_lower_bound 45"), "bounds --n printed '" << r.out << "'");
    r = run("bounds --sigma 3 --n 4 --jdiff 1");
    CHECK_MSG(contains(r.out, "jdiff_lower_bound 27"), "bounds --jdiff printed '" << r.out << "'");
}

void test_generate() {
    RunResult r = run("generate --seed-word ab --n 4");
    CHECK_MSG(r.out == "abaa\nabab\n", "generate --seed-word printed '" << r.out << "'");

    // Round trip: every generated word is accepted by muf and reports a
    // factor at least as long as the seed.
    for (const std::string& word : lines_of(r.out)) {
        RunResult m = run("muf " + word);
        CHECK_MSG(m.exit_code == 0, "muf accepts generated word " << word);
        const auto pos = m.out.rfind(' ');
        CHECK_MSG(pos != std::string::npos && std::stoi(m.out.substr(pos)) >= 2,
                  "generated word " << word << " keeps factor >= seed length");
    }

    r = run("generate --len 4 --n 6 --sigma 2");
    CHECK_MSG(lines_of(r.out).size() == 8, "generate --len 4 --n 6 emits 8 words, got " << r.out);

    r = run("generate --seed-word aa --n 4");
    CHECK_MSG(r.exit_code == 2, "bordered seed should exit 2, got " << r.exit_code);

    r = run("generate --len 2 --n 3 --sigma 30");
    CHECK_MSG(r.exit_code == 2, "sigma beyond ASCII should exit 2, got " << r.exit_code);

    r = run("generate --n 4");
    CHECK_MSG(r.exit_code == 2, "generate without source should exit 2, got " << r.exit_code);
}

void test_experiment() {
    const std::string flags = "experiment --sigma 2 --n-min 1 --n-max 6 --mode exhaustive --quiet";
    RunResult r = run(flags);
    CHECK_MSG(r.exit_code == 0, "experiment exit code " << r.exit_code);
    auto lines = lines_of(r.out);
    CHECK_MSG(lines.size() == 7, "experiment emits header + 6 rows, got " << lines.size());
    CHECK_MSG(lines[0] == "sigma,n,trials,mean_gap,mean_muf", "experiment header: " << lines[0]);
    CHECK_MSG(lines[2] == "2,2,4,0.5,1.5", "exhaustive n=2 row: " << lines[2]);

    RunResult again = run(flags);
    CHECK_MSG(again.out == r.out, "exhaustive experiment output is deterministic");

    const std::string mc = "experiment --sigma 2 --n-min 5 --n-max 5 --trials 200 --seed 9 --quiet";
    RunResult mc1 = run(mc);
    RunResult mc2 = run(mc);
    CHECK_MSG(mc1.exit_code == 0, "monte carlo experiment exit code " << mc1.exit_code);
    CHECK_MSG(mc1.out == mc2.out, "seeded monte carlo output is byte-identical");

    const auto out_path = std::filesystem::temp_directory_path() / "unbordered_cli_exp.csv";
    RunResult with_file = run(mc + " --out " + out_path.string());
    CHECK_MSG(with_file.exit_code == 0, "experiment --out exit code " << with_file.exit_code);
    std::ifstream in(out_path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK_MSG(content.str() == mc1.out, "experiment --out file matches stdout bytes");
    std::filesystem::remove(out_path);

    RunResult bad = run(mc + " --out /nonexistent-dir/out.csv");
    CHECK_MSG(bad.exit_code == 1, "unwritable --out should exit 1, got " << bad.exit_code);
    CHECK_MSG(contains(bad.err, "/nonexistent-dir/out.csv"), "error names the path: " << bad.err);
}

void test_bench() {
    RunResult r = run("bench --sigma 2 --n-min 8 --n-max 16 --n-step 8 --trials 20 --quiet");
    CHECK_MSG(r.exit_code == 0, "bench exit code " << r.exit_code);
    auto lines = lines_of(r.out);
    CHECK_MSG(lines.size() == 3, "bench emits header + 2 rows, got " << lines.size());
    CHECK_MSG(lines[0] == "sigma,n,trials,mean_gap,mean_muf,time_basic,time_early_stop",
              "bench header: " << lines[0]);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-unbordered-binary>\n";
        return 1;
    }
    g_cli = argv[1];

    test_word_commands();
    test_batch_input();
    test_count();
    test_bounds();
    test_generate();
    test_experiment();
    test_bench();

    if (g_failures == 0) {
        std::cout << "[PASS] command-line interface (" << g_cli << ")\n";
        return 0;
    }
    std::cerr << g_failures << " CLI check(s) failed\n";
    return 1;
}
