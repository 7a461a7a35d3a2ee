#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "unbordered/experiment.hpp"
#include "unbordered/muf.hpp"

using namespace unbordered;

namespace {

Word W(const char* s) { return Word::from_ascii(s); }

void check_result_invariants(const Word& w, const MufResult& r) {
    REQUIRE(r.start >= 1);
    REQUIRE(r.start <= r.end);
    REQUIRE(r.end <= static_cast<int>(w.size()));
    REQUIRE(r.length == r.end - r.start + 1);
    REQUIRE(oracle::factor_is_unbordered(w, static_cast<std::size_t>(r.start - 1),
                                         static_cast<std::size_t>(r.length)));
    REQUIRE(r.length == oracle::muf_reference(w).length);
}

// Replays the early-stop schedule with oracle-side computations only.
long expected_arrays_built(const Word& w) {
    const int n = static_cast<int>(w.size());
    long built = 0;
    int best = 0;
    for (int i = 1; i <= n; ++i) {
        if (n - i + 1 <= best) break;
        ++built;
        int len = oracle::longest_unbordered_prefix_direct(w, static_cast<std::size_t>(i - 1));
        if (len > best) best = len;
    }
    return built;
}

}  // namespace

TEST_CASE("muf_brute examples") {
    CHECK(muf_brute(W("ababa")) == MufResult{1, 2, 2});
    CHECK(muf_brute(W("abc")) == MufResult{1, 3, 3});
    CHECK(muf_brute(assous_pouzet(1)).length == 9);
    CHECK_THROWS_AS(muf_brute(W("")), std::invalid_argument);
}

TEST_CASE("muf_basic examples") {
    CHECK(muf_basic(W("aaabab")) == MufResult{1, 6, 6});
    CHECK(muf_basic(W("aaa")).length == 1);
    CHECK(muf_basic(W("ababa")) == MufResult{1, 2, 2});
    CHECK_THROWS_AS(muf_basic(W("")), std::invalid_argument);
}

TEST_CASE("muf_early_stop examples") {
    CHECK(muf_early_stop(W("ababa")) == MufResult{1, 2, 2});
    // An unbordered word is found on the very first suffix, which also
    // triggers the stopping condition immediately.
    MufStats stats;
    CHECK(muf_early_stop(W("aaabab"), stats) == MufResult{1, 6, 6});
    CHECK(stats.border_arrays_built == 1);
    CHECK(muf_early_stop(assous_pouzet(2)).length == 12);
    CHECK_THROWS_AS(muf_early_stop(W("")), std::invalid_argument);
}

TEST_CASE("muf_fast_path examples") {
    CHECK(muf_fast_path(W("ababab")) == MufResult{1, 2, 2});
    CHECK_FALSE(muf_fast_path(W("abc")).has_value());
    CHECK(muf_fast_path(W("aabaabaab")) == MufResult{1, 3, 3});
    CHECK(muf_brute(W("aabaabaab")).length == 3);
    CHECK_THROWS_AS(muf_fast_path(W("")), std::invalid_argument);
}

TEST_CASE("dispatcher examples") {
    CHECK(muf(W("a")) == MufResult{1, 1, 1});
    CHECK(muf(W("aaaa")).length == 1);
    CHECK_THROWS_AS(muf(W("")), std::invalid_argument);
}

TEST_CASE("counterexample family") {
    for (int m = 1; m <= 20; ++m) {
        Word w = assous_pouzet(m);
        REQUIRE(static_cast<int>(w.size()) == 7 * m + 10);
        REQUIRE(muf(w).length == 3 * m + 6);
        REQUIRE(muf_early_stop(w).length == 3 * m + 6);
        REQUIRE(minimal_period(w) == 4 * m + 7);
    }
    CHECK(assous_pouzet(1).to_ascii() == "abaababaaababaaba");
    CHECK_THROWS_AS(assous_pouzet(0), std::invalid_argument);
}

TEST_CASE("all algorithms agree with the reference exhaustively") {
    auto run = [](const Word& w) {
        MufResult brute = muf_brute(w);
        MufResult basic = muf_basic(w);
        MufResult early = muf_early_stop(w);
        MufResult dispatched = muf(w);
        MufResult reference = oracle::muf_reference(w);
        REQUIRE(brute == reference);
        REQUIRE(basic.length == reference.length);
        REQUIRE(early == basic);
        REQUIRE(dispatched.length == reference.length);
        check_result_invariants(w, dispatched);
    };
    for (int n = 1; n <= 10; ++n) oracle::for_each_word(n, 2, run);
    for (int n = 1; n <= 9; ++n) oracle::for_each_word(n, 3, run);
}

TEST_CASE("period and factor-length properties on the exhaustive suite") {
    auto run = [](const Word& w) {
        const int n = static_cast<int>(w.size());
        const int b = muf(w).length;
        const int p = minimal_period(w);
        if (2 * p < n) REQUIRE(b == p);       // short period forces b = p
        if (7 * b <= 3 * n) REQUIRE(b == p);  // short factor forces b = p
    };
    for (int n = 1; n <= 10; ++n) oracle::for_each_word(n, 2, run);
    for (int n = 1; n <= 7; ++n) oracle::for_each_word(n, 3, run);
}

TEST_CASE("early stop never scans suffixes shorter than the best factor") {
    for (int n = 1; n <= 9; ++n) {
        oracle::for_each_word(n, 2, [&](const Word& w) {
            MufStats stats;
            muf_early_stop(w, stats);
            REQUIRE(stats.border_arrays_built == expected_arrays_built(w));
        });
    }
    for (int trial = 0; trial < 50; ++trial) {
        Word w = random_word(200, 2, trial_seed(0xe5, 2, 200, trial));
        MufStats stats;
        muf_early_stop(w, stats);
        REQUIRE(stats.border_arrays_built == expected_arrays_built(w));
    }
}

TEST_CASE("fast path applies exactly when the period is short") {
    auto run = [](const Word& w) {
        const int n = static_cast<int>(w.size());
        const int p = minimal_period(w);
        auto fast = muf_fast_path(w);
        REQUIRE(fast.has_value() == (2 * p < n));
        if (fast) {
            REQUIRE(fast->length == p);
            REQUIRE(fast->length == oracle::muf_reference(w).length);
            REQUIRE(oracle::factor_is_unbordered(w, static_cast<std::size_t>(fast->start - 1),
                                                 static_cast<std::size_t>(fast->length)));
        }
    };
    for (int n = 1; n <= 10; ++n) oracle::for_each_word(n, 2, run);
    for (int n = 1; n <= 6; ++n) oracle::for_each_word(n, 4, run);
}
