#pragma once

#include <vector>

#include "unbordered/word.hpp"

namespace unbordered {

/// Largest j >= 0 such that every one of the j letters following the
/// first differs from the first letter.
int leading_mismatch_count(const Word& w);

/// Every sequence of positive integers summing to `total` whose last
/// element is at least `min_last`. Requires total >= 1 and
/// 1 <= min_last <= total.
std::vector<std::vector<int>> compositions(int total, int min_last);

/// Words of length n built by appending prefixes of an unbordered seed,
/// sorted lexicographically. Every word has the seed as prefix, a maximal
/// unbordered factor of length >= |seed|, and batches from distinct seeds
/// never overlap.
struct GenBatch {
    Word seed;
    int n = 0;
    std::vector<Word> words;
};

/// Extends an unbordered seed S of length i (ceil(n/2) <= i <= n) to all
/// words S P_1 ... P_k of length n where each P_t is a prefix of S and
/// the last prefix has length at least n - i - j, with
/// j = min(leading_mismatch_count(S), n - i - 1). Produces exactly
/// 2^j distinct words (one word when i is n or n-1).
GenBatch generate_from_seed(const Word& seed, int n);

/// Union of generate_from_seed over every unbordered seed of length
/// seed_len. Sorted, duplicate-free. Enumeration-guarded.
std::vector<Word> generate_all(int seed_len, int n, std::uint32_t sigma);

}  // namespace unbordered
