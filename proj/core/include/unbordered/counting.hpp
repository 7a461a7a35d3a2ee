#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unbordered/border.hpp"
#include "unbordered/word.hpp"

namespace unbordered {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Largest word-space size any brute-force enumeration will walk.
inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 26;

/// True iff sigma^length <= kEnumerationGuard.
bool enumeration_within_guard(int length, std::uint32_t sigma);

/// Throws std::length_error when sigma^length exceeds the guard.
void require_enumeration_guard(int length, std::uint32_t sigma);

/// Visits every word of A^length in lexicographic order. fn receives a
/// span valid only for the duration of the call.
template <class Fn>
void for_each_word(int length, std::uint32_t sigma, Fn&& fn) {
    if (length < 0 || sigma < 1) throw std::invalid_argument("for_each_word: bad arguments");
    std::vector<Letter> buf(static_cast<std::size_t>(length), 0);
    if (length == 0) {
        fn(std::span<const Letter>(buf));
        return;
    }
    for (;;) {
        fn(std::span<const Letter>(buf));
        int pos = length - 1;
        while (pos >= 0 && buf[static_cast<std::size_t>(pos)] == sigma - 1) {
            buf[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++buf[static_cast<std::size_t>(pos)];
    }
}

/// Exact number of unbordered words of the given length, counted by
/// enumerating the whole word space. Guarded; requires sigma >= 2.
BigInt count_unbordered_brute(int length, std::uint32_t sigma);

/// Exact number of unbordered words via the recurrence
///   b(1) = s,  b(2) = s^2 - s,  b(2k+1) = s * b(2k),  b(2k) = s * b(2k-1) - b(k).
/// The recurrence is plumbing, not part of the underlying analysis; it is
/// cross-validated against count_unbordered_brute in the test suite.
BigInt count_unbordered(int length, std::uint32_t sigma);

/// Number of unbordered words of the given length whose first letter
/// differs from each of the following j letters. Enumeration-based,
/// guarded. Requires length >= j + 1 and j >= 1.
BigInt count_unbordered_jdiff_brute(int length, int j, std::uint32_t sigma);

/// (sigma-1)^{j+1} * sigma^{length-j-1} - sigma^{length-2}; may be negative.
/// Lower-bounds count_unbordered_jdiff_brute. Requires length >= j + 1, j >= 1.
BigInt jdiff_count_lower_bound(int length, int j, std::uint32_t sigma);

/// sigma^length - sigma^{length-1} - sigma^{length-2}; lower-bounds
/// count_unbordered. Requires length >= 2.
BigInt unbordered_count_lower_bound(int length, std::uint32_t sigma);

/// Scale factor of the expected-gap bound: the expected length of the
/// maximal unbordered factor of a random word of length n is at least
/// n * (1 - gap_bound_factor(sigma) * sigma^-4) + O(1).
/// Equals 8 for sigma = 2 and (2s^3 - 2s^2) / ((s-2)(s^2 - 2s + 2)) above.
BigRational gap_bound_factor(std::uint32_t sigma);

/// The linear coefficient 1 - gap_bound_factor(sigma) * sigma^-4.
BigRational expected_muf_coefficient(std::uint32_t sigma);

enum class RoundDir { down, up };

/// Renders a rational with exactly `decimals` fractional digits, rounding
/// the last digit in the requested direction (down = toward -inf, up =
/// toward +inf).
std::string format_fixed(const BigRational& value, int decimals, RoundDir dir);

/// Visits the unbordered words of A^length in lexicographic order.
template <class Fn>
void for_each_unbordered(int length, std::uint32_t sigma, Fn&& fn) {
    if (length < 1 || sigma < 2) throw std::invalid_argument("for_each_unbordered: bad arguments");
    require_enumeration_guard(length, sigma);
    std::vector<int> scratch;
    for_each_word(length, sigma, [&](std::span<const Letter> text) {
        if (detail::is_unbordered(text, scratch)) fn(text);
    });
}

/// Materialises the unbordered words of A^length, lexicographically sorted.
std::vector<Word> enumerate_unbordered(int length, std::uint32_t sigma);

/**
 * Exact counts up to max_len: b[i] is the number of unbordered words of
 * length i, and bj[{i, j}] the number of those whose first letter differs
 * from the following j letters (filled for j in [1, min(max_j, i-1)]).
 * b comes from the recurrence; bj is enumeration-based and therefore
 * subject to the guard.
 */
struct CountTable {
    std::uint32_t sigma = 2;
    int max_len = 0;
    std::vector<BigInt> b;  // b[i], entries 1..max_len (index 0 unused)
    std::map<std::pair<int, int>, BigInt> bj;

    static CountTable build(std::uint32_t sigma, int max_len, int max_j = 0);
};

}  // namespace unbordered
