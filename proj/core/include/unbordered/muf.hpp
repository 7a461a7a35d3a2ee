#pragma once

#include <optional>

#include "unbordered/border.hpp"
#include "unbordered/word.hpp"

namespace unbordered {

/// Location of a maximal unbordered factor; endpoints are 1-based inclusive.
struct MufResult {
    int start = 0;
    int end = 0;
    int length = 0;

    friend bool operator==(const MufResult&, const MufResult&) = default;
};

struct MufStats {
    long border_arrays_built = 0;
};

/// Reference algorithm: examines factors in decreasing length order,
/// leftmost first, and returns the first one that passes a direct
/// prefix-vs-suffix border test. Slow; kept as the correctness oracle.
MufResult muf_brute(const Word& w);

/// Builds the border array of every suffix and picks the longest factor
/// whose entry is zero. Leftmost start wins ties. Quadratic time.
MufResult muf_basic(const Word& w);

/// Same scan as muf_basic starting from the longest suffix, but stops as
/// soon as the remaining suffixes are no longer than the best factor
/// found. Returns the same (start, end, length) as muf_basic.
MufResult muf_early_stop(const Word& w);
MufResult muf_early_stop(const Word& w, MufStats& stats);

/// When the minimal period p of w is shorter than |w|/2, the maximal
/// unbordered factor has length exactly p and an unbordered conjugate of
/// w[1..p] occurs inside the first two periods; returns that occurrence
/// (start = least-rotation offset + 1). Otherwise nullopt.
std::optional<MufResult> muf_fast_path(const Word& w);

/// Dispatcher: the fast path when applicable, muf_early_stop otherwise.
MufResult muf(const Word& w);

/// The binary word a^m b a^{m+1} b a^m b a^{m+2} b a^m b a^{m+1} b a^m
/// of length 7m + 10. Its maximal unbordered factor has length 3m + 6
/// while its minimal period is 4m + 7. Requires m >= 1.
Word assous_pouzet(int m);

}  // namespace unbordered
