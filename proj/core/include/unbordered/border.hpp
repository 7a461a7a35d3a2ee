#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "unbordered/word.hpp"

namespace unbordered {

/**
 * Per-prefix maximal border lengths of a word (the failure function).
 *
 * Storage is 0-based: values[k] is the length of the longest proper
 * prefix of w[1..k+1] that is also its suffix. For every output,
 * values[0] == 0, 0 <= values[k] <= k, and values[k+1] <= values[k] + 1.
 */
struct BorderArray {
    std::vector<int> values;

    std::size_t size() const noexcept { return values.size(); }

    friend bool operator==(const BorderArray&, const BorderArray&) = default;
};

/// Builds the border array in linear time. The empty word yields an empty array.
BorderArray border_array(const Word& w);

/// Length of the longest border of the whole word. Rejects the empty word.
int maximal_border_length(const Word& w);

/// Smallest p such that w[i] == w[i+p] wherever both sides exist.
/// Equals |w| minus the maximal border length. Rejects the empty word.
int minimal_period(const Word& w);

/// True iff the word has no border. A single letter is unbordered.
/// Rejects the empty word.
bool is_unbordered(const Word& w);

/// Largest prefix length p with border_array(w).values[p-1] == 0,
/// i.e. the longest unbordered prefix. Rejects the empty word.
int longest_unbordered_prefix(const Word& w);

/// 0-based start offset of the lexicographically least rotation:
/// rotating w to start at that offset minimises the result, smallest
/// offset winning ties. For primitive w the rotated word is a Lyndon
/// word and therefore unbordered. Linear time. Rejects the empty word.
std::size_t least_rotation(const Word& w);

namespace detail {

/// Failure-function kernel; `out` is resized to text.size().
void border_array_into(std::span<const Letter> text, std::vector<int>& out);

/// Whole-text unbordered test reusing `scratch` across calls.
bool is_unbordered(std::span<const Letter> text, std::vector<int>& scratch);

std::size_t least_rotation(std::span<const Letter> text);

/// 1-based position of the rightmost zero entry (exists: border[0] == 0).
int rightmost_zero(std::span<const int> border);

}  // namespace detail

}  // namespace unbordered
