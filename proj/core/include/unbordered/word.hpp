#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unbordered {

using Letter = std::uint32_t;

/**
 * A finite string over the integer alphabet {0, 1, ..., sigma-1}.
 *
 * The empty word is permitted. Comparisons look at the letter sequence
 * only; `sigma` is carried as metadata so that alphabet-dependent
 * computations (counting, experiments) know the universe the word lives in.
 *
 * Human-readable I/O maps 'a' -> 0, 'b' -> 1, ... (lowercase ASCII).
 */
struct Word {
    std::vector<Letter> letters;
    std::uint32_t sigma = 1;

    Word() = default;
    Word(std::vector<Letter> l, std::uint32_t s);

    /// Parses lowercase ASCII letters; sigma becomes max letter + 1 (at least 1).
    /// Throws std::invalid_argument naming the first offending character.
    static Word from_ascii(std::string_view text);

    /// As above with an explicit alphabet size (must cover every letter).
    static Word from_ascii(std::string_view text, std::uint32_t sigma);

    /// Renders letters as 'a' + value. Requires every letter < 26.
    std::string to_ascii() const;

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }

    /// First `len` letters as a word over the same alphabet.
    Word prefix(std::size_t len) const;

    std::span<const Letter> span() const noexcept { return letters; }

    friend bool operator==(const Word& a, const Word& b) noexcept {
        return a.letters == b.letters;
    }
    friend bool operator<(const Word& a, const Word& b) noexcept {
        return a.letters < b.letters;
    }
};

}  // namespace unbordered
