#include "unbordered/border.hpp"

#include <stdexcept>

namespace unbordered {

namespace {

void require_nonempty(const Word& w, const char* op) {
    if (w.empty()) throw std::invalid_argument(std::string(op) + ": empty word");
}

}  // namespace

namespace detail {

void border_array_into(std::span<const Letter> text, std::vector<int>& out) {
    out.resize(text.size());
    if (text.empty()) return;
    out[0] = 0;
    int k = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        while (k > 0 && text[i] != text[static_cast<std::size_t>(k)]) {
            k = out[static_cast<std::size_t>(k) - 1];
        }
        if (text[i] == text[static_cast<std::size_t>(k)]) ++k;
        out[i] = k;
    }
}

bool is_unbordered(std::span<const Letter> text, std::vector<int>& scratch) {
    border_array_into(text, scratch);
    return !text.empty() && scratch.back() == 0;
}

std::size_t least_rotation(std::span<const Letter> text) {
    // Minimal cyclic shift over the conceptually doubled word; among equal
    // rotations the smallest offset wins.
    const std::size_t n = text.size();
    auto at = [&](std::size_t i) { return text[i % n]; };
    std::size_t i = 0, ans = 0;
    while (i < n) {
        ans = i;
        std::size_t j = i + 1, k = i;
        while (j < 2 * n && at(k) <= at(j)) {
            if (at(k) < at(j))
                k = i;
            else
                ++k;
            ++j;
        }
        while (i <= k) i += j - k;
    }
    return ans;
}

int rightmost_zero(std::span<const int> border) {
    for (std::size_t i = border.size(); i-- > 0;) {
        if (border[i] == 0) return static_cast<int>(i) + 1;
    }
    throw std::logic_error("rightmost_zero: no zero entry");
}

}  // namespace detail

BorderArray border_array(const Word& w) {
    BorderArray b;
    detail::border_array_into(w.span(), b.values);
    return b;
}

int maximal_border_length(const Word& w) {
    require_nonempty(w, "maximal_border_length");
    return border_array(w).values.back();
}

int minimal_period(const Word& w) {
    require_nonempty(w, "minimal_period");
    return static_cast<int>(w.size()) - maximal_border_length(w);
}

bool is_unbordered(const Word& w) {
    require_nonempty(w, "is_unbordered");
    return maximal_border_length(w) == 0;
}

int longest_unbordered_prefix(const Word& w) {
    require_nonempty(w, "longest_unbordered_prefix");
    BorderArray b = border_array(w);
    return detail::rightmost_zero(b.values);
}

std::size_t least_rotation(const Word& w) {
    require_nonempty(w, "least_rotation");
    return detail::least_rotation(w.span());
}

}  // namespace unbordered
