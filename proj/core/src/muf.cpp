#include "unbordered/muf.hpp"

#include <algorithm>
#include <stdexcept>

namespace unbordered {

namespace {

void require_nonempty(const Word& w, const char* op) {
    if (w.empty()) throw std::invalid_argument(std::string(op) + ": empty word");
}

// Direct definitional test: a border of length b means the first b letters
// of the factor equal its last b letters. A bordered string always has an
// unbordered border no longer than half its length, so b <= len/2 suffices.
bool factor_unbordered_direct(std::span<const Letter> text, int start1, int len) {
    const Letter* f = text.data() + (start1 - 1);
    for (int b = 1; 2 * b <= len; ++b) {
        if (std::equal(f, f + b, f + (len - b))) return false;
    }
    return true;
}

MufResult scan_suffixes(const Word& w, bool early_stop, MufStats* stats) {
    const int n = static_cast<int>(w.size());
    int best_len = 0;
    int best_start = 1;
    std::vector<int> border;  // reused across suffixes
    for (int i = 1; i <= n; ++i) {
        if (early_stop && n - i + 1 <= best_len) break;
        if (stats) ++stats->border_arrays_built;
        detail::border_array_into(w.span().subspan(static_cast<std::size_t>(i - 1)), border);
        int len = detail::rightmost_zero(border);
        if (len > best_len) {
            best_len = len;
            best_start = i;
        }
    }
    return {best_start, best_start + best_len - 1, best_len};
}

}  // namespace

MufResult muf_brute(const Word& w) {
    require_nonempty(w, "muf_brute");
    const int n = static_cast<int>(w.size());
    for (int len = n; len >= 1; --len) {
        for (int start = 1; start + len - 1 <= n; ++start) {
            if (factor_unbordered_direct(w.span(), start, len)) {
                return {start, start + len - 1, len};
            }
        }
    }
    throw std::logic_error("muf_brute: unreachable, single letters are unbordered");
}

MufResult muf_basic(const Word& w) {
    require_nonempty(w, "muf_basic");
    return scan_suffixes(w, false, nullptr);
}

MufResult muf_early_stop(const Word& w) {
    require_nonempty(w, "muf_early_stop");
    return scan_suffixes(w, true, nullptr);
}

MufResult muf_early_stop(const Word& w, MufStats& stats) {
    require_nonempty(w, "muf_early_stop");
    return scan_suffixes(w, true, &stats);
}

std::optional<MufResult> muf_fast_path(const Word& w) {
    require_nonempty(w, "muf_fast_path");
    const int n = static_cast<int>(w.size());
    const int p = minimal_period(w);
    if (2 * p >= n) return std::nullopt;
    // w[1..p] is primitive (a shorter period of it would extend to w), so
    // its least rotation is a Lyndon word, hence unbordered. The rotation
    // starts at offset r inside w[1..2p] = PP.
    const auto r = static_cast<int>(detail::least_rotation(w.span().first(static_cast<std::size_t>(p))));
    return MufResult{r + 1, r + p, p};
}

MufResult muf(const Word& w) {
    require_nonempty(w, "muf");
    if (auto fast = muf_fast_path(w)) return *fast;
    return muf_early_stop(w);
}

Word assous_pouzet(int m) {
    if (m < 1) throw std::invalid_argument("assous_pouzet: m must be at least 1");
    const Letter a = 0, b = 1;
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(7 * m + 10));
    auto run_a = [&](int count) { letters.insert(letters.end(), static_cast<std::size_t>(count), a); };
    run_a(m);
    letters.push_back(b);
    run_a(m + 1);
    letters.push_back(b);
    run_a(m);
    letters.push_back(b);
    run_a(m + 2);
    letters.push_back(b);
    run_a(m);
    letters.push_back(b);
    run_a(m + 1);
    letters.push_back(b);
    run_a(m);
    return Word(std::move(letters), 2);
}

}  // namespace unbordered
