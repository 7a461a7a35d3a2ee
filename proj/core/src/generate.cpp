#include "unbordered/generate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "unbordered/border.hpp"
#include "unbordered/counting.hpp"

namespace unbordered {

namespace {

template <class Fn>
void emit_all_compositions(int total, std::vector<int>& parts, Fn&& fn) {
    if (total == 0) {
        fn(parts);
        return;
    }
    for (int part = 1; part <= total; ++part) {
        parts.push_back(part);
        emit_all_compositions(total - part, parts, fn);
        parts.pop_back();
    }
}

// Fixing the last part first keeps the work proportional to the number of
// emitted sequences even when min_last filters out almost everything.
template <class Fn>
void for_each_composition(int total, int min_last, std::vector<int>& parts, Fn&& fn) {
    for (int last = min_last; last <= total; ++last) {
        emit_all_compositions(total - last, parts, [&](std::vector<int>& head) {
            head.push_back(last);
            fn(head);
            head.pop_back();
        });
    }
}

}  // namespace

int leading_mismatch_count(const Word& w) {
    if (w.empty()) throw std::invalid_argument("leading_mismatch_count: empty word");
    int j = 0;
    for (std::size_t k = 1; k < w.size() && w.letters[k] != w.letters[0]; ++k) ++j;
    return j;
}

std::vector<std::vector<int>> compositions(int total, int min_last) {
    if (total < 1) throw std::invalid_argument("compositions: total must be at least 1");
    if (min_last < 1 || min_last > total)
        throw std::invalid_argument("compositions: min_last must lie in [1, total]");
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    for_each_composition(total, min_last, parts, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

GenBatch generate_from_seed(const Word& seed, int n) {
    if (seed.empty()) throw std::invalid_argument("generate_from_seed: empty seed");
    if (!is_unbordered(seed)) throw std::invalid_argument("generate_from_seed: seed is bordered");
    const int i = static_cast<int>(seed.size());
    if (i > n) throw std::invalid_argument("generate_from_seed: seed longer than target");
    if (i < (n + 1) / 2)
        throw std::invalid_argument("generate_from_seed: seed shorter than ceil(n/2)");

    GenBatch batch;
    batch.seed = seed;
    batch.n = n;

    if (i == n) {
        batch.words.push_back(seed);
        return batch;
    }

    const int total = n - i;
    const int j = std::min(leading_mismatch_count(seed), total - 1);
    const int min_last = total - j;

    std::set<Word> words;
    std::vector<int> parts;
    for_each_composition(total, min_last, parts, [&](const std::vector<int>& parts_now) {
        Word w = seed;
        for (int part : parts_now) {
            w.letters.insert(w.letters.end(), seed.letters.begin(),
                             seed.letters.begin() + part);
        }
        words.insert(std::move(w));
    });
    batch.words.assign(words.begin(), words.end());
    return batch;
}

std::vector<Word> generate_all(int seed_len, int n, std::uint32_t sigma) {
    if (seed_len < (n + 1) / 2 || seed_len > n)
        throw std::invalid_argument("generate_all: need ceil(n/2) <= seed_len <= n");
    std::set<Word> words;
    for_each_unbordered(seed_len, sigma, [&](std::span<const Letter> text) {
        Word seed(std::vector<Letter>(text.begin(), text.end()), sigma);
        GenBatch batch = generate_from_seed(seed, n);
        words.insert(batch.words.begin(), batch.words.end());
    });
    return {words.begin(), words.end()};
}

}  // namespace unbordered
