#include "unbordered/counting.hpp"

#include <algorithm>

namespace unbordered {

namespace {

BigInt big_pow(std::uint32_t base, int exp) {
    BigInt result = 1;
    BigInt b = base;
    for (int i = 0; i < exp; ++i) result *= b;
    return result;
}

void check_count_args(int length, std::uint32_t sigma, const char* op) {
    if (length < 1) throw std::invalid_argument(std::string(op) + ": length must be at least 1");
    if (sigma < 2) throw std::invalid_argument(std::string(op) + ": sigma must be at least 2");
}

}  // namespace

bool enumeration_within_guard(int length, std::uint32_t sigma) {
    if (length < 0 || sigma < 1) return false;
    std::uint64_t total = 1;
    for (int i = 0; i < length; ++i) {
        if (total > kEnumerationGuard / sigma) return false;
        total *= sigma;
    }
    return total <= kEnumerationGuard;
}

void require_enumeration_guard(int length, std::uint32_t sigma) {
    if (!enumeration_within_guard(length, sigma))
        throw std::length_error("enumeration guard exceeded: sigma^length > 2^26 (sigma=" +
                                std::to_string(sigma) + ", length=" + std::to_string(length) + ")");
}

BigInt count_unbordered_brute(int length, std::uint32_t sigma) {
    check_count_args(length, sigma, "count_unbordered_brute");
    require_enumeration_guard(length, sigma);
    std::uint64_t count = 0;
    std::vector<int> scratch;
    for_each_word(length, sigma, [&](std::span<const Letter> text) {
        if (detail::is_unbordered(text, scratch)) ++count;
    });
    return BigInt(count);
}

BigInt count_unbordered(int length, std::uint32_t sigma) {
    check_count_args(length, sigma, "count_unbordered");
    const BigInt s = sigma;
    std::vector<BigInt> b(static_cast<std::size_t>(length) + 1);
    b[1] = s;
    if (length >= 2) b[2] = s * s - s;
    for (int m = 3; m <= length; ++m) {
        auto idx = static_cast<std::size_t>(m);
        if (m % 2 != 0)
            b[idx] = s * b[idx - 1];
        else
            b[idx] = s * b[idx - 1] - b[idx / 2];
    }
    return b[static_cast<std::size_t>(length)];
}

BigInt count_unbordered_jdiff_brute(int length, int j, std::uint32_t sigma) {
    check_count_args(length, sigma, "count_unbordered_jdiff_brute");
    if (j < 1) throw std::invalid_argument("count_unbordered_jdiff_brute: j must be at least 1");
    if (length < j + 1) throw std::invalid_argument("count_unbordered_jdiff_brute: need length >= j + 1");
    require_enumeration_guard(length, sigma);
    std::uint64_t count = 0;
    std::vector<int> scratch;
    for_each_word(length, sigma, [&](std::span<const Letter> text) {
        for (int k = 1; k <= j; ++k) {
            if (text[static_cast<std::size_t>(k)] == text[0]) return;
        }
        if (detail::is_unbordered(text, scratch)) ++count;
    });
    return BigInt(count);
}

BigInt jdiff_count_lower_bound(int length, int j, std::uint32_t sigma) {
    if (sigma < 2) throw std::invalid_argument("jdiff_count_lower_bound: sigma must be at least 2");
    if (j < 1) throw std::invalid_argument("jdiff_count_lower_bound: j must be at least 1");
    if (length < j + 1) throw std::invalid_argument("jdiff_count_lower_bound: need length >= j + 1");
    return big_pow(sigma - 1, j + 1) * big_pow(sigma, length - j - 1) - big_pow(sigma, length - 2);
}

BigInt unbordered_count_lower_bound(int length, std::uint32_t sigma) {
    if (sigma < 2) throw std::invalid_argument("unbordered_count_lower_bound: sigma must be at least 2");
    if (length < 2) throw std::invalid_argument("unbordered_count_lower_bound: length must be at least 2");
    return big_pow(sigma, length) - big_pow(sigma, length - 1) - big_pow(sigma, length - 2);
}

BigRational gap_bound_factor(std::uint32_t sigma) {
    if (sigma < 2) throw std::invalid_argument("gap_bound_factor: sigma must be at least 2");
    if (sigma == 2) return 8;
    const BigInt s = sigma;
    BigInt num = 2 * s * s * s - 2 * s * s;
    BigInt den = (s - 2) * (s * s - 2 * s + 2);
    return BigRational(num, den);
}

BigRational expected_muf_coefficient(std::uint32_t sigma) {
    BigRational factor = gap_bound_factor(sigma);
    return 1 - factor / BigRational(big_pow(sigma, 4));
}

std::string format_fixed(const BigRational& value, int decimals, RoundDir dir) {
    if (decimals < 0) throw std::invalid_argument("format_fixed: negative decimals");
    BigRational scaled = value * BigRational(big_pow(10, decimals));
    BigInt num = boost::multiprecision::numerator(scaled);
    BigInt den = boost::multiprecision::denominator(scaled);  // canonical: den > 0
    BigInt q = num / den;                                     // truncates toward zero
    BigInt r = num % den;
    if (r != 0) {
        if (dir == RoundDir::up && num > 0) ++q;
        if (dir == RoundDir::down && num < 0) --q;
    }
    bool negative = q < 0;
    if (negative) q = -q;
    std::string digits = q.str();
    if (static_cast<int>(digits.size()) <= decimals) {
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    std::string out = negative ? "-" : "";
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
    if (decimals > 0) {
        out += '.';
        out += digits.substr(digits.size() - static_cast<std::size_t>(decimals));
    }
    return out;
}

std::vector<Word> enumerate_unbordered(int length, std::uint32_t sigma) {
    std::vector<Word> words;
    for_each_unbordered(length, sigma, [&](std::span<const Letter> text) {
        words.emplace_back(std::vector<Letter>(text.begin(), text.end()), sigma);
    });
    return words;
}

CountTable CountTable::build(std::uint32_t sigma, int max_len, int max_j) {
    if (max_len < 1) throw std::invalid_argument("CountTable: max_len must be at least 1");
    CountTable table;
    table.sigma = sigma;
    table.max_len = max_len;
    table.b.resize(static_cast<std::size_t>(max_len) + 1);
    for (int i = 1; i <= max_len; ++i) {
        table.b[static_cast<std::size_t>(i)] = count_unbordered(i, sigma);
    }
    for (int i = 2; i <= max_len; ++i) {
        for (int j = 1; j <= std::min(max_j, i - 1); ++j) {
            table.bj[{i, j}] = count_unbordered_jdiff_brute(i, j, sigma);
        }
    }
    return table;
}

}  // namespace unbordered
