#include "unbordered/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace unbordered {

namespace {

void check_letters(const std::vector<Letter>& letters, std::uint32_t sigma) {
    if (sigma < 1) throw std::invalid_argument("Word: sigma must be at least 1");
    for (Letter l : letters) {
        if (l >= sigma)
            throw std::invalid_argument("Word: letter " + std::to_string(l) +
                                        " outside alphabet of size " + std::to_string(sigma));
    }
}

}  // namespace

Word::Word(std::vector<Letter> l, std::uint32_t s) : letters(std::move(l)), sigma(s) {
    check_letters(letters, sigma);
}

Word Word::from_ascii(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    Letter max_letter = 0;
    for (char c : text) {
        if (c < 'a' || c > 'z')
            throw std::invalid_argument(std::string("invalid letter '") + c +
                                        "': words use lowercase ASCII a-z");
        Letter l = static_cast<Letter>(c - 'a');
        max_letter = std::max(max_letter, l);
        letters.push_back(l);
    }
    std::uint32_t sigma = letters.empty() ? 1 : max_letter + 1;
    return Word(std::move(letters), sigma);
}

Word Word::from_ascii(std::string_view text, std::uint32_t sigma) {
    Word w = from_ascii(text);
    check_letters(w.letters, sigma);
    w.sigma = sigma;
    return w;
}

std::string Word::to_ascii() const {
    std::string out;
    out.reserve(letters.size());
    for (Letter l : letters) {
        if (l >= 26) throw std::domain_error("to_ascii: letter beyond 'z'");
        out.push_back(static_cast<char>('a' + l));
    }
    return out;
}

Word Word::prefix(std::size_t len) const {
    if (len > letters.size()) throw std::invalid_argument("prefix: length exceeds word");
    Word w;
    w.letters.assign(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(len));
    w.sigma = sigma;
    return w;
}

}  // namespace unbordered
