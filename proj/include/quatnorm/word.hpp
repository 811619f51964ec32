#ifndef QUATNORM_WORD_HPP
#define QUATNORM_WORD_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "quatnorm/letter.hpp"

namespace quatnorm {

/// A monic monomial of the free monoid: a finite sequence of letters.
/// The empty word is the monoid unit.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> init) : letters_(init) {}

    std::size_t degree() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    Letter at(std::size_t pos) const { return letters_[pos]; }

    Word concat(const Word& rhs) const {
        std::vector<Letter> out(letters_);
        out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
        return Word(std::move(out));
    }
    friend Word operator*(const Word& a, const Word& b) { return a.concat(b); }

    Word subword(std::size_t pos, std::size_t len) const {
        return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
    }
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix(std::size_t len) const { return subword(degree() - len, len); }

    bool matches_at(const Word& pattern, std::size_t pos) const {
        if (pos + pattern.degree() > degree()) return false;
        for (std::size_t t = 0; t < pattern.degree(); ++t)
            if (!(letters_[pos + t] == pattern.letters_[t])) return false;
        return true;
    }

    bool contains(const Word& pattern) const {
        if (pattern.degree() > degree()) return false;
        for (std::size_t pos = 0; pos + pattern.degree() <= degree(); ++pos)
            if (matches_at(pattern, pos)) return true;
        return false;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

private:
    std::vector<Letter> letters_;
};

/// Degree lexicographic order: shorter words first, ties broken letterwise
/// left to right under the conjugate-alternating letter order.
inline std::strong_ordering compare_words_deglex(const Word& u, const Word& v) {
    if (u.degree() != v.degree()) return u.degree() <=> v.degree();
    for (std::size_t t = 0; t < u.degree(); ++t) {
        auto c = compare_letters(u.at(t), v.at(t));
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

inline bool deglex_less(const Word& u, const Word& v) {
    return compare_words_deglex(u, v) == std::strong_ordering::less;
}

/// Monoid order: u < v iff every letter of u precedes every letter of v.
/// Vacuously true when either word is empty.
inline bool monoid_less(const Word& u, const Word& v) {
    for (Letter a : u.letters())
        for (Letter b : v.letters())
            if (compare_letters(a, b) != std::strong_ordering::less) return false;
    return true;
}

/// Word conjugation result: letterwise conjugates in reversed order, with a
/// sign of (-1)^(number of basis letters).
struct SignedWord {
    int sign = 1;
    Word word;
};

inline SignedWord conjugate(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.degree());
    int sign = 1;
    for (std::size_t t = w.degree(); t-- > 0;) {
        Letter a = w.at(t);
        if (a.is_basis()) sign = -sign;
        out.push_back(a.conjugated());
    }
    return SignedWord{sign, Word(std::move(out))};
}

} // namespace quatnorm

#endif
