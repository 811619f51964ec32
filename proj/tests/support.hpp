#ifndef QUATNORM_TESTS_SUPPORT_HPP
#define QUATNORM_TESTS_SUPPORT_HPP

#include <random>
#include <string_view>
#include <vector>

#include "quatnorm/parse.hpp"
#include "quatnorm/poly.hpp"

namespace qtest {

using namespace quatnorm;

inline Polynomial P(std::string_view text, int n = 3) {
    return parse_expression(text, AlphabetConfig(n));
}

inline Word W(std::string_view text, int n = 3) { return parse_word(text, AlphabetConfig(n)); }

inline Word random_word(std::mt19937_64& rng, int n, int max_len, int min_len = 0) {
    AlphabetConfig alph(n);
    auto letters = alph.letters();
    std::uniform_int_distribution<int> len_dist(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    const int len = len_dist(rng);
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) out.push_back(letters[pick(rng)]);
    return Word(std::move(out));
}

/// Random polynomial with at most max_terms terms of degree <= max_deg and
/// coefficients in [-9, 9] (denominators 1..3).
inline Polynomial random_poly(std::mt19937_64& rng, int n, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> term_dist(0, max_terms);
    std::uniform_int_distribution<long> num_dist(-9, 9);
    std::uniform_int_distribution<long> den_dist(1, 3);
    std::vector<Term> terms;
    const int count = term_dist(rng);
    for (int t = 0; t < count; ++t) {
        Rat c = rat_of(num_dist(rng), den_dist(rng));
        if (c == 0) continue;
        terms.push_back(Term{c, random_word(rng, n, max_deg)});
    }
    return Polynomial::from_terms(std::move(terms));
}

} // namespace qtest

#endif
