#ifndef QUATNORM_STRUCTCHECK_HPP
#define QUATNORM_STRUCTCHECK_HPP

#include <optional>
#include <vector>

#include "quatnorm/basis.hpp"

namespace quatnorm {

/// Role of each letter in a witness parse of the double non-decreasing
/// normal-form pattern: ceiling-block letter, peak, its paired floor, a basis
/// letter of the trailing chain, or a floor between two basis letters.
enum class PatternRole { Block, Peak, Floor, BasisLetter, BasisFloor };

struct PatternDecomposition {
    std::vector<PatternRole> roles; // one per letter of the word
    int r = 0;                      // peak/floor pairs in the witness
    int s = 0;                      // floors inside the basis-letter chain
    std::optional<Letter> virtual_front; // letter prepended to embed the word mid-pattern
};

/// Decides whether w is a contiguous subword of some monomial matching the
/// double non-decreasing pattern (nondecreasing peak, floor and ceiling
/// sequences, peaks dominating their floors and blocks, k at most once in the
/// basis chain). Returns a certifying decomposition, or nullopt.
std::optional<PatternDecomposition> conforms_normal_pattern(const Word& w,
                                                            const AlphabetConfig& alphabet);

/// All words of degree <= d over the alphabet containing no basis leading
/// word, in deglex order. Requires basis.degree_bound() >= d.
std::vector<Word> irreducible_words(int n, int d, const Basis& basis);

} // namespace quatnorm

#endif
