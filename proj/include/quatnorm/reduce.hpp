#ifndef QUATNORM_REDUCE_HPP
#define QUATNORM_REDUCE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quatnorm/basis.hpp"

namespace quatnorm {

/// A witness that a rule's leading word occurs inside a target word:
/// target = left * lead(rule) * right.
struct DivisionMatch {
    std::size_t rule_index;
    Word left;
    Word right;
    Word target;
};

/// Replayable record of a reduction: applying the steps to the input
/// reproduces the final polynomial exactly
/// (final = input - sum_i coeff_i * left_i * rule_i * right_i).
struct ReductionTrace {
    struct Step {
        std::size_t rule_index;
        Word left;
        Word right;
        Rat coeff;
    };
    std::vector<Step> steps;
    Polynomial final;
};

struct ReductionStrategy {
    enum class Kind { Deterministic, SeededRandom };
    Kind kind = Kind::Deterministic;
    std::uint64_t seed = 0;

    static ReductionStrategy deterministic() { return {}; }
    static ReductionStrategy seeded(std::uint64_t seed) {
        return {Kind::SeededRandom, seed};
    }
};

/// Leftmost occurrence of any rule leading word inside w; ties at the same
/// position break toward the lowest rule index. nullopt if w is irreducible.
std::optional<DivisionMatch> find_division(const Word& w, const Basis& basis);

/// Every (position, rule) occurrence, ordered by position then rule index.
std::vector<DivisionMatch> find_all_divisions(const Word& w, const Basis& basis);

/// One top-reduction step: p - c * L * g * R with c cancelling p's leading
/// term. The match must target p's leading word (MatchMismatch otherwise).
Polynomial reduce_step(const Polynomial& p, const DivisionMatch& m, const Basis& basis);

/// Full reduction: top-reduces until the leading word is irreducible, moves it
/// out, and continues on the tail, so every word of the result is irreducible
/// with respect to the basis. Requires basis.degree_bound() >= degree(p).
std::pair<Polynomial, ReductionTrace> normal_form(
    const Polynomial& p, const Basis& basis,
    const ReductionStrategy& strategy = ReductionStrategy::deterministic());

std::pair<bool, ReductionTrace> reduces_to_zero(
    const Polynomial& p, const Basis& basis,
    const ReductionStrategy& strategy = ReductionStrategy::deterministic());

/// A reduced-basis audit hit: the leading word of rule `lead_owner` occurs
/// inside the word `word` of element `word_owner`.
struct ReducednessViolation {
    std::size_t lead_owner;
    std::size_t word_owner;
    Word word;
};

/// Empty iff no element's leading word divides any word of any other element.
std::vector<ReducednessViolation> is_reduced_basis(const Basis& basis);

} // namespace quatnorm

#endif
