#ifndef QUATNORM_BASIS_HPP
#define QUATNORM_BASIS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quatnorm/poly.hpp"

namespace quatnorm {

enum class Family {
    BG2a,
    BG2b,
    BG2c,
    BG3a,
    BG3b,
    BG3c,
    BG4,
    BGm,
    GenTable,
    GenConj,
    GenComm,
    ExtCommXY,
    ExtShift,
};

std::string_view family_name(Family f);

/// One rewrite rule: a nonzero polynomial with its originating family and the
/// parameter instantiation that produced it. The leading word is cached.
struct BasisElement {
    Polynomial poly;
    Family family;
    std::string params;
    Word lead;
    Rat lead_coeff;

    BasisElement(Polynomial p, Family f, std::string prm)
        : poly(std::move(p)), family(f), params(std::move(prm)) {
        const Term& lt = poly.leading_term(); // throws on zero
        lead = lt.word;
        lead_coeff = lt.coeff;
    }
};

/// Immutable indexed rule collection with a leading-word lookup index.
class Basis {
public:
    Basis(AlphabetConfig alphabet, int degree_bound, std::vector<BasisElement> elements);

    const AlphabetConfig& alphabet() const { return alphabet_; }
    int degree_bound() const { return degree_bound_; }
    std::size_t size() const { return elements_.size(); }
    const BasisElement& operator[](std::size_t idx) const { return elements_[idx]; }
    const std::vector<BasisElement>& elements() const { return elements_; }

    /// Rule indices whose leading word starts with the given letter, in index order.
    const std::vector<std::size_t>& rules_starting_with(Letter a) const;

    /// Copy without the element at the given index (for corruption experiments).
    Basis without(std::size_t idx) const;

    /// Union of two rule sets over the same alphabet; duplicates dropped,
    /// degree bound is the max of the two.
    Basis merged(const Basis& other) const;

private:
    AlphabetConfig alphabet_;
    int degree_bound_;
    std::vector<BasisElement> elements_;
    std::map<std::int32_t, std::vector<std::size_t>> by_first_letter_;
    std::vector<std::size_t> empty_;

    void build_index();
};

} // namespace quatnorm

#endif
