#ifndef QUATNORM_POLY_HPP
#define QUATNORM_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quatnorm/rat.hpp"
#include "quatnorm/word.hpp"

namespace quatnorm {

/// A scaled monic monomial. Terms stored inside a Polynomial always have a
/// nonzero coefficient.
struct Term {
    Rat coeff;
    Word word;
};

/// Element of the free associative algebra over the rationals: a sequence of
/// terms kept strictly descending under deglex, no zero coefficients, no
/// repeated words.
class Polynomial {
public:
    Polynomial() = default;

    /// Normalizes an arbitrary term list: sorts, merges equal words, drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    /// The monomial c*w; zero coefficient yields the zero polynomial.
    static Polynomial monomial(Rat coeff, Word word);
    static Polynomial monomial(const Word& word) { return monomial(Rat(1), word); }
    static Polynomial constant(Rat c) { return monomial(std::move(c), Word()); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Deglex-maximal term. Throws ZeroPolynomial on the zero polynomial.
    const Term& leading_term() const;

    /// Degree of the leading term; the zero polynomial has degree 0 by convention.
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.front().word.degree(); }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator-() const { return scaled(Rat(-1)); }
    Polynomial operator*(const Polynomial& rhs) const;

    Polynomial scaled(const Rat& c) const;

    /// L * this * R for monic monomials L, R. Term order is preserved by
    /// one-sided monomial multiplication, so no re-sort is needed.
    Polynomial framed(const Word& left, const Word& right) const;

    /// this minus its leading term.
    Polynomial tail() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p.scaled(c); }

/// Termwise conjugation of a word as a Term: reversed letterwise conjugate
/// with sign (-1)^(number of basis letters). An involution.
Term conjugate_word(const Word& w);

/// Linear extension of word conjugation to polynomials. An involution.
Polynomial conjugate_poly(const Polynomial& p);

/// Bracket of a monomial: w + conjugate(w), merged when the terms coincide.
/// The empty word yields the constant 2.
Polynomial bracket(const Word& w);

/// X*[Y] - [Y]*X.
Polynomial bracket_commutator(const Word& x, const Word& y);

/// Canonical byte encoding of a polynomial; equal strings iff equal polynomials.
std::string poly_key(const Polynomial& p);

} // namespace quatnorm

#endif
