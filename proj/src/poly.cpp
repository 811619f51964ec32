#include "quatnorm/poly.hpp"

#include <algorithm>

#include "quatnorm/errors.hpp"

namespace quatnorm {

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return deglex_less(b.word, a.word); // descending
    });
    Polynomial out;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.terms_.empty() && out.terms_.back().word == t.word) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff == 0) out.terms_.pop_back();
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

Polynomial Polynomial::monomial(Rat coeff, Word word) {
    Polynomial out;
    if (coeff != 0) out.terms_.push_back(Term{std::move(coeff), std::move(word)});
    return out;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    // merge of two descending term lists
    Polynomial out;
    out.terms_.reserve(terms_.size() + rhs.terms_.size());
    std::size_t a = 0, b = 0;
    while (a < terms_.size() && b < rhs.terms_.size()) {
        auto cmp = compare_words_deglex(terms_[a].word, rhs.terms_[b].word);
        if (cmp == std::strong_ordering::greater) {
            out.terms_.push_back(terms_[a++]);
        } else if (cmp == std::strong_ordering::less) {
            out.terms_.push_back(rhs.terms_[b++]);
        } else {
            Rat c = terms_[a].coeff + rhs.terms_[b].coeff;
            if (c != 0) out.terms_.push_back(Term{std::move(c), terms_[a].word});
            ++a;
            ++b;
        }
    }
    for (; a < terms_.size(); ++a) out.terms_.push_back(terms_[a]);
    for (; b < rhs.terms_.size(); ++b) out.terms_.push_back(rhs.terms_[b]);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + rhs.scaled(Rat(-1)); }

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial out;
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(Term{t.coeff * c, t.word});
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    std::vector<Term> prods;
    prods.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : rhs.terms_)
            prods.push_back(Term{a.coeff * b.coeff, a.word * b.word});
    return from_terms(std::move(prods));
}

Polynomial Polynomial::framed(const Word& left, const Word& right) const {
    Polynomial out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(Term{t.coeff, left * t.word * right});
    return out;
}

Polynomial Polynomial::tail() const {
    Polynomial out;
    if (terms_.size() <= 1) return out;
    out.terms_.assign(terms_.begin() + 1, terms_.end());
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t t = 0; t < a.terms_.size(); ++t)
        if (!(a.terms_[t].word == b.terms_[t].word) || a.terms_[t].coeff != b.terms_[t].coeff)
            return false;
    return true;
}

Term conjugate_word(const Word& w) {
    SignedWord sw = conjugate(w);
    return Term{Rat(sw.sign), std::move(sw.word)};
}

Polynomial conjugate_poly(const Polynomial& p) {
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        Term c = conjugate_word(t.word);
        out.push_back(Term{t.coeff * c.coeff, std::move(c.word)});
    }
    return Polynomial::from_terms(std::move(out));
}

Polynomial bracket(const Word& w) {
    Term c = conjugate_word(w);
    return Polynomial::from_terms({Term{Rat(1), w}, std::move(c)});
}

Polynomial bracket_commutator(const Word& x, const Word& y) {
    Polynomial b = bracket(y);
    return b.framed(x, Word()) - b.framed(Word(), x);
}

std::string poly_key(const Polynomial& p) {
    std::string key;
    for (const auto& t : p.terms()) {
        key += t.coeff.get_str();
        key += '*';
        for (Letter a : t.word.letters()) {
            key += std::to_string(a.code());
            key += '.';
        }
        key += ';';
    }
    return key;
}

} // namespace quatnorm
