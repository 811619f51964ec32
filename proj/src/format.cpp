#include "quatnorm/format.hpp"

#include <ostream>

namespace quatnorm {

std::string format_letter(Letter a) {
    if (a.is_basis()) {
        switch (a.basis_id()) {
            case BasisId::I: return "i";
            case BasisId::J: return "j";
            case BasisId::K: return "k";
        }
    }
    std::string s = "q" + std::to_string(a.index());
    if (a.is_qconj()) s += '\'';
    return s;
}

std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t t = 0; t < w.degree(); ++t) {
        if (t) s += '*';
        s += format_letter(w.at(t));
    }
    return s;
}

std::string format_rat(const Rat& r) { return r.get_str(); }

std::string format_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool neg = t.coeff < 0;
        Rat mag = neg ? Rat(-t.coeff) : t.coeff;
        if (first) {
            if (neg) s += '-';
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (t.word.empty()) {
            s += format_rat(mag);
        } else if (mag == 1) {
            s += format_word(t.word);
        } else {
            s += format_rat(mag);
            s += '*';
            s += format_word(t.word);
        }
    }
    return s;
}

void write_basis(std::ostream& os, const Basis& basis) {
    os << "# n=" << basis.alphabet().n << " degree_bound=" << basis.degree_bound()
       << " elements=" << basis.size() << '\n';
    for (const auto& el : basis.elements()) {
        os << "# family=" << family_name(el.family) << " params=" << el.params << '\n';
        os << format_poly(el.poly) << '\n';
    }
}

} // namespace quatnorm
