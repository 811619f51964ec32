#include "quatnorm/oracle.hpp"

#include "quatnorm/errors.hpp"

namespace quatnorm {
namespace oracle {

void CommPoly::add_term(const std::vector<std::uint16_t>& key, const Rat& c) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

CommPoly CommPoly::constant(int vars, Rat c) {
    CommPoly out(vars);
    if (c != 0) out.terms_.emplace(std::vector<std::uint16_t>(static_cast<std::size_t>(vars), 0),
                                   std::move(c));
    return out;
}

CommPoly CommPoly::variable(int vars, int var_index) {
    CommPoly out(vars);
    std::vector<std::uint16_t> key(static_cast<std::size_t>(vars), 0);
    key[static_cast<std::size_t>(var_index)] = 1;
    out.terms_.emplace(std::move(key), Rat(1));
    return out;
}

CommPoly CommPoly::operator+(const CommPoly& rhs) const {
    CommPoly out = *this;
    if (out.vars_ == 0) out.vars_ = rhs.vars_;
    for (const auto& [key, c] : rhs.terms_) out.add_term(key, c);
    return out;
}

CommPoly CommPoly::operator-(const CommPoly& rhs) const { return *this + rhs.negated(); }

CommPoly CommPoly::negated() const {
    CommPoly out(vars_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

CommPoly CommPoly::operator*(const CommPoly& rhs) const {
    CommPoly out(vars_ ? vars_ : rhs.vars_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : rhs.terms_) {
            std::vector<std::uint16_t> key(ka);
            for (std::size_t v = 0; v < key.size(); ++v)
                key[v] = static_cast<std::uint16_t>(key[v] + kb[v]);
            out.add_term(key, ca * cb);
        }
    return out;
}

CoordQuat quat_zero(int n) {
    const int vars = 4 * n;
    return CoordQuat{CommPoly(vars), CommPoly(vars), CommPoly(vars), CommPoly(vars)};
}

CoordQuat quat_one(int n) {
    CoordQuat out = quat_zero(n);
    out.s = CommPoly::constant(4 * n, Rat(1));
    return out;
}

CoordQuat quat_mul(const CoordQuat& a, const CoordQuat& b) {
    return CoordQuat{
        a.s * b.s - a.xi * b.xi - a.yj * b.yj - a.zk * b.zk,
        a.s * b.xi + a.xi * b.s + a.yj * b.zk - a.zk * b.yj,
        a.s * b.yj + a.yj * b.s + a.zk * b.xi - a.xi * b.zk,
        a.s * b.zk + a.zk * b.s + a.xi * b.yj - a.yj * b.xi,
    };
}

CoordQuat quat_add(const CoordQuat& a, const CoordQuat& b) {
    return CoordQuat{a.s + b.s, a.xi + b.xi, a.yj + b.yj, a.zk + b.zk};
}

CoordQuat quat_scale(const CoordQuat& a, const Rat& c) {
    CommPoly factor = CommPoly::constant(a.s.vars(), c);
    return CoordQuat{a.s * factor, a.xi * factor, a.yj * factor, a.zk * factor};
}

CoordQuat quat_conj(const CoordQuat& a) {
    return CoordQuat{a.s, a.xi.negated(), a.yj.negated(), a.zk.negated()};
}

CoordQuat coordinatize_letter(Letter a, int n) {
    const int vars = 4 * n;
    CoordQuat out = quat_zero(n);
    if (a.is_basis()) {
        CommPoly one = CommPoly::constant(vars, Rat(1));
        switch (a.basis_id()) {
            case BasisId::I: out.xi = one; break;
            case BasisId::J: out.yj = one; break;
            case BasisId::K: out.zk = one; break;
        }
        return out;
    }
    if (a.index() > n) throw IndexOutOfRange(a.index(), n);
    const int base = 4 * (a.index() - 1);
    out.s = CommPoly::variable(vars, base);
    out.xi = CommPoly::variable(vars, base + 1);
    out.yj = CommPoly::variable(vars, base + 2);
    out.zk = CommPoly::variable(vars, base + 3);
    if (a.is_qconj()) {
        out.xi = out.xi.negated();
        out.yj = out.yj.negated();
        out.zk = out.zk.negated();
    }
    return out;
}

CoordQuat coordinatize(const Polynomial& p, int n) {
    CoordQuat acc = quat_zero(n);
    for (const Term& t : p.terms()) {
        CoordQuat word_val = quat_one(n);
        for (Letter a : t.word.letters()) word_val = quat_mul(word_val, coordinatize_letter(a, n));
        acc = quat_add(acc, quat_scale(word_val, t.coeff));
    }
    return acc;
}

bool coord_equal(const Polynomial& p, const Polynomial& q, int n) {
    return coordinatize(p - q, n).is_zero();
}

} // namespace oracle
} // namespace quatnorm
