#ifndef QUATNORM_ORACLE_HPP
#define QUATNORM_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "quatnorm/poly.hpp"

namespace quatnorm {
namespace oracle {

/// Commutative polynomial in the 4n coordinate variables, keyed by dense
/// exponent vectors in the order u_1, x_1, y_1, z_1, ..., u_n, x_n, y_n, z_n.
/// This representation deliberately shares nothing with the free-algebra
/// Polynomial or the reduction engine.
class CommPoly {
public:
    CommPoly() = default;
    explicit CommPoly(int vars) : vars_(vars) {}
    static CommPoly constant(int vars, Rat c);
    static CommPoly variable(int vars, int var_index);

    bool is_zero() const { return terms_.empty(); }
    int vars() const { return vars_; }
    const std::map<std::vector<std::uint16_t>, Rat>& terms() const { return terms_; }

    CommPoly operator+(const CommPoly& rhs) const;
    CommPoly operator-(const CommPoly& rhs) const;
    CommPoly operator*(const CommPoly& rhs) const;
    CommPoly negated() const;

    friend bool operator==(const CommPoly& a, const CommPoly& b) {
        return a.terms_ == b.terms_;
    }

private:
    int vars_ = 0;
    std::map<std::vector<std::uint16_t>, Rat> terms_;
    void add_term(const std::vector<std::uint16_t>& key, const Rat& c);
};

/// Quaternion with commutative-polynomial coordinates: s + xi*i + yj*j + zk*k.
struct CoordQuat {
    CommPoly s, xi, yj, zk;

    bool is_zero() const {
        return s.is_zero() && xi.is_zero() && yj.is_zero() && zk.is_zero();
    }
    friend bool operator==(const CoordQuat& a, const CoordQuat& b) {
        return a.s == b.s && a.xi == b.xi && a.yj == b.yj && a.zk == b.zk;
    }
};

CoordQuat quat_zero(int n);
CoordQuat quat_one(int n);

/// Hamilton product.
CoordQuat quat_mul(const CoordQuat& a, const CoordQuat& b);
CoordQuat quat_add(const CoordQuat& a, const CoordQuat& b);
CoordQuat quat_scale(const CoordQuat& a, const Rat& c);

/// Quaternionic conjugate: negated vector part.
CoordQuat quat_conj(const CoordQuat& a);

/// Semantic image of a letter: q_l -> u_l + x_l i + y_l j + z_l k, conjugates
/// with negated vector part, basis letters to the unit imaginaries.
CoordQuat coordinatize_letter(Letter a, int n);

/// Homomorphic image of a free polynomial: words multiply out left to right,
/// sums and scalings map linearly. Throws IndexOutOfRange for letters beyond n.
CoordQuat coordinatize(const Polynomial& p, int n);

/// Equality modulo the defining ideal: coordinatize(p - q) == 0.
bool coord_equal(const Polynomial& p, const Polynomial& q, int n);

} // namespace oracle
} // namespace quatnorm

#endif
