#ifndef QUATNORM_QIDEAL_HPP
#define QUATNORM_QIDEAL_HPP

#include "quatnorm/basis.hpp"

namespace quatnorm {

/// Defining relations of the quaternionic polynomial algebra: the 9
/// basis-letter multiplication-table relations, the n conjugate-defining
/// relations, and for every letter a and every l the four commutators
/// a[q_l]-[q_l]a, a[i q_l]-[i q_l]a, a[j q_l]-[j q_l]a, a[k q_l]-[k q_l]a.
/// Total 9 + n + 4n(2n+3) elements.
Basis ideal_generators(int n);

/// All elements of the families BG2(a,b,c), BG3(a,b,c), BG4 and BGm (m >= 5)
/// with leading-term degree <= degree_bound, instantiated over the n-variable
/// alphabet. Families that need more distinct variables than n provides
/// contribute nothing.
Basis enumerate_bg(int n, int degree_bound);

/// Bracket-commutator and bracket-shift rules: every nonzero X[Y]-[Y]X and
/// [XY]-[YX] with X, Y nonempty and |XY| <= degree_bound, deduplicated.
Basis extended_rules(int n, int degree_bound);

} // namespace quatnorm

#endif
