#ifndef QUATNORM_RAT_HPP
#define QUATNORM_RAT_HPP

#include <gmpxx.h>
#include <string>

namespace quatnorm {

/// Exact rational coefficient type. All engine arithmetic is exact.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace quatnorm

#endif
