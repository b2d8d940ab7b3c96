#ifndef EQUICHAIN_RATIONAL_HPP
#define EQUICHAIN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace equichain {

// Exact arbitrary-precision rationals; ideal membership must never round.
using Rational = mpq_class;

inline Rational rational_of(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace equichain

#endif
