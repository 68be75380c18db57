#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace conglat {

/// Arbitrary-precision signed integer, the scalar type used throughout.
using BigInt = boost::multiprecision::mpz_int;

/// Least nonnegative remainder of a modulo m (m >= 1), independent of the
/// sign of a.
inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

/// b^e for a nonnegative machine exponent.
inline BigInt pow_u(const BigInt& b, unsigned long e) {
    return boost::multiprecision::pow(b, e);
}

/// True iff d divides x (d != 0).
inline bool divides(const BigInt& d, const BigInt& x) {
    return x % d == 0;
}

inline unsigned long to_ulong(const BigInt& x) { return x.convert_to<unsigned long>(); }
inline long to_long(const BigInt& x) { return x.convert_to<long>(); }

}  // namespace conglat
