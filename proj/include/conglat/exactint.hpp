#pragma once

#include <optional>
#include <stdexcept>
#include <tuple>

#include "conglat/bigint.hpp"

/**
 * Exact integer utilities shared by every other module: gcd/lcm, cumulative
 * lcm, residue constraints with CRT merging, Euler totient and p-valuation.
 *
 * All functions are pure and total on their stated domains; domain violations
 * throw std::domain_error.  Incompatibility of two residue constraints is a
 * value, not a fault.
 */
namespace conglat::exactint {

/// Nonnegative greatest common divisor; gcd(0,0) = 0.
inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Nonnegative least common multiple; lcm(x,0) = 0.
inline BigInt lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

/// Extended gcd: returns (g, s, t) with g = gcd(a,b) >= 0 and s*a + t*b = g.
inline std::tuple<BigInt, BigInt, BigInt> extended_gcd(BigInt a, BigInt b) {
    BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        BigInt q = a / b;  // truncated division keeps the identity exact
        BigInt r = a - q * b;
        a = b; b = r;
        BigInt s2 = s0 - q * s1; s0 = s1; s1 = s2;
        BigInt t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
    return {a, s0, t0};
}

/// lcm(1,...,x) for x >= 1.
inline BigInt lcm_upto(const BigInt& x) {
    if (x < 1) throw std::domain_error("lcm_upto: argument must be >= 1");
    BigInt acc = 1;
    for (BigInt i = 2; i <= x; ++i) acc = lcm(acc, i);
    return acc;
}

/// A congruence condition "value == residue (mod modulus)" with modulus >= 1
/// and the residue reduced to its least nonnegative representative.
class ResidueConstraint {
public:
    ResidueConstraint(BigInt residue, BigInt modulus)
        : modulus_(std::move(modulus)) {
        if (modulus_ < 1) throw std::domain_error("ResidueConstraint: modulus must be >= 1");
        residue_ = floor_mod(residue, modulus_);
    }

    const BigInt& residue() const { return residue_; }
    const BigInt& modulus() const { return modulus_; }

    bool satisfied_by(const BigInt& x) const { return floor_mod(x, modulus_) == residue_; }

    friend bool operator==(const ResidueConstraint&, const ResidueConstraint&) = default;

private:
    BigInt residue_;
    BigInt modulus_;
};

/// Merges two residue constraints into the unique constraint modulo
/// lcm(m1,m2) implying both, or nullopt when they contradict each other
/// (i.e. r1 != r2 mod gcd(m1,m2)).
inline std::optional<ResidueConstraint> crt_merge(const ResidueConstraint& c1,
                                                  const ResidueConstraint& c2) {
    const BigInt& m1 = c1.modulus();
    const BigInt& m2 = c2.modulus();
    auto [g, s, t] = extended_gcd(m1, m2);
    BigInt diff = c2.residue() - c1.residue();
    if (diff % g != 0) return std::nullopt;
    BigInt l = m1 / g * m2;
    // r = r1 + m1 * ((diff/g) * s mod (m2/g)) solves both congruences.
    BigInt r = c1.residue() + m1 * floor_mod(diff / g * s, m2 / g);
    return ResidueConstraint(r, l);
}

/// Primality by trial division; inputs are desk-scale.
inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (BigInt d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Euler totient: #{1 <= j <= k : gcd(j,k) = 1}, phi(1) = 1.
inline BigInt euler_phi(BigInt k) {
    if (k < 1) throw std::domain_error("euler_phi: argument must be >= 1");
    BigInt phi = k;
    for (BigInt p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        phi -= phi / p;
        while (k % p == 0) k /= p;
    }
    if (k > 1) phi -= phi / k;
    return phi;
}

/// p-valuation of x: the largest n with p^n dividing x.  Requires x != 0 and
/// p prime.
inline unsigned valuation(BigInt x, const BigInt& p) {
    if (x == 0) throw std::domain_error("valuation: undefined (infinite) at x = 0");
    if (!is_prime(p)) throw std::domain_error("valuation: p must be prime");
    unsigned v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

}  // namespace conglat::exactint
