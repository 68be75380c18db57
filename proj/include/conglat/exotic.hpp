#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "conglat/exactint.hpp"
#include "conglat/natint.hpp"

/**
 * Constructors for nontrivial congruence-preserving functions on N:
 *
 *  - floor(e * x!), computed by its exact series identity;
 *  - the zig-zag alternating sum whose divisibility-respecting approximation
 *    is congruence preserving but not monotone;
 *  - the window lift: given any target table, a function g with
 *    (x-y) | (g(x)-g(y)) for all pairs and target(x)-lcm(1..x) < g(x) <= target(x);
 *  - the inductive CRT construction F with F(0)=0, F(1)=F(2)=2 and
 *    F(2^n - 1) == 0 (mod 2^n), each step merging one residue constraint per
 *    prime and taking the least solution >= x.
 */
namespace conglat::exotic {

struct Certificate {
    bool pairwise_divisibility = false;  // (x-y) | (f(x)-f(y)) held on every checked pair
    bool over_linear = false;            // f(x) >= x at every window point
    std::string divisibility_policy;     // "full" or "sampled(<count>,seed=<seed>)"
    std::string representative_policy;
};

struct CPWitnessTable {
    natint::FnTable table;
    Certificate certificate;
};

/// floor(e * x!) for x >= 1 via the exact identity sum_{j<=x} x!/j!
/// (the discarded tail is < 1); returns 1 at x = 0.
inline BigInt floor_e_factorial(unsigned x) {
    if (x == 0) return 1;
    BigInt t = 1;  // sum_{j<=i} i!/j! carried along i = 0..x
    for (unsigned i = 1; i <= x; ++i) t = t * i + 1;
    return t;
}

/// The alternating target sum
///   f(x) = sum_{y<=x even} 2^{y+2} lcm(1..y+2) - sum_{z<=x odd} 2^z lcm(1..z).
inline BigInt zigzag_f(unsigned x) {
    BigInt acc = 0;
    for (unsigned y = 0; y <= x; ++y) {
        if (y % 2 == 0)
            acc += pow_u(2, y + 2) * exactint::lcm_upto(y + 2);
        else
            acc -= pow_u(2, y) * exactint::lcm_upto(y);
    }
    return acc;
}

enum class PairwisePolicy { full, sampled };

/// Verifies the divisibility and over-linearity certificates on a window
/// table.  The sampled policy draws pair indices from a fixed-seed generator
/// so certification is reproducible.
inline Certificate certify(const natint::FnTable& f, PairwisePolicy policy = PairwisePolicy::full,
                           std::size_t sample_count = 1'000'000, std::uint64_t seed = 0x5eedU) {
    Certificate cert;
    cert.over_linear = true;
    for (BigInt x = f.lo; x <= f.hi; ++x)
        if (f(x) < x) { cert.over_linear = false; break; }

    cert.pairwise_divisibility = true;
    if (policy == PairwisePolicy::full) {
        cert.divisibility_policy = "full";
        for (BigInt x = f.lo + 1; x <= f.hi && cert.pairwise_divisibility; ++x)
            for (BigInt y = f.lo; y < x; ++y)
                if ((f(x) - f(y)) % (x - y) != 0) { cert.pairwise_divisibility = false; break; }
    } else {
        cert.divisibility_policy =
            "sampled(" + std::to_string(sample_count) + ",seed=" + std::to_string(seed) + ")";
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
        for (std::size_t i = 0; i < sample_count; ++i) {
            std::size_t a = pick(rng), b = pick(rng);
            if (a == b) continue;
            BigInt x = f.lo + a, y = f.lo + b;
            if ((f(x) - f(y)) % (x - y) != 0) { cert.pairwise_divisibility = false; break; }
        }
    }
    return cert;
}

/// Builds g below `target` by merging, at each x, the residue constraints
/// g(x) == g(x-d) (mod d) for d = 1..x and taking the largest representative
/// <= target(x) of the merged class.  The merges are always compatible: the
/// pairwise divisibility of the already-built values supplies the gcd
/// compatibility at every step.
inline CPWitnessTable cp_window_lift(const natint::FnTable& target) {
    if (target.domain != natint::Domain::N || target.lo != 0)
        throw std::domain_error("cp_window_lift: target window must start at 0 on N");
    std::vector<BigInt> g;
    g.reserve(target.size());
    for (BigInt x = 0; x <= target.hi; ++x) {
        exactint::ResidueConstraint acc(0, 1);
        for (BigInt d = 1; d <= x; ++d) {
            auto merged = exactint::crt_merge(acc, {g[to_ulong(x - d)], d});
            if (!merged)
                throw std::logic_error("cp_window_lift: incompatible constraints at x=" +
                                       x.str() + ", d=" + d.str());
            acc = *merged;
        }
        const BigInt& t = target(x);
        g.push_back(t - floor_mod(t - acc.residue(), acc.modulus()));
    }
    CPWitnessTable out{natint::FnTable(natint::Domain::N, 0, target.hi, std::move(g)), {}};
    out.certificate = certify(out.table);
    out.certificate.representative_policy = "largest representative <= target(x)";
    return out;
}

namespace detail {

inline std::vector<unsigned> primes_upto(unsigned n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<unsigned> primes;
    for (unsigned p = 2; p <= n; ++p) {
        if (!sieve[p]) continue;
        primes.push_back(p);
        for (unsigned long m = (unsigned long)p * p; m <= n; m += p) sieve[m] = false;
    }
    return primes;
}

inline std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
    std::int64_t t0 = 0, t1 = 1;
    std::int64_t r0 = std::int64_t(m), r1 = std::int64_t(a % m);
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t2 = t0 - q * t1; t0 = t1; t1 = t2;
        std::int64_t r2 = r0 - q * r1; r0 = r1; r1 = r2;
    }
    if (r0 != 1) throw std::logic_error("inv_mod_u64: arguments not coprime");
    return std::uint64_t(t0 < 0 ? t0 + std::int64_t(m) : t0);
}

/// One residue constraint with a machine-word modulus.
struct SmallConstraint {
    std::uint64_t residue;
    std::uint64_t modulus;
};

/// Merges pairwise-coprime constraints into (r mod M).  Constraints are
/// first folded into blocks of bounded modulus size, then the blocks are
/// folded into the global pair; this keeps the number of passes over the
/// full-size accumulator proportional to the number of blocks rather than
/// the number of constraints.
inline void merge_coprime(const std::vector<SmallConstraint>& cs, BigInt& r_out, BigInt& m_out) {
    constexpr unsigned kBlockBits = 3600;
    mpz_t r, M, br, bM, tmp, delta;
    mpz_inits(r, M, br, bM, tmp, delta, nullptr);
    mpz_set_ui(r, 0);
    mpz_set_ui(M, 1);
    std::size_t i = 0;
    while (i < cs.size()) {
        // fold a block of constraints into (br mod bM) with small operands
        mpz_set_ui(br, cs[i].residue);
        mpz_set_ui(bM, cs[i].modulus);
        ++i;
        while (i < cs.size() && mpz_sizeinbase(bM, 2) < kBlockBits) {
            std::uint64_t q = cs[i].modulus;
            std::uint64_t rq = mpz_fdiv_ui(br, q);
            std::uint64_t mq = mpz_fdiv_ui(bM, q);
            std::uint64_t d = (cs[i].residue + q - rq % q) % q;
            d = (unsigned __int128)(d) * inv_mod_u64(mq, q) % q;
            mpz_addmul_ui(br, bM, d);
            mpz_mul_ui(bM, bM, q);
            ++i;
        }
        // fold the block into the global accumulator
        if (mpz_cmp_ui(M, 1) == 0) {
            mpz_set(r, br);
            mpz_set(M, bM);
        } else {
            mpz_fdiv_r(tmp, r, bM);           // r mod bM
            mpz_sub(delta, br, tmp);
            mpz_fdiv_r(delta, delta, bM);     // (br - r) mod bM
            mpz_fdiv_r(tmp, M, bM);
            if (mpz_invert(tmp, tmp, bM) == 0)
                throw std::logic_error("merge_coprime: moduli not coprime");
            mpz_mul(delta, delta, tmp);
            mpz_fdiv_r(delta, delta, bM);
            mpz_mul(delta, delta, M);
            mpz_add(r, r, delta);             // r += M * ((br-r)/M mod bM)
            mpz_mul(M, M, bM);
        }
    }
    r_out = BigInt(r);
    m_out = BigInt(M);
    mpz_clears(r, M, br, bM, tmp, delta, nullptr);
}

}  // namespace detail

/// The inductive construction: seeds F(0)=0, F(1)=F(2)=2; for each x >= 3
/// the system F(x) == F(x-d) (mod d), d = 1..x, augmented with
/// F(x) == 0 (mod 2^n) when x = 2^n - 1, reduces to one constraint per prime
/// (modulo the largest power of p among the d's, taken against the matching
/// earlier value).  The per-prime constraints have pairwise coprime moduli,
/// merge by CRT, and F(x) is the least solution >= x: non-constant
/// congruence-preserving functions must satisfy F(x) >= x, and the raw
/// residue class would otherwise contain values that destroy the property
/// later.
///
/// The certificate policy applies to the pairwise divisibility scan only;
/// F(2^n - 1) == 0 (mod 2^n) and over-linearity are always fully checked.
inline CPWitnessTable appendix_F(unsigned x_max, PairwisePolicy policy = PairwisePolicy::full,
                                 std::size_t sample_count = 1'000'000) {
    if (x_max < 3) throw std::domain_error("appendix_F: x_max must be >= 3");
    auto primes = detail::primes_upto(x_max);
    std::vector<std::uint64_t> power(primes.size(), 0);  // current max p-power <= x
    std::vector<BigInt> F(x_max + 1);
    F[0] = 0;
    F[1] = 2;
    F[2] = 2;
    std::vector<detail::SmallConstraint> cs;
    for (unsigned x = 3; x <= x_max; ++x) {
        bool pow2_minus1 = (std::uint64_t(x) & (std::uint64_t(x) + 1)) == 0;  // x = 2^n - 1
        std::size_t live = 0;
        while (live < primes.size() && primes[live] <= x) {
            if (power[live] == 0) power[live] = primes[live];
            while (power[live] <= x / primes[live]) power[live] *= primes[live];
            ++live;
        }
        cs.resize(live);
        for (std::size_t i = 0; i < live; ++i) {
            std::uint64_t q = power[i];
            if (primes[i] == 2 && pow2_minus1)
                cs[i] = {0, std::uint64_t(x) + 1};  // modulus 2^n, residue F(0) = 0
            else
                cs[i] = {mpz_fdiv_ui(F[x - q].backend().data(), q), q};
        }
        BigInt r, M;
        detail::merge_coprime(cs, r, M);
        if (r < x) r += M;  // least representative >= x (M > x for x >= 3)
        F[x] = std::move(r);
    }

    CPWitnessTable out{natint::FnTable(natint::Domain::N, 0, x_max, std::move(F)), {}};
    out.certificate = certify(out.table, policy, sample_count);
    out.certificate.representative_policy = "least representative >= x";
    // the construction's own invariants, always verified in full
    for (std::uint64_t n = 2; (std::uint64_t(1) << n) - 1 <= x_max; ++n) {
        const BigInt& v = out.table(BigInt((std::uint64_t(1) << n) - 1));
        if (v % pow_u(2, unsigned(n)) != 0)
            throw std::logic_error("appendix_F: F(2^n-1) == 0 (mod 2^n) violated at n=" +
                                   std::to_string(n));
    }
    if (!out.certificate.over_linear)
        throw std::logic_error("appendix_F: over-linearity violated");
    return out;
}

}  // namespace conglat::exotic
