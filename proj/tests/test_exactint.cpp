#include <catch2/catch_amalgamated.hpp>

#include "conglat/exactint.hpp"

using conglat::BigInt;
namespace ei = conglat::exactint;

namespace {

// Independent oracles.  These recompute the expected values by definition and
// never share code with the functions under test.

BigInt gcd_by_trial(const BigInt& a, const BigInt& b) {
    BigInt aa = abs(a), bb = abs(b);
    if (aa == 0) return bb;
    if (bb == 0) return aa;
    BigInt best = 1;
    for (BigInt d = 1; d * d <= aa; ++d) {
        if (aa % d != 0) continue;
        if (bb % d == 0) best = max(best, d);
        BigInt e = aa / d;
        if (bb % e == 0) best = max(best, e);
    }
    return best;
}

BigInt lcm_fold(unsigned x) {
    BigInt acc = 1;
    for (unsigned i = 2; i <= x; ++i) {
        BigInt b = i;
        acc = acc / ei::gcd(acc, b) * b;
    }
    return acc;
}

// Scans 0..m1*m2-1 for the solutions of both congruences.
std::optional<ei::ResidueConstraint> crt_by_scan(const ei::ResidueConstraint& c1,
                                                 const ei::ResidueConstraint& c2) {
    BigInt bound = c1.modulus() * c2.modulus();
    std::optional<BigInt> first;
    BigInt second = -1;
    for (BigInt x = 0; x < bound; ++x) {
        if (!c1.satisfied_by(x) || !c2.satisfied_by(x)) continue;
        if (!first) first = x;
        else if (second < 0) second = x;
    }
    if (!first) return std::nullopt;
    BigInt period = second >= 0 ? second - *first : bound;
    return ei::ResidueConstraint(*first, period);
}

BigInt phi_by_count(unsigned k) {
    BigInt count = 0;
    for (unsigned j = 1; j <= k; ++j)
        if (ei::gcd(j, k) == 1) ++count;
    return count;
}

unsigned valuation_by_division(BigInt x, const BigInt& p) {
    unsigned v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

}  // namespace

TEST_CASE("gcd basics") {
    REQUIRE(ei::gcd(12, 18) == 6);
    REQUIRE(ei::gcd(0, 5) == 5);
    REQUIRE(ei::gcd(5, 0) == 5);
    REQUIRE(ei::gcd(0, 0) == 0);
    REQUIRE(ei::gcd(-12, 18) == 6);

    BigInt a = conglat::pow_u(2, 40), b = conglat::pow_u(3, 20);
    REQUIRE(ei::gcd(a, b) == gcd_by_trial(a, b));
    REQUIRE(ei::gcd(a, b) == 1);
}

TEST_CASE("extended gcd identity") {
    for (long a : {-36L, -5L, 0L, 7L, 12L, 270L})
        for (long b : {-8L, 0L, 9L, 25L, 192L}) {
            auto [g, s, t] = ei::extended_gcd(a, b);
            REQUIRE(g == ei::gcd(a, b));
            REQUIRE(s * a + t * b == g);
        }
}

TEST_CASE("lcm_upto against the fold oracle") {
    REQUIRE(ei::lcm_upto(1) == 1);
    REQUIRE(ei::lcm_upto(6) == 60);
    REQUIRE(ei::lcm_upto(10) == 2520);
    REQUIRE(ei::lcm_upto(10) == lcm_fold(10));
    REQUIRE(ei::lcm_upto(25) == lcm_fold(25));
    REQUIRE_THROWS_AS(ei::lcm_upto(0), std::domain_error);

    for (unsigned x = 2; x <= 30; ++x)
        REQUIRE(ei::lcm_upto(x) == ei::lcm(ei::lcm_upto(x - 1), x));
}

TEST_CASE("crt_merge on the worked examples") {
    auto merged = ei::crt_merge({2, 3}, {3, 5});
    REQUIRE(merged.has_value());
    REQUIRE(merged->residue() == 8);
    REQUIRE(merged->modulus() == 15);
    REQUIRE(*merged == *crt_by_scan({2, 3}, {3, 5}));

    REQUIRE_FALSE(ei::crt_merge({1, 2}, {0, 2}).has_value());

    ei::ResidueConstraint any(4, 9);
    auto same = ei::crt_merge({0, 1}, any);
    REQUIRE(same.has_value());
    REQUIRE(*same == any);
}

TEST_CASE("crt_merge laws") {
    std::vector<ei::ResidueConstraint> cs = {
        {0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {1, 6}, {5, 12},
    };
    for (const auto& a : cs) {
        auto self = ei::crt_merge(a, a);
        REQUIRE(self.has_value());
        REQUIRE(*self == a);
        for (const auto& b : cs) {
            auto ab = ei::crt_merge(a, b);
            auto ba = ei::crt_merge(b, a);
            REQUIRE(ab == ba);
            REQUIRE(ab == crt_by_scan(a, b));
            for (const auto& c : cs) {
                auto left = ab ? ei::crt_merge(*ab, c) : std::nullopt;
                auto bc = ei::crt_merge(b, c);
                auto right = bc ? ei::crt_merge(a, *bc) : std::nullopt;
                // Associativity can only be compared when both sides exist;
                // one side failing early means the triple is contradictory.
                if (left && right) REQUIRE(*left == *right);
                else REQUIRE((!left.has_value() && !right.has_value()));
            }
        }
    }
}

TEST_CASE("euler_phi") {
    REQUIRE(ei::euler_phi(1) == 1);
    REQUIRE(ei::euler_phi(12) == 4);
    REQUIRE(ei::euler_phi(12) == phi_by_count(12));
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 31u})
        REQUIRE(ei::euler_phi(p) == p - 1);
    for (unsigned k = 1; k <= 60; ++k)
        REQUIRE(ei::euler_phi(k) == phi_by_count(k));
    REQUIRE_THROWS_AS(ei::euler_phi(0), std::domain_error);
}

TEST_CASE("valuation") {
    REQUIRE(ei::valuation(8, 2) == 3);
    REQUIRE(ei::valuation(12, 2) == 2);
    REQUIRE(ei::valuation(12, 2) == valuation_by_division(12, 2));
    REQUIRE(ei::valuation(7, 3) == 0);
    REQUIRE(ei::valuation(-24, 2) == 3);
    REQUIRE_THROWS_AS(ei::valuation(0, 2), std::domain_error);
    REQUIRE_THROWS_AS(ei::valuation(8, 4), std::domain_error);

    // v_p(x*y) = v_p(x) + v_p(y)
    for (long x : {1L, 2L, 6L, -9L, 40L, 81L})
        for (long y : {1L, 3L, 4L, 10L, -27L})
            for (unsigned p : {2u, 3u, 5u})
                REQUIRE(ei::valuation(BigInt(x) * y, p) ==
                        ei::valuation(x, p) + ei::valuation(y, p));
}

TEST_CASE("is_prime trial division") {
    REQUIRE_FALSE(ei::is_prime(0));
    REQUIRE_FALSE(ei::is_prime(1));
    REQUIRE(ei::is_prime(2));
    REQUIRE(ei::is_prime(97));
    REQUIRE_FALSE(ei::is_prime(91));
}
