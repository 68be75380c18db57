#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "conglat/bigint.hpp"
#include "conglat/exactint.hpp"

/**
 * Ultimately periodic representations of the recognizable subsets of N and
 * Z, with normalization, Boolean operations and the preimages under the
 * derived unary operations (translation and exact division).
 *
 * UPSetN represents F u ((a+R) + kN): explicit bits F below the threshold a,
 * then a cycle R of length k.  UPSetZ represents G + kZ.  Values are
 * immutable; every operation returns a normalized copy.
 */
namespace conglat::recsets {

class UPSetN {
public:
    UPSetN(unsigned a, unsigned k, std::vector<bool> F, std::vector<bool> R)
        : a_(a), k_(k), F_(std::move(F)), R_(std::move(R)) {
        if (k_ < 1) throw std::domain_error("UPSetN: k must be >= 1");
        if (F_.size() != a_ || R_.size() != k_)
            throw std::domain_error("UPSetN: bitset sizes must match a and k");
    }

    static UPSetN empty() { return UPSetN(0, 1, {}, {false}); }
    static UPSetN all() { return UPSetN(0, 1, {}, {true}); }

    /// The finite set {elems...}.
    static UPSetN finite(const std::vector<unsigned>& elems) {
        unsigned a = 0;
        for (unsigned e : elems) a = std::max(a, e + 1);
        std::vector<bool> F(a, false);
        for (unsigned e : elems) F[e] = true;
        return UPSetN(a, 1, std::move(F), {false});
    }

    /// The arithmetic progression r + kN.
    static UPSetN progression(unsigned r, unsigned k) {
        std::vector<bool> R(k, false);
        R[0] = true;
        return UPSetN(r, k, std::vector<bool>(r, false), std::move(R)).normalized();
    }

    unsigned threshold() const { return a_; }
    unsigned period() const { return k_; }
    const std::vector<bool>& head_bits() const { return F_; }
    const std::vector<bool>& cycle_bits() const { return R_; }

    bool member(const BigInt& x) const {
        if (x < 0) throw std::domain_error("UPSetN::member: x must be >= 0");
        if (x < a_) return F_[to_ulong(x)];
        return R_[to_ulong((x - a_) % k_)];
    }

    bool is_empty() const {
        for (bool b : F_) if (b) return false;
        for (bool b : R_) if (b) return false;
        return true;
    }

    /// Membership-equal representation with least threshold, then least
    /// period dividing the original one.
    UPSetN normalized() const {
        // shrink the period to the least divisor d with R d-periodic
        unsigned k = k_;
        std::vector<bool> R = R_;
        for (unsigned d = 1; d < k; ++d) {
            if (k % d != 0) continue;
            bool periodic = true;
            for (unsigned i = d; i < k && periodic; ++i) periodic = R[i] == R[i % d];
            if (periodic) {
                R.resize(d);
                k = d;
                break;
            }
        }
        // peel the threshold while its top position agrees with the cycle
        unsigned a = a_;
        std::vector<bool> F = F_;
        while (a > 0 && F[a - 1] == R[k - 1]) {
            std::vector<bool> rot(k);
            for (unsigned i = 0; i < k; ++i) rot[i] = R[(i + k - 1) % k];
            R = std::move(rot);
            F.pop_back();
            --a;
        }
        return UPSetN(a, k, std::move(F), std::move(R));
    }

    /// Parameters (a*, k*) of the coarsest ~_{a,k} saturating this set: the
    /// normalized representation, with index a* + k*.
    std::pair<unsigned, unsigned> syntactic_index() const {
        UPSetN n = normalized();
        return {n.a_, n.k_};
    }

    /// {x : x + n in L} for n >= 0.
    UPSetN translate_preimage(const BigInt& n) const {
        if (n < 0) throw std::domain_error("UPSetN::translate_preimage: n must be >= 0");
        std::vector<bool> F(a_), R(k_);
        for (unsigned i = 0; i < a_; ++i) F[i] = member(BigInt(i) + n);
        unsigned shift = unsigned(to_ulong(n % k_));
        for (unsigned j = 0; j < k_; ++j) R[j] = R_[(j + shift) % k_];
        return UPSetN(a_, k_, std::move(F), std::move(R)).normalized();
    }

    /// {x : n * x in L} for n >= 1; the resulting period is k / gcd(n, k).
    UPSetN division_preimage(const BigInt& n) const {
        if (n < 1) throw std::domain_error("UPSetN::division_preimage: n must be >= 1");
        unsigned g = unsigned(to_ulong(exactint::gcd(n, k_)));
        unsigned k = k_ / g;
        unsigned a = a_ == 0 ? 0 : unsigned(to_ulong((BigInt(a_) + n - 1) / n));  // ceil(a/n)
        std::vector<bool> F(a), R(k);
        for (unsigned i = 0; i < a; ++i) F[i] = member(n * i);
        for (unsigned j = 0; j < k; ++j) R[j] = member(n * (a + j));
        return UPSetN(a, k, std::move(F), std::move(R)).normalized();
    }

    friend UPSetN set_union(const UPSetN& x, const UPSetN& y) {
        return pointwise(x, y, [](bool p, bool q) { return p || q; });
    }
    friend UPSetN set_inter(const UPSetN& x, const UPSetN& y) {
        return pointwise(x, y, [](bool p, bool q) { return p && q; });
    }
    friend UPSetN set_diff(const UPSetN& x, const UPSetN& y) {
        return pointwise(x, y, [](bool p, bool q) { return p && !q; });
    }
    UPSetN complement() const {
        std::vector<bool> F(a_), R(k_);
        for (unsigned i = 0; i < a_; ++i) F[i] = !F_[i];
        for (unsigned j = 0; j < k_; ++j) R[j] = !R_[j];
        return UPSetN(a_, k_, std::move(F), std::move(R)).normalized();
    }

    friend bool set_equal(const UPSetN& x, const UPSetN& y) {
        UPSetN nx = x.normalized(), ny = y.normalized();
        return nx.a_ == ny.a_ && nx.k_ == ny.k_ && nx.F_ == ny.F_ && nx.R_ == ny.R_;
    }

private:
    template <typename Op>
    static UPSetN pointwise(const UPSetN& x, const UPSetN& y, Op op) {
        unsigned a = std::max(x.a_, y.a_);
        unsigned long k = std::lcm((unsigned long)x.k_, (unsigned long)y.k_);
        if (k > (1u << 24)) throw std::domain_error("UPSetN: aligned period too large");
        std::vector<bool> F(a), R((unsigned)k);
        for (unsigned i = 0; i < a; ++i) F[i] = op(x.member(i), y.member(i));
        for (unsigned j = 0; j < k; ++j) R[j] = op(x.member(a + j), y.member(a + j));
        return UPSetN(a, (unsigned)k, std::move(F), std::move(R)).normalized();
    }

    unsigned a_, k_;
    std::vector<bool> F_, R_;
};

class UPSetZ {
public:
    UPSetZ(unsigned k, std::vector<bool> G) : k_(k), G_(std::move(G)) {
        if (k_ < 1) throw std::domain_error("UPSetZ: k must be >= 1");
        if (G_.size() != k_) throw std::domain_error("UPSetZ: bitset size must match k");
    }

    static UPSetZ empty() { return UPSetZ(1, {false}); }
    static UPSetZ all() { return UPSetZ(1, {true}); }
    static UPSetZ progression(unsigned r, unsigned k) {
        std::vector<bool> G(k, false);
        G[r % k] = true;
        return UPSetZ(k, std::move(G));
    }

    unsigned period() const { return k_; }
    const std::vector<bool>& bits() const { return G_; }

    bool member(const BigInt& x) const { return G_[to_ulong(floor_mod(x, k_))]; }

    bool is_empty() const {
        for (bool b : G_) if (b) return false;
        return true;
    }

    /// Least period dividing k.
    UPSetZ normalized() const {
        for (unsigned d = 1; d < k_; ++d) {
            if (k_ % d != 0) continue;
            bool periodic = true;
            for (unsigned i = d; i < k_ && periodic; ++i) periodic = G_[i] == G_[i % d];
            if (periodic) return UPSetZ(d, std::vector<bool>(G_.begin(), G_.begin() + d));
        }
        return *this;
    }

    /// {x : x + n in L} for any integer n.
    UPSetZ translate_preimage(const BigInt& n) const {
        std::vector<bool> G(k_);
        unsigned shift = unsigned(to_ulong(floor_mod(n, k_)));
        for (unsigned j = 0; j < k_; ++j) G[j] = G_[(j + shift) % k_];
        return UPSetZ(k_, std::move(G)).normalized();
    }

    /// {x : c * x in L} for any integer c (homothety preimage).  For c = 0
    /// this is Z or the empty set depending on whether 0 is in L.
    UPSetZ homothety_preimage(const BigInt& c) const {
        if (c == 0) return member(0) ? all() : empty();
        unsigned g = unsigned(to_ulong(exactint::gcd(c, k_)));
        unsigned k = k_ / g;
        std::vector<bool> G(k);
        for (unsigned j = 0; j < k; ++j) G[j] = member(c * j);
        return UPSetZ(k, std::move(G)).normalized();
    }

    /// {x : n * x in L} for n >= 1.
    UPSetZ division_preimage(const BigInt& n) const {
        if (n < 1) throw std::domain_error("UPSetZ::division_preimage: n must be >= 1");
        return homothety_preimage(n);
    }

    friend UPSetZ set_union(const UPSetZ& x, const UPSetZ& y) {
        return pointwise(x, y, [](bool p, bool q) { return p || q; });
    }
    friend UPSetZ set_inter(const UPSetZ& x, const UPSetZ& y) {
        return pointwise(x, y, [](bool p, bool q) { return p && q; });
    }
    UPSetZ complement() const {
        std::vector<bool> G(k_);
        for (unsigned j = 0; j < k_; ++j) G[j] = !G_[j];
        return UPSetZ(k_, std::move(G)).normalized();
    }

    friend bool set_equal(const UPSetZ& x, const UPSetZ& y) {
        UPSetZ nx = x.normalized(), ny = y.normalized();
        return nx.k_ == ny.k_ && nx.G_ == ny.G_;
    }

private:
    template <typename Op>
    static UPSetZ pointwise(const UPSetZ& x, const UPSetZ& y, Op op) {
        unsigned long k = std::lcm((unsigned long)x.k_, (unsigned long)y.k_);
        if (k > (1u << 24)) throw std::domain_error("UPSetZ: aligned period too large");
        std::vector<bool> G((unsigned)k);
        for (unsigned j = 0; j < k; ++j) G[j] = op(x.member(j), y.member(j));
        return UPSetZ((unsigned)k, std::move(G)).normalized();
    }

    unsigned k_;
    std::vector<bool> G_;
};

/// A regular (not necessarily recognizable) subset of Z, written as
/// L+ u (-L-) with both parts regular subsets of N.  Exists to express the
/// regular-vs-recognizable counterexample; deliberately supports only
/// membership, union and the mirror x -> -x.
class RegSetZ {
public:
    RegSetZ(UPSetN positive, UPSetN negative)
        : pos_(std::move(positive)), neg_(std::move(negative)) {}

    const UPSetN& positive_part() const { return pos_; }
    const UPSetN& negative_part() const { return neg_; }

    bool member(const BigInt& x) const {
        if (x >= 0 && pos_.member(x)) return true;
        if (x <= 0 && neg_.member(-x)) return true;
        return false;
    }

    friend RegSetZ set_union(const RegSetZ& x, const RegSetZ& y) {
        return RegSetZ(set_union(x.pos_, y.pos_), set_union(x.neg_, y.neg_));
    }

    /// {-x : x in L}.
    RegSetZ mirror() const { return RegSetZ(neg_, pos_); }

private:
    UPSetN pos_, neg_;
};

}  // namespace conglat::recsets
