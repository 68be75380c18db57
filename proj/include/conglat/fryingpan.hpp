#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "conglat/exactint.hpp"
#include "conglat/finalg.hpp"

/**
 * The canonical finite monogenic monoids and semirings M_{a,k}: a tail of
 * length a followed by a cycle of length k, carrier {0,...,a+k-1}.  These
 * are exactly the quotients of (N,+) by its nontrivial congruences, with
 * quotient map phi_{a,k}.
 */
namespace conglat::fryingpan {

enum class ArithOp { suc, add, mul };

class FryingPan {
public:
    FryingPan(unsigned tail, unsigned cycle) : a_(tail), k_(cycle) {
        if (k_ < 1) throw std::domain_error("FryingPan: cycle length must be >= 1");
    }

    unsigned tail() const { return a_; }
    unsigned cycle() const { return k_; }
    unsigned size() const { return a_ + k_; }

    /// phi_{a,k}(x) = x for x < a, else a + ((x-a) mod k).  Requires x >= 0.
    unsigned project(const BigInt& x) const {
        if (x < 0) throw std::domain_error("phi_{a,k}: argument must be >= 0");
        if (x < a_) return unsigned(to_ulong(x));
        return a_ + unsigned(to_ulong((x - a_) % k_));
    }

    /// The quotient operation xi_{a,k} = phi_{a,k} . xi on carrier elements.
    unsigned op(ArithOp o, unsigned x, unsigned y = 0) const {
        check_carrier(x);
        unsigned long r;
        switch (o) {
            case ArithOp::suc: r = (unsigned long)x + 1; break;
            case ArithOp::add: check_carrier(y); r = (unsigned long)x + y; break;
            case ArithOp::mul: check_carrier(y); r = (unsigned long)x * y; break;
            default: throw std::logic_error("unreachable");
        }
        return project(BigInt(r));
    }
    unsigned suc(unsigned x) const { return op(ArithOp::suc, x); }
    unsigned add(unsigned x, unsigned y) const { return op(ArithOp::add, x, y); }
    unsigned mul(unsigned x, unsigned y) const { return op(ArithOp::mul, x, y); }

    /// Generators of the monoid <M_{a,k}; +_{a,k}>.  For a >= 2 the unique
    /// generator is 1; for a in {0,1} the generators are the elements of
    /// {1,...,a+k-1} coprime with k.  The one-element monoid M_{0,1} is
    /// generated by 0 (vacuously), which the brute-force orbit confirms.
    std::vector<unsigned> generators() const {
        if (a_ == 0 && k_ == 1) return {0};
        if (a_ >= 2) return {1};
        std::vector<unsigned> out;
        for (unsigned g = 1; g < size(); ++g)
            if (exactint::gcd(g, k_) == 1) out.push_back(g);
        return out;
    }

    /// Number of surjective morphisms (N,+) -> (M_{a,k},+_{a,k}), one per
    /// generator: 1 when a >= 2, Euler phi(k) otherwise.
    BigInt surjective_morphism_count() const {
        if (a_ >= 2) return 1;
        return exactint::euler_phi(k_);
    }

    /// Operation tables as a FiniteAlgebra; ops[0] = add, ops[1] = mul.
    finalg::FiniteAlgebra to_algebra() const {
        unsigned n = size();
        finalg::Operation add{2, std::vector<finalg::Element>(std::size_t(n) * n)};
        finalg::Operation mul{2, std::vector<finalg::Element>(std::size_t(n) * n)};
        for (unsigned x = 0; x < n; ++x)
            for (unsigned y = 0; y < n; ++y) {
                add.table[std::size_t(x) * n + y] = this->add(x, y);
                mul.table[std::size_t(x) * n + y] = this->mul(x, y);
            }
        return finalg::FiniteAlgebra(n, {add, mul});
    }

private:
    void check_carrier(unsigned x) const {
        if (x >= size()) throw std::domain_error("FryingPan: element out of carrier");
    }

    unsigned a_, k_;
};

struct SemiringViolation {
    std::string axiom;
    std::vector<unsigned> witness;
};

/// Exhaustively verifies the semiring axioms of (M_{a,k}, +_{a,k}, x_{a,k}):
/// commutative additive monoid with 0, multiplicative monoid, annihilation
/// by 0 and both distributive laws.  Returns the first counterexample, if
/// any (expected: none).
inline std::optional<SemiringViolation> semiring_check(const FryingPan& fp) {
    unsigned n = fp.size();
    unsigned zero = 0;
    for (unsigned x = 0; x < n; ++x) {
        if (fp.add(zero, x) != x || fp.add(x, zero) != x)
            return SemiringViolation{"additive unit", {x}};
        if (fp.mul(zero, x) != zero || fp.mul(x, zero) != zero)
            return SemiringViolation{"annihilation", {x}};
    }
    // multiplicative unit: phi(1), which is 1 unless the carrier is trivial
    unsigned one = fp.project(1);
    for (unsigned x = 0; x < n; ++x)
        if (fp.mul(one, x) != x || fp.mul(x, one) != x)
            return SemiringViolation{"multiplicative unit", {x}};
    for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y) {
            if (fp.add(x, y) != fp.add(y, x)) return SemiringViolation{"add commutative", {x, y}};
            for (unsigned z = 0; z < n; ++z) {
                if (fp.add(fp.add(x, y), z) != fp.add(x, fp.add(y, z)))
                    return SemiringViolation{"add associative", {x, y, z}};
                if (fp.mul(fp.mul(x, y), z) != fp.mul(x, fp.mul(y, z)))
                    return SemiringViolation{"mul associative", {x, y, z}};
                if (fp.mul(x, fp.add(y, z)) != fp.add(fp.mul(x, y), fp.mul(x, z)))
                    return SemiringViolation{"left distributive", {x, y, z}};
                if (fp.mul(fp.add(x, y), z) != fp.add(fp.mul(x, z), fp.mul(y, z)))
                    return SemiringViolation{"right distributive", {x, y, z}};
            }
        }
    return std::nullopt;
}

struct MonogenicClass {
    unsigned tail, cycle;
    /// iso[x] = the element of the input monoid equal to the sum of x copies
    /// of the generator (iso[0] is the unit).
    std::vector<finalg::Element> iso;
};

/// Classifies a finite monoid presented as a single binary operation table:
/// if the repeated sums of g cover the carrier, returns the unique (a,k)
/// with M isomorphic to M_{a,k} and the isomorphism; otherwise nullopt.
/// Throws if the table is not a monoid, citing the failing axiom instance.
inline std::optional<MonogenicClass> classify_monogenic(const finalg::FiniteAlgebra& A,
                                                        finalg::Element g,
                                                        unsigned op_index = 0) {
    const auto& op = A.ops().at(op_index);
    if (op.arity != 2) throw std::invalid_argument("classify_monogenic: operation must be binary");
    unsigned n = A.size();
    auto at = [&](unsigned x, unsigned y) { return op.table[std::size_t(x) * n + y]; };
    for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y)
            for (unsigned z = 0; z < n; ++z)
                if (at(at(x, y), z) != at(x, at(y, z))) {
                    std::ostringstream msg;
                    msg << "classify_monogenic: not associative at (" << x << "," << y << "," << z << ")";
                    throw std::invalid_argument(msg.str());
                }
    std::optional<unsigned> unit;
    for (unsigned e = 0; e < n && !unit; ++e) {
        bool ok = true;
        for (unsigned x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
        if (ok) unit = e;
    }
    if (!unit) throw std::invalid_argument("classify_monogenic: no unit element");
    if (g >= n) throw std::invalid_argument("classify_monogenic: generator out of carrier");

    // Orbit of g under repeated sums: psi(0) = unit, psi(m+1) = psi(m) + g.
    // Its rho shape gives the tail and cycle lengths.
    std::vector<finalg::Element> psi{*unit};
    std::vector<int> seen_at(n, -1);
    seen_at[*unit] = 0;
    unsigned tail, cycle;
    for (unsigned m = 1;; ++m) {
        finalg::Element next = at(psi.back(), g);
        if (seen_at[next] >= 0) {
            tail = unsigned(seen_at[next]);
            cycle = m - tail;
            break;
        }
        seen_at[next] = int(m);
        psi.push_back(next);
    }
    std::set<finalg::Element> covered(psi.begin(), psi.end());
    if (covered.size() != n) return std::nullopt;
    return MonogenicClass{tail, cycle, psi};
}

/// DOT rendering of the successor digraph Suc_{a,k}: a path of length a
/// feeding a k-cycle.
inline std::string to_dot(const FryingPan& fp) {
    std::ostringstream out;
    out << "digraph fryingpan {\n  rankdir=LR;\n";
    for (unsigned x = 0; x < fp.size(); ++x)
        out << "  " << x << " -> " << fp.suc(x) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace conglat::fryingpan
