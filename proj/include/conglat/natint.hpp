#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "conglat/bigint.hpp"
#include "conglat/exactint.hpp"

/**
 * Congruences on N and Z and the window-bounded decision procedures for
 * congruence preservation and stable-preorder preservation.
 *
 * Every verdict is relative to the finite window of the function table:
 * "consistent" means no counterexample exists among the window points, never
 * a claim about all of N or Z.
 */
namespace conglat::natint {

enum class Domain { N, Z, NPos };

/// A unary function given by its values on an integer window lo..hi.
struct FnTable {
    Domain domain = Domain::N;
    BigInt lo, hi;
    std::vector<BigInt> values;

    FnTable() = default;
    FnTable(Domain d, BigInt lo_, BigInt hi_, std::vector<BigInt> vals)
        : domain(d), lo(std::move(lo_)), hi(std::move(hi_)), values(std::move(vals)) {
        validate();
    }

    void validate() const {
        if (hi < lo) throw std::domain_error("FnTable: empty window");
        if (domain == Domain::N && lo < 0) throw std::domain_error("FnTable: N window must start >= 0");
        if (domain == Domain::NPos && lo < 1)
            throw std::domain_error("FnTable: N\\{0} window must start >= 1");
        if (BigInt(values.size()) != hi - lo + 1)
            throw std::domain_error("FnTable: one value per window point required");
    }

    std::size_t size() const { return values.size(); }
    bool contains(const BigInt& x) const { return lo <= x && x <= hi; }
    const BigInt& operator()(const BigInt& x) const {
        if (!contains(x)) throw std::domain_error("FnTable: point outside window");
        return values[to_ulong(x - lo)];
    }

    /// Tabulates fn over lo..hi.
    template <typename F>
    static FnTable tabulate(Domain d, const BigInt& lo, const BigInt& hi, F&& fn) {
        std::vector<BigInt> vals;
        for (BigInt x = lo; x <= hi; ++x) vals.push_back(fn(x));
        return FnTable(d, lo, hi, std::move(vals));
    }
};

/// A congruence on N or Z: equality, the frying-pan congruence ~_{a,k} on N,
/// or the modular congruence on Z.
struct Equality {
    friend bool operator==(const Equality&, const Equality&) = default;
};
struct Nak {
    unsigned a;
    unsigned k;  // >= 1
    friend bool operator==(const Nak&, const Nak&) = default;
};
struct Zmod {
    unsigned k;  // >= 1
    friend bool operator==(const Zmod&, const Zmod&) = default;
};
using CongruenceSpec = std::variant<Equality, Nak, Zmod>;

/// Index (number of classes): a+k for ~_{a,k}, k for mod-k.
inline std::optional<unsigned> index_of(const CongruenceSpec& c) {
    if (std::holds_alternative<Equality>(c)) return std::nullopt;
    if (auto* nak = std::get_if<Nak>(&c)) return nak->a + nak->k;
    return std::get<Zmod>(c).k;
}

/// x ~ y under the given congruence.  ~_{a,k} relates x,y >= 0 iff x = y or
/// both are >= a and x == y (mod k).
inline bool related(const CongruenceSpec& c, const BigInt& x, const BigInt& y) {
    if (std::holds_alternative<Equality>(c)) return x == y;
    if (auto* nak = std::get_if<Nak>(&c)) {
        if (nak->k < 1) throw std::domain_error("related: k must be >= 1");
        if (x < 0 || y < 0) throw std::domain_error("related: ~_{a,k} lives on N");
        if (x == y) return true;
        return x >= nak->a && y >= nak->a && (x - y) % nak->k == 0;
    }
    const auto& zm = std::get<Zmod>(c);
    if (zm.k < 1) throw std::domain_error("related: k must be >= 1");
    return (x - y) % zm.k == 0;
}

/// A refuted verdict: which law failed and at which window point(s).
struct Refutation {
    std::string law;
    std::vector<BigInt> witness;
};

/// nullopt = no counterexample in the window.
using Verdict = std::optional<Refutation>;

/// Congruence-preservation check for f on (N,+) via the divisibility
/// characterization: (i) (x-y) | (f(x)-f(y)) for all window pairs and
/// (ii) f constant-on-window or f(x) >= x everywhere on the window.
/// For domain Z only the divisibility condition applies (principal-ring
/// characterization); (ii) is skipped.
inline Verdict check_cp_additive(const FnTable& f) {
    f.validate();
    if (f.domain == Domain::NPos)
        throw std::domain_error("check_cp_additive: domain must be N or Z");
    for (BigInt x = f.lo + 1; x <= f.hi; ++x)
        for (BigInt y = f.lo; y < x; ++y)
            if ((f(x) - f(y)) % (x - y) != 0)
                return Refutation{"divisibility", {x, y}};
    if (f.domain == Domain::N) {
        bool constant = true;
        for (const BigInt& v : f.values)
            if (v != f.values.front()) { constant = false; break; }
        if (!constant)
            for (BigInt x = f.lo; x <= f.hi; ++x)
                if (f(x) < x) return Refutation{"over_linearity", {x}};
    }
    return std::nullopt;
}

/// Stable-preorder-preservation check on (N,+): congruence preserving and
/// monotone nondecreasing on the window.
inline Verdict check_spp_additive(const FnTable& f) {
    if (f.domain != Domain::N)
        throw std::domain_error("check_spp_additive: domain must be N");
    if (auto r = check_cp_additive(f)) return r;
    for (BigInt x = f.lo; x < f.hi; ++x)
        if (f(x) > f(x + 1)) return Refutation{"monotonicity", {x, x + 1}};
    return std::nullopt;
}

struct MonomialFit {
    BigInt coeff;
    unsigned degree;
};

/// Monomial characterization on (N\{0},x): a congruence preserving f with
/// x | f(x) must be f(x) = f(1) * x^n.  Fits n exactly from the smallest
/// window point > 1 and then verifies the whole window; all arithmetic is
/// exact (no floating-point logarithms).
inline std::variant<MonomialFit, Refutation> check_cp_multiplicative(const FnTable& f) {
    if (f.domain != Domain::NPos)
        throw std::domain_error("check_cp_multiplicative: domain must be N\\{0}");
    if (!f.contains(1)) throw std::domain_error("check_cp_multiplicative: window must contain 1");
    if (f.hi < 2) throw std::domain_error("check_cp_multiplicative: window needs a point >= 2");
    for (BigInt x = f.lo; x <= f.hi; ++x)
        if (f(x) < 1) return Refutation{"positivity", {x}};

    BigInt c = f(1);
    bool constant = true;
    for (const BigInt& v : f.values)
        if (v != c) { constant = false; break; }
    if (constant) return MonomialFit{c, 0};

    BigInt s = 2;
    while (!f.contains(s)) ++s;
    BigInt q = f(s);
    if (q % c != 0) return Refutation{"monomial_shape", {s}};
    q /= c;
    unsigned n = 0;
    while (q % s == 0) { q /= s; ++n; }
    if (q != 1) return Refutation{"monomial_shape", {s}};
    for (BigInt x = f.lo; x <= f.hi; ++x)
        if (f(x) != c * pow_u(x, n)) return Refutation{"monomial_shape", {x}};
    return MonomialFit{c, n};
}

struct PreservationViolation {
    CongruenceSpec congruence;
    BigInt x, y;
};

/// Independent oracle: directly tests x ~ y => f(x) ~ f(y) for each listed
/// congruence over all window pairs.  Used to cross-validate the
/// characterization-based checkers; returns the lexicographically first
/// violating pair.
inline std::optional<PreservationViolation> brute_force_preserves(
    const FnTable& f, std::span<const CongruenceSpec> congs) {
    for (const auto& c : congs)
        for (BigInt x = f.lo; x <= f.hi; ++x)
            for (BigInt y = f.lo; y <= f.hi; ++y) {
                if (x == y) continue;
                if (related(c, x, y) && !related(c, f(x), f(y)))
                    return PreservationViolation{c, x, y};
            }
    return std::nullopt;
}

}  // namespace conglat::natint
