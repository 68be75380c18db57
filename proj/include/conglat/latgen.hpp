#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "conglat/bigint.hpp"
#include "conglat/natint.hpp"
#include "conglat/recsets.hpp"

/**
 * Generation of the lattice L_A(L) and Boolean algebra B_A(L) for a
 * recognizable base set L over (N,+), (N\{0},x), (Z,+) and (Z,+,x), with
 * membership and DNF queries and the windowed verification that f^-1(L)
 * lies in the generated family.
 *
 * Every family member is a union of syntactic-congruence classes of L, so
 * members are stored as class bitmasks: the syntactic index is finite for
 * recognizable L and the closure is a worklist fixpoint over masks,
 * processed in bitmask order for reproducible provenance.
 */
namespace conglat::latgen {

enum class Signature { add, mul, add_mul };
enum class ClosureKind { lattice, boolean_algebra };

/// A derived unary operation x -> scale*x + shift, as preimage generator.
struct Duo {
    BigInt scale = 1;
    BigInt shift = 0;

    std::string describe() const {
        std::ostringstream out;
        if (scale == 1 && shift == 0) return "L";
        if (scale == 1) { out << "L-" << shift; return out.str(); }
        if (shift == 0) { out << "L/" << scale; return out.str(); }
        out << "(x->" << scale << "x+" << shift << ")^-1(L)";
        return out.str();
    }
};

/// How the closure first produced a member.  Operands are recorded as
/// masks; resolve them to member indices with GeneratedFamily::find_mask.
struct Derivation {
    enum class Kind { seed, meet, join, complement };
    Kind kind;
    std::uint64_t a = 0;  // seed index for seeds, else the left operand mask
    std::uint64_t b = 0;  // right operand mask for meet/join
};

using Mask = std::uint64_t;

namespace detail {

/// Class structure of the carrier: representatives and class lookup.
struct ClassesN {
    unsigned a, k;  // normalized syntactic parameters; index a+k
    unsigned index() const { return a + k; }
    unsigned class_of(const BigInt& x) const {
        if (x < 0) throw std::domain_error("class_of: the carrier is N");
        if (x < a) return unsigned(to_ulong(x));
        return a + unsigned(to_ulong((x - a) % k));
    }
    BigInt rep(unsigned c) const { return c; }
};

struct ClassesZ {
    unsigned k;
    unsigned index() const { return k; }
    unsigned class_of(const BigInt& x) const { return unsigned(to_ulong(floor_mod(x, k))); }
    BigInt rep(unsigned c) const { return c; }
};

struct ClassesMulFinite {
    std::vector<BigInt> universe;       // sorted divisors of the base elements
    std::vector<unsigned> class_of_el;  // class per universe element
    unsigned classes = 0;               // total classes including the sink
    unsigned sink = 0;                  // class of every x dividing nothing in L
    unsigned index() const { return classes; }
    unsigned class_of(const BigInt& x) const {
        auto it = std::lower_bound(universe.begin(), universe.end(), x);
        if (it == universe.end() || *it != x) return sink;
        return class_of_el[std::size_t(it - universe.begin())];
    }
    BigInt rep(unsigned c) const {
        if (c == sink) return universe.empty() ? BigInt(1) : universe.back() + 1;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (class_of_el[i] == c) return universe[i];
        throw std::logic_error("ClassesMulFinite: class without representative");
    }
};

struct ClassesZp {
    unsigned p, prec;
    unsigned pn;  // p^prec
    unsigned index() const { return pn; }
    unsigned class_of(const BigInt& x) const { return unsigned(to_ulong(floor_mod(x, pn))); }
    BigInt rep(unsigned c) const { return c; }
};

using Classes = std::variant<ClassesN, ClassesZ, ClassesMulFinite, ClassesZp>;

struct ClosureResult {
    std::vector<Mask> members;  // sorted by mask value
    std::map<Mask, Derivation> derivations;
};

/// Worklist fixpoint: closes the seed masks under meet/join (and complement
/// for a Boolean family).  The worklist is processed in ascending bitmask
/// order and each new member is combined with every member known so far, so
/// the first derivation recorded per member is reproducible.
inline ClosureResult close_masks(const std::vector<Mask>& seed_masks, ClosureKind kind,
                                 unsigned index, std::size_t max_members) {
    Mask full = index >= 64 ? ~Mask{0} : ((Mask{1} << index) - 1);
    ClosureResult out;
    std::set<Mask> known;
    std::set<Mask> pending;
    auto add = [&](Mask m, Derivation d) {
        if (!known.insert(m).second) return;
        if (known.size() > max_members)
            throw std::domain_error("latgen: family exceeds member bound");
        out.derivations.emplace(m, d);
        pending.insert(m);
    };
    for (std::size_t s = 0; s < seed_masks.size(); ++s)
        add(seed_masks[s], Derivation{Derivation::Kind::seed, s, 0});
    std::vector<Mask> done;
    while (!pending.empty()) {
        Mask x = *pending.begin();
        pending.erase(pending.begin());
        if (kind == ClosureKind::boolean_algebra)
            add(full & ~x, Derivation{Derivation::Kind::complement, x, 0});
        for (Mask y : done) {
            add(x & y, Derivation{Derivation::Kind::meet, x, y});
            add(x | y, Derivation{Derivation::Kind::join, x, y});
        }
        done.push_back(x);
    }
    out.members.assign(known.begin(), known.end());
    return out;
}

}  // namespace detail

/// One disjunct of the normal form: the intersection of the generator
/// preimages indexed by `pos` (and, in a Boolean family, the complements of
/// those indexed by `neg`).  An empty `pos` in a lattice family denotes the
/// whole carrier.
struct DnfTerm {
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
};

class GeneratedFamily {
public:
    GeneratedFamily(detail::Classes classes, Signature sig, ClosureKind kind,
                    std::vector<Duo> generators, std::vector<Mask> seed_masks,
                    detail::ClosureResult closure)
        : classes_(std::move(classes)),
          signature_(sig),
          kind_(kind),
          generators_(std::move(generators)),
          seed_masks_(std::move(seed_masks)),
          members_(std::move(closure.members)),
          derivations_(std::move(closure.derivations)) {}

    Signature signature() const { return signature_; }
    ClosureKind kind() const { return kind_; }
    unsigned index() const {
        return std::visit([](const auto& c) { return c.index(); }, classes_);
    }
    std::size_t size() const { return members_.size(); }
    const std::vector<Mask>& members() const { return members_; }
    const std::vector<Duo>& generators() const { return generators_; }
    const std::vector<Mask>& seed_masks() const { return seed_masks_; }

    unsigned class_of(const BigInt& x) const {
        return std::visit([&](const auto& c) { return c.class_of(x); }, classes_);
    }
    BigInt class_rep(unsigned c) const {
        return std::visit([&](const auto& cl) { return cl.rep(c); }, classes_);
    }

    bool member_contains(std::size_t i, const BigInt& x) const {
        return (members_.at(i) >> class_of(x)) & 1u;
    }

    std::optional<std::size_t> find_mask(Mask m) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), m);
        if (it == members_.end() || *it != m) return std::nullopt;
        return std::size_t(it - members_.begin());
    }

    const Derivation& derivation(std::size_t i) const { return derivations_.at(members_.at(i)); }

    /// Union-of-intersections witness over the generator preimages, built
    /// per contained class: a class c contributes the intersection of all
    /// generators whose preimage contains c (plus, for a Boolean family,
    /// the complements of the others), which is exactly the syntactic
    /// class/initial segment of its representative.  The expansion is
    /// verified to reproduce the member before returning.
    std::vector<DnfTerm> dnf(std::size_t i) const {
        Mask target = members_.at(i);
        Mask full = index() >= 64 ? ~Mask{0} : ((Mask{1} << index()) - 1);
        std::vector<DnfTerm> terms;
        Mask expansion = 0;
        for (unsigned c = 0; c < index(); ++c) {
            if (!((target >> c) & 1u)) continue;
            DnfTerm term;
            Mask inter = full;
            for (std::size_t s = 0; s < seed_masks_.size(); ++s) {
                if ((seed_masks_[s] >> c) & 1u) {
                    term.pos.push_back(s);
                    inter &= seed_masks_[s];
                } else if (kind_ == ClosureKind::boolean_algebra) {
                    term.neg.push_back(s);
                    inter &= full & ~seed_masks_[s];
                }
            }
            expansion |= inter;
            terms.push_back(std::move(term));
        }
        if (expansion != target)
            throw std::logic_error("GeneratedFamily::dnf: expansion does not reproduce member");
        return terms;
    }

    const detail::Classes& classes() const { return classes_; }

private:
    detail::Classes classes_;
    Signature signature_;
    ClosureKind kind_;
    std::vector<Duo> generators_;
    std::vector<Mask> seed_masks_;
    std::vector<Mask> members_;
    std::map<Mask, Derivation> derivations_;
};

/// Generates L_A(L) or B_A(L) for L over Z with signature (+) or (+,x).
/// Seeds are the preimages under the DUO quotient: translations by
/// 0..k-1, plus all affine maps x -> cx+t (c,t mod k) when x participates.
inline GeneratedFamily generate(const recsets::UPSetZ& base, Signature sig, ClosureKind kind,
                                unsigned max_index = 13) {
    if (sig == Signature::mul)
        throw std::domain_error("generate: signature (x) alone is not supported over Z");
    recsets::UPSetZ L = base.normalized();
    unsigned k = L.period();
    if (k > max_index) throw std::domain_error("generate: syntactic index exceeds bound");
    detail::ClassesZ classes{k};
    std::vector<Duo> gens;
    std::vector<Mask> seed_masks;
    auto add_seed = [&](const BigInt& scale, const BigInt& shift) {
        Mask m = 0;
        for (unsigned c = 0; c < k; ++c)
            if (L.member(scale * c + shift)) m |= Mask{1} << c;
        gens.push_back(Duo{scale, shift});
        seed_masks.push_back(m);
    };
    for (unsigned t = 0; t < k; ++t) add_seed(1, t);
    if (sig == Signature::add_mul)
        for (unsigned c = 0; c < k; ++c)
            for (unsigned t = 0; t < k; ++t) {
                if (c == 1) continue;  // translations already seeded
                add_seed(c, t);
            }
    auto closure = detail::close_masks(seed_masks, kind, k, std::size_t(1) << max_index);
    return GeneratedFamily(classes, sig, kind, std::move(gens), std::move(seed_masks),
                           std::move(closure));
}

/// Generates the family for L over (N,+); for a x-signature the base must
/// be finite and the finite-divisor route below applies.
inline GeneratedFamily generate(const recsets::UPSetN& base, Signature sig, ClosureKind kind,
                                unsigned max_index = 13);

/// Finite base set over (N\{0},x): classes are the equal-divisor-pattern
/// groups inside the divisor universe plus one sink class; seeds are the
/// exact divisions L/a for a = 1..max(L)+1.
inline GeneratedFamily generate_finite_mul(const std::vector<BigInt>& elems, ClosureKind kind,
                                           unsigned max_index = 13) {
    for (const BigInt& e : elems)
        if (e < 1) throw std::domain_error("generate_finite_mul: elements must be >= 1");
    std::set<BigInt> L(elems.begin(), elems.end());
    detail::ClassesMulFinite classes;
    if (!L.empty()) {
        std::set<BigInt> universe;
        for (const BigInt& e : L)
            for (BigInt d = 1; d * d <= e; ++d) {
                if (e % d != 0) continue;
                universe.insert(d);
                universe.insert(e / d);
            }
        classes.universe.assign(universe.begin(), universe.end());
        BigInt maxL = *L.rbegin();
        // divisor pattern of x: which homotheties send x into L
        std::map<std::vector<bool>, unsigned> patterns;
        classes.class_of_el.resize(classes.universe.size());
        for (std::size_t i = 0; i < classes.universe.size(); ++i) {
            std::vector<bool> pat;
            for (BigInt a = 1; a <= maxL; ++a) pat.push_back(L.contains(a * classes.universe[i]));
            auto [it, inserted] = patterns.emplace(std::move(pat), unsigned(patterns.size()));
            classes.class_of_el[i] = it->second;
        }
        classes.classes = unsigned(patterns.size()) + 1;
        classes.sink = classes.classes - 1;
    } else {
        classes.classes = 1;
        classes.sink = 0;
    }
    if (classes.classes > max_index)
        throw std::domain_error("generate_finite_mul: syntactic index exceeds bound");

    std::vector<Duo> gens;
    std::vector<Mask> seed_masks;
    BigInt maxL = L.empty() ? BigInt(0) : *L.rbegin();
    for (BigInt a = 1; a <= maxL + 1; ++a) {
        Mask m = 0;
        for (std::size_t i = 0; i < classes.universe.size(); ++i)
            if (L.contains(a * classes.universe[i])) m |= Mask{1} << classes.class_of_el[i];
        gens.push_back(Duo{a, 0});
        seed_masks.push_back(m);
    }
    auto closure = detail::close_masks(seed_masks, kind, classes.classes, std::size_t(1) << max_index);
    // lattice members are unions of quotient intersections, hence finite;
    // only Boolean complements can reach the (cofinite) sink class
    if (kind == ClosureKind::lattice)
        for (Mask m : closure.members)
            if ((m >> classes.sink) & 1u)
                throw std::logic_error("generate_finite_mul: a lattice member contains the sink class");
    return GeneratedFamily(std::move(classes), Signature::mul, kind, std::move(gens),
                           std::move(seed_masks), std::move(closure));
}

inline GeneratedFamily generate(const recsets::UPSetN& base, Signature sig, ClosureKind kind,
                                unsigned max_index) {
    recsets::UPSetN L = base.normalized();
    if (sig != Signature::add) {
        // x-signature families are generated on explicit finite sets
        bool finite = true;
        for (bool b : L.cycle_bits()) finite = finite && !b;
        if (!finite)
            throw std::domain_error(
                "generate: x-signature over N requires a finite base set");
        std::vector<BigInt> elems;
        for (unsigned i = 0; i < L.threshold(); ++i)
            if (L.head_bits()[i]) elems.push_back(i);
        if (sig == Signature::add_mul)
            throw std::domain_error("generate: signature (+,x) over N is not supported");
        return generate_finite_mul(elems, kind, max_index);
    }
    auto [a, k] = L.syntactic_index();
    unsigned index = a + k;
    if (index > max_index) throw std::domain_error("generate: syntactic index exceeds bound");
    detail::ClassesN classes{a, k};
    std::vector<Duo> gens;
    std::vector<Mask> seed_masks;
    for (unsigned t = 0; t < index; ++t) {
        Mask m = 0;
        for (unsigned c = 0; c < index; ++c)
            if (L.member(BigInt(c) + t)) m |= Mask{1} << c;
        gens.push_back(Duo{1, t});
        seed_masks.push_back(m);
    }
    auto closure = detail::close_masks(seed_masks, kind, index, std::size_t(1) << max_index);
    return GeneratedFamily(classes, sig, kind, std::move(gens), std::move(seed_masks),
                           std::move(closure));
}

/// Materializations of family members.
inline recsets::UPSetZ member_as_upset_z(const GeneratedFamily& fam, std::size_t i) {
    const auto* cz = std::get_if<detail::ClassesZ>(&fam.classes());
    if (!cz) throw std::domain_error("member_as_upset_z: family is not over Z");
    std::vector<bool> G(cz->k);
    for (unsigned c = 0; c < cz->k; ++c) G[c] = (fam.members()[i] >> c) & 1u;
    return recsets::UPSetZ(cz->k, std::move(G)).normalized();
}

inline recsets::UPSetN member_as_upset_n(const GeneratedFamily& fam, std::size_t i) {
    const auto* cn = std::get_if<detail::ClassesN>(&fam.classes());
    if (!cn) throw std::domain_error("member_as_upset_n: family is not over (N,+)");
    Mask m = fam.members()[i];
    std::vector<bool> F(cn->a), R(cn->k);
    for (unsigned c = 0; c < cn->a; ++c) F[c] = (m >> c) & 1u;
    for (unsigned j = 0; j < cn->k; ++j) R[j] = (m >> (cn->a + j)) & 1u;
    return recsets::UPSetN(cn->a, cn->k, std::move(F), std::move(R)).normalized();
}

inline std::vector<BigInt> member_as_finite_set(const GeneratedFamily& fam, std::size_t i) {
    const auto* cm = std::get_if<detail::ClassesMulFinite>(&fam.classes());
    if (!cm) throw std::domain_error("member_as_finite_set: family is not over (N\\{0},x)");
    if ((fam.members()[i] >> cm->sink) & 1u)
        throw std::domain_error("member_as_finite_set: member is cofinite (contains the sink class)");
    std::vector<BigInt> out;
    for (std::size_t e = 0; e < cm->universe.size(); ++e)
        if ((fam.members()[i] >> cm->class_of_el[e]) & 1u) out.push_back(cm->universe[e]);
    return out;
}

struct MemberQuery {
    bool found = false;
    std::size_t index = 0;
    std::vector<DnfTerm> witness;
};

namespace detail {
template <typename MemberFn>
MemberQuery member_query(const GeneratedFamily& fam, MemberFn&& contains, auto&& same_set) {
    // class mask sampled at representatives; if the candidate is not
    // saturated the materialized mask will not reproduce it
    Mask m = 0;
    for (unsigned c = 0; c < fam.index(); ++c)
        if (contains(fam.class_rep(c))) m |= Mask{1} << c;
    if (!same_set(m)) return {};
    auto idx = fam.find_mask(m);
    if (!idx) return {};
    return {true, *idx, fam.dnf(*idx)};
}
}  // namespace detail

/// Membership of X in the family, with the stored union-of-intersections
/// witness on success.  X must be saturated by the syntactic congruence of
/// the base set and equal to some member.
inline MemberQuery member_of(const GeneratedFamily& fam, const recsets::UPSetZ& X) {
    return detail::member_query(
        fam, [&](const BigInt& r) { return X.member(r); },
        [&](Mask m) {
            const auto* cz = std::get_if<detail::ClassesZ>(&fam.classes());
            if (!cz) return false;
            std::vector<bool> G(cz->k);
            for (unsigned c = 0; c < cz->k; ++c) G[c] = (m >> c) & 1u;
            return set_equal(recsets::UPSetZ(cz->k, std::move(G)), X);
        });
}

inline MemberQuery member_of(const GeneratedFamily& fam, const recsets::UPSetN& X) {
    return detail::member_query(
        fam, [&](const BigInt& r) { return X.member(r); },
        [&](Mask m) {
            const auto* cn = std::get_if<detail::ClassesN>(&fam.classes());
            if (!cn) return false;
            std::vector<bool> F(cn->a), R(cn->k);
            for (unsigned c = 0; c < cn->a; ++c) F[c] = (m >> c) & 1u;
            for (unsigned j = 0; j < cn->k; ++j) R[j] = (m >> (cn->a + j)) & 1u;
            return set_equal(recsets::UPSetN(cn->a, cn->k, std::move(F), std::move(R)), X);
        });
}

inline MemberQuery member_of(const GeneratedFamily& fam, const std::vector<BigInt>& X) {
    std::set<BigInt> xs(X.begin(), X.end());
    return detail::member_query(
        fam, [&](const BigInt& r) { return xs.contains(r); },
        [&](Mask m) {
            const auto* cm = std::get_if<detail::ClassesMulFinite>(&fam.classes());
            if (!cm) return false;
            if ((m >> cm->sink) & 1u) return false;
            std::set<BigInt> mat;
            for (std::size_t e = 0; e < cm->universe.size(); ++e)
                if ((m >> cm->class_of_el[e]) & 1u) mat.insert(cm->universe[e]);
            return mat == xs;
        });
}

struct FinvReport {
    /// Window the verdict needs to separate family members (computed
    /// precondition, always reported).
    BigInt required_lo, required_hi;
    bool matched = false;
    std::size_t member = 0;           // matching member when matched
    std::vector<BigInt> witness;      // on refutation: an unsaturated pair or stray point
    std::string detail;
};

/// Computes the sampled preimage {x in window : f(x) in base} and searches
/// the family for a member agreeing with it on the window.  Requires the
/// window to cover one representative of every syntactic class (reported
/// and enforced); with that precondition at most one member can agree.
template <typename BaseMember>
    requires std::invocable<BaseMember&, const BigInt&>
FinvReport check_finv_in(const GeneratedFamily& fam, const natint::FnTable& f,
                         BaseMember&& base_member) {
    FinvReport rep;
    // required window per carrier kind
    if (const auto* cn = std::get_if<detail::ClassesN>(&fam.classes())) {
        rep.required_lo = 0;
        rep.required_hi = cn->index() == 0 ? 0 : cn->index() - 1;
    } else if (const auto* cz = std::get_if<detail::ClassesZ>(&fam.classes())) {
        if (f.hi - f.lo + 1 < cz->k)
            throw std::domain_error("check_finv_in: window shorter than the period " +
                                    std::to_string(cz->k));
        rep.required_lo = f.lo;
        rep.required_hi = f.lo + cz->k - 1;
    } else if (const auto* cm = std::get_if<detail::ClassesMulFinite>(&fam.classes())) {
        rep.required_lo = 1;
        rep.required_hi = cm->universe.empty() ? 1 : cm->universe.back();
    } else {
        const auto& cp = std::get<detail::ClassesZp>(fam.classes());
        if (f.hi - f.lo + 1 < cp.pn)
            throw std::domain_error("check_finv_in: window shorter than the modulus " +
                                    std::to_string(cp.pn));
        rep.required_lo = f.lo;
        rep.required_hi = f.lo + cp.pn - 1;
    }
    if (f.lo > rep.required_lo || f.hi < rep.required_hi)
        throw std::domain_error("check_finv_in: window [" + f.lo.str() + "," + f.hi.str() +
                                "] cannot separate members; need [" + rep.required_lo.str() +
                                "," + rep.required_hi.str() + "]");

    // membership of the sampled preimage must be constant on classes
    std::vector<int> verdict_per_class(fam.index(), -1);  // -1 unseen, else 0/1
    std::vector<BigInt> first_seen(fam.index());
    for (BigInt x = f.lo; x <= f.hi; ++x) {
        unsigned c = fam.class_of(x);
        bool in_pre = base_member(f(x));
        if (verdict_per_class[c] < 0) {
            verdict_per_class[c] = in_pre ? 1 : 0;
            first_seen[c] = x;
        } else if ((verdict_per_class[c] == 1) != in_pre) {
            rep.witness = {first_seen[c], x};
            rep.detail = "sampled preimage not saturated by the syntactic congruence";
            return rep;
        }
    }
    Mask m = 0;
    for (unsigned c = 0; c < fam.index(); ++c)
        if (verdict_per_class[c] == 1) m |= Mask{1} << c;
    auto idx = fam.find_mask(m);
    if (!idx) {
        rep.detail = "saturated preimage is not a family member";
        return rep;
    }
    rep.matched = true;
    rep.member = *idx;
    return rep;
}

inline FinvReport check_finv_in(const GeneratedFamily& fam, const natint::FnTable& f,
                                const recsets::UPSetZ& base) {
    return check_finv_in(fam, f, [&](const BigInt& v) { return base.member(v); });
}
inline FinvReport check_finv_in(const GeneratedFamily& fam, const natint::FnTable& f,
                                const recsets::UPSetN& base) {
    return check_finv_in(fam, f, [&](const BigInt& v) { return v >= 0 && base.member(v); });
}

struct CounterexampleReport {
    bool refuted = false;
    BigInt witness;      // preimage point below the minimum of every translate
    BigInt translate_bound;
    std::string detail;
    bool control_recognizable_matched = false;
    bool control_identity_matched = false;
};

/// The regular-but-not-recognizable counterexample: L = 6+10N viewed inside
/// Z with f(x) = x^2.  f is congruence preserving, yet f^-1(L) contains
/// unboundedly many negatives while every translate L-t (|t| <= T) is
/// bounded below by 6-T, hence so is any finite union of finite
/// intersections of translates.  A sampled preimage point below that bound
/// refutes membership relative to the declared translate window.  Controls:
/// the recognizable replacement 6+10Z is matched, and the identity function
/// is matched trivially.
inline CounterexampleReport regular_counterexample_check(unsigned window = 200) {
    CounterexampleReport rep;
    rep.translate_bound = window;
    recsets::RegSetZ L(recsets::UPSetN::progression(6, 10), recsets::UPSetN::empty());
    const BigInt min_translate = BigInt(6) - BigInt(window);
    for (BigInt x = -BigInt(window); x <= BigInt(window); ++x) {
        if (L.member(x * x) && x < min_translate) {
            rep.refuted = true;
            rep.witness = x;
            rep.detail = "f^-1(L) contains " + x.str() + " < " + min_translate.str() +
                         ", the minimum of every translate L-t with |t| <= " +
                         std::to_string(window);
            break;
        }
    }

    // control 1: the recognizable 6+10Z is matched
    recsets::UPSetZ Lz = recsets::UPSetZ::progression(6, 10);
    auto fam = generate(Lz, Signature::add, ClosureKind::lattice);
    auto sq = natint::FnTable::tabulate(natint::Domain::Z, -BigInt(window), BigInt(window),
                                        [](const BigInt& x) { return x * x; });
    rep.control_recognizable_matched = check_finv_in(fam, sq, Lz).matched;

    // control 2: the identity matches the regular L trivially, its preimage
    // being the generator translate L-0
    recsets::RegSetZ t0(L.positive_part().translate_preimage(0), L.negative_part());
    bool identity_ok = true;
    for (BigInt x = -BigInt(window); x <= BigInt(window) && identity_ok; ++x)
        identity_ok = L.member(x) == t0.member(x);
    rep.control_identity_matched = identity_ok;
    return rep;
}

/// DOT rendering of the Hasse diagram of the family under inclusion.
inline std::string to_dot(const GeneratedFamily& fam, std::size_t max_members = 4096) {
    if (fam.size() > max_members)
        throw std::domain_error("to_dot: family too large for a Hasse diagram");
    const auto& ms = fam.members();
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < ms.size(); ++i)
        out << "  m" << i << " [label=\"" << std::popcount(ms[i]) << " classes\"];\n";
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j) {
            if (i == j || (ms[i] & ~ms[j])) continue;  // need ms[i] subset of ms[j]
            bool cover = true;
            for (std::size_t k = 0; k < ms.size() && cover; ++k) {
                if (k == i || k == j) continue;
                if (!(ms[i] & ~ms[k]) && !(ms[k] & ~ms[j])) cover = false;
            }
            if (cover) out << "  m" << i << " -> m" << j << ";\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace conglat::latgen
