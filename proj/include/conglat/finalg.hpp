#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

/**
 * Generic finite-algebra engine: operation tables, freezing, derived unary
 * operations (DUOs), congruence and stable-preorder enumeration, syntactic
 * congruence/preorder of a subset, quotients, preservation tests and the
 * union-of-intersections preimage decompositions.
 *
 * Carriers are {0,...,n-1} with n <= 64 so that subsets fit in a word.
 */
namespace conglat::finalg {

using Element = unsigned;
using UnaryTable = std::vector<Element>;
using Subset = std::uint64_t;

inline bool subset_contains(Subset s, Element x) { return (s >> x) & 1u; }
inline Subset full_subset(unsigned n) { return n >= 64 ? ~Subset{0} : ((Subset{1} << n) - 1); }

struct Operation {
    unsigned arity;
    std::vector<Element> table;  // row-major, size n^arity
};

class FiniteAlgebra {
public:
    FiniteAlgebra(unsigned n, std::vector<Operation> ops) : n_(n), ops_(std::move(ops)) {
        if (n == 0 || n > 64) throw std::domain_error("FiniteAlgebra: carrier size must be in 1..64");
        for (const auto& op : ops_) {
            std::size_t expect = 1;
            for (unsigned i = 0; i < op.arity; ++i) expect *= n;
            if (op.table.size() != expect)
                throw std::domain_error("FiniteAlgebra: operation table has wrong size");
            for (Element e : op.table)
                if (e >= n) throw std::domain_error("FiniteAlgebra: table entry out of carrier");
        }
    }

    unsigned size() const { return n_; }
    const std::vector<Operation>& ops() const { return ops_; }

    Element apply(unsigned op_index, std::span<const Element> args) const {
        const Operation& op = ops_.at(op_index);
        if (args.size() != op.arity) throw std::domain_error("apply: arity mismatch");
        std::size_t idx = 0;
        for (Element a : args) {
            if (a >= n_) throw std::domain_error("apply: argument out of carrier");
            idx = idx * n_ + a;
        }
        return op.table[idx];
    }

    /// Convenience constructors for the standard worked structures.
    static FiniteAlgebra cyclic_add(unsigned n) {
        Operation add{2, {}};
        add.table.resize(std::size_t(n) * n);
        for (unsigned x = 0; x < n; ++x)
            for (unsigned y = 0; y < n; ++y) add.table[std::size_t(x) * n + y] = (x + y) % n;
        return FiniteAlgebra(n, {add});
    }
    static FiniteAlgebra cyclic_mul(unsigned n) {
        Operation mul{2, {}};
        mul.table.resize(std::size_t(n) * n);
        for (unsigned x = 0; x < n; ++x)
            for (unsigned y = 0; y < n; ++y) mul.table[std::size_t(x) * n + y] = (x * y) % n;
        return FiniteAlgebra(n, {mul});
    }

private:
    unsigned n_;
    std::vector<Operation> ops_;
};

/// A partition of {0..n-1} in canonical form: classes are numbered by first
/// occurrence, so equal partitions have equal class vectors.
class Partition {
public:
    explicit Partition(std::vector<unsigned> cls) : cls_(std::move(cls)) { canonicalize(); }

    static Partition equality(unsigned n) {
        std::vector<unsigned> c(n);
        for (unsigned i = 0; i < n; ++i) c[i] = i;
        return Partition(std::move(c));
    }
    static Partition single_class(unsigned n) { return Partition(std::vector<unsigned>(n, 0)); }

    unsigned size() const { return unsigned(cls_.size()); }
    unsigned num_classes() const { return classes_; }
    unsigned cls(Element x) const { return cls_.at(x); }
    bool same(Element x, Element y) const { return cls_.at(x) == cls_.at(y); }
    const std::vector<unsigned>& class_vector() const { return cls_; }

    /// True iff every class of *this is contained in a class of other.
    bool refines(const Partition& other) const {
        std::vector<int> img(classes_, -1);
        for (unsigned i = 0; i < cls_.size(); ++i) {
            int& m = img[cls_[i]];
            if (m < 0) m = int(other.cls_[i]);
            else if (unsigned(m) != other.cls_[i]) return false;
        }
        return true;
    }

    /// Finest common coarsening (join in the partition lattice).
    Partition join(const Partition& other) const {
        unsigned n = size();
        std::vector<unsigned> parent(n);
        for (unsigned i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](unsigned x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](unsigned a, unsigned b) { parent[find(a)] = find(b); };
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (same(i, j) || other.same(i, j)) unite(i, j);
        std::vector<unsigned> c(n);
        for (unsigned i = 0; i < n; ++i) c[i] = find(i);
        return Partition(std::move(c));
    }

    /// True iff L is a union of classes.
    bool saturates(Subset L, unsigned n) const {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (same(i, j) && subset_contains(L, i) != subset_contains(L, j)) return false;
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.cls_ <=> b.cls_; }

private:
    void canonicalize() {
        std::vector<int> remap;
        unsigned next = 0;
        std::map<unsigned, unsigned> seen;
        for (unsigned& c : cls_) {
            auto [it, inserted] = seen.emplace(c, next);
            if (inserted) ++next;
            c = it->second;
        }
        classes_ = next;
    }

    std::vector<unsigned> cls_;
    unsigned classes_ = 0;
};

/// Binary relation on {0..n-1} stored as one row bitmask per element.
class BinRel {
public:
    explicit BinRel(unsigned n) : n_(n), rows_(n, 0) {}
    BinRel(unsigned n, std::vector<Subset> rows) : n_(n), rows_(std::move(rows)) {}

    static BinRel equality(unsigned n) {
        BinRel r(n);
        for (unsigned i = 0; i < n; ++i) r.set(i, i);
        return r;
    }
    static BinRel full(unsigned n) {
        BinRel r(n);
        for (unsigned i = 0; i < n; ++i) r.rows_[i] = full_subset(n);
        return r;
    }
    static BinRel from_partition(const Partition& p) {
        BinRel r(p.size());
        for (unsigned i = 0; i < p.size(); ++i)
            for (unsigned j = 0; j < p.size(); ++j)
                if (p.same(i, j)) r.set(i, j);
        return r;
    }

    unsigned size() const { return n_; }
    bool get(Element x, Element y) const { return (rows_[x] >> y) & 1u; }
    void set(Element x, Element y) { rows_[x] |= Subset{1} << y; }
    Subset row(Element x) const { return rows_[x]; }

    bool reflexive() const {
        for (unsigned i = 0; i < n_; ++i)
            if (!get(i, i)) return false;
        return true;
    }
    bool transitive() const {
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j)
                if (get(i, j) && (rows_[j] & ~rows_[i])) return false;
        return true;
    }
    bool symmetric() const {
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j)
                if (get(i, j) != get(j, i)) return false;
        return true;
    }
    bool antisymmetric() const {
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j)
                if (i != j && get(i, j) && get(j, i)) return false;
        return true;
    }

    /// The associated equivalence of a preorder (x ~ y iff x<=y and y<=x).
    Partition symmetrization() const {
        std::vector<unsigned> cls(n_);
        for (unsigned i = 0; i < n_; ++i) {
            cls[i] = i;
            for (unsigned j = 0; j < i; ++j)
                if (get(i, j) && get(j, i)) { cls[i] = cls[j]; break; }
        }
        return Partition(std::move(cls));
    }

    friend bool operator==(const BinRel&, const BinRel&) = default;
    friend auto operator<=>(const BinRel& a, const BinRel& b) { return a.rows_ <=> b.rows_; }

private:
    unsigned n_;
    std::vector<Subset> rows_;
};

/// The unary table x -> op(c_1,...,x,...,c_m) with argument position `pos`
/// kept free and the others frozen to `frozen`.
inline UnaryTable freeze(const FiniteAlgebra& A, unsigned op_index, unsigned pos,
                         std::span<const Element> frozen) {
    const Operation& op = A.ops().at(op_index);
    if (op.arity == 0) throw std::domain_error("freeze: nullary operation has no argument");
    if (pos >= op.arity || frozen.size() + 1 != op.arity)
        throw std::domain_error("freeze: position/frozen-arguments mismatch");
    UnaryTable t(A.size());
    std::vector<Element> args(op.arity);
    for (Element x = 0; x < A.size(); ++x) {
        unsigned fi = 0;
        for (unsigned i = 0; i < op.arity; ++i) args[i] = (i == pos) ? x : frozen[fi++];
        t[x] = A.apply(op_index, args);
    }
    return t;
}

/// All frozen unary tables of all operations, deduplicated and sorted.
/// Compatibility with these tables is equivalent to stability for reflexive
/// transitive relations, which is how every stability check below runs.
inline std::vector<UnaryTable> frozen_unaries(const FiniteAlgebra& A) {
    std::set<UnaryTable> out;
    for (unsigned oi = 0; oi < A.ops().size(); ++oi) {
        const Operation& op = A.ops()[oi];
        if (op.arity == 0) continue;
        unsigned m = op.arity - 1;
        std::vector<Element> frozen(m, 0);
        while (true) {
            for (unsigned pos = 0; pos < op.arity; ++pos) out.insert(freeze(A, oi, pos, frozen));
            // odometer over the frozen arguments
            unsigned i = 0;
            for (; i < m; ++i) {
                if (++frozen[i] < A.size()) break;
                frozen[i] = 0;
            }
            if (i == m) break;
            if (m == 0) break;
        }
        if (m == 0) out.insert(freeze(A, oi, 0, {}));
    }
    return {out.begin(), out.end()};
}

/// DUO(A): the least set of unary functions containing the identity and all
/// frozen operations, closed under composition.
inline std::vector<UnaryTable> duo_closure(const FiniteAlgebra& A) {
    unsigned n = A.size();
    UnaryTable id(n);
    for (unsigned i = 0; i < n; ++i) id[i] = i;
    std::set<UnaryTable> closed;
    closed.insert(id);
    for (auto& t : frozen_unaries(A)) closed.insert(t);
    std::vector<UnaryTable> work(closed.begin(), closed.end());
    auto generators = frozen_unaries(A);
    while (!work.empty()) {
        UnaryTable f = std::move(work.back());
        work.pop_back();
        for (const auto& g : generators) {
            UnaryTable fg(n), gf(n);
            for (unsigned x = 0; x < n; ++x) {
                fg[x] = f[g[x]];
                gf[x] = g[f[x]];
            }
            if (closed.insert(fg).second) work.push_back(fg);
            if (closed.insert(gf).second) work.push_back(gf);
        }
    }
    return {closed.begin(), closed.end()};
}

/// gen(a) = {gamma(a) | gamma in DUO(A)}, sorted.
inline std::vector<Element> gen_set(const FiniteAlgebra& A, Element a) {
    std::set<Element> orbit;
    for (const auto& g : duo_closure(A)) orbit.insert(g[a]);
    return {orbit.begin(), orbit.end()};
}

inline bool is_stable(const FiniteAlgebra& A, const BinRel& r) {
    for (const auto& u : frozen_unaries(A))
        for (unsigned i = 0; i < A.size(); ++i)
            for (unsigned j = 0; j < A.size(); ++j)
                if (r.get(i, j) && !r.get(u[i], u[j])) return false;
    return true;
}

inline bool is_congruence(const FiniteAlgebra& A, const Partition& p) {
    if (p.size() != A.size()) throw std::domain_error("is_congruence: size mismatch");
    for (const auto& u : frozen_unaries(A))
        for (unsigned i = 0; i < A.size(); ++i)
            for (unsigned j = i + 1; j < A.size(); ++j)
                if (p.same(i, j) && !p.same(u[i], u[j])) return false;
    return true;
}

inline bool is_stable_preorder(const FiniteAlgebra& A, const BinRel& r) {
    return r.reflexive() && r.transitive() && is_stable(A, r);
}

/// Least congruence relating x and y: union-find closure under all frozen
/// unary images, following the proof that generates it.
inline Partition principal_congruence(const FiniteAlgebra& A, Element x, Element y) {
    unsigned n = A.size();
    std::vector<unsigned> parent(n);
    for (unsigned i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](unsigned a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](unsigned a, unsigned b) {
        a = find(a); b = find(b);
        if (a != b) { parent[a] = b; return true; }
        return false;
    };
    auto unaries = frozen_unaries(A);
    unite(x, y);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& u : unaries)
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i + 1; j < n; ++j)
                    if (find(i) == find(j) && unite(u[i], u[j])) changed = true;
    }
    std::vector<unsigned> cls(n);
    for (unsigned i = 0; i < n; ++i) cls[i] = find(i);
    return Partition(std::move(cls));
}

/// All congruences, computed as the join closure of the principal
/// congruences plus equality.  Returned in lexicographic class-vector order.
inline std::vector<Partition> all_congruences(const FiniteAlgebra& A) {
    unsigned n = A.size();
    std::set<Partition> out;
    out.insert(Partition::equality(n));
    std::vector<Partition> work;
    for (unsigned x = 0; x < n; ++x)
        for (unsigned y = x + 1; y < n; ++y) {
            Partition p = principal_congruence(A, x, y);
            if (out.insert(p).second) work.push_back(p);
        }
    while (!work.empty()) {
        Partition p = std::move(work.back());
        work.pop_back();
        std::vector<Partition> snapshot(out.begin(), out.end());
        for (const auto& q : snapshot) {
            Partition j = p.join(q);
            if (out.insert(j).second) work.push_back(j);
        }
    }
    return {out.begin(), out.end()};
}

/// Brute-force enumeration of all stable preorders.  Exponential in n^2, so
/// a hard carrier bound applies (default 5).
inline std::vector<BinRel> all_stable_preorders(const FiniteAlgebra& A, unsigned bound = 5) {
    unsigned n = A.size();
    if (n > bound)
        throw std::domain_error("all_stable_preorders: carrier size " + std::to_string(n) +
                                " exceeds bound " + std::to_string(bound));
    auto unaries = frozen_unaries(A);
    unsigned off = n * (n - 1);
    std::vector<std::pair<unsigned, unsigned>> offdiag;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (i != j) offdiag.emplace_back(i, j);
    std::vector<BinRel> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << off); ++mask) {
        BinRel r = BinRel::equality(n);
        for (unsigned b = 0; b < off; ++b)
            if ((mask >> b) & 1u) r.set(offdiag[b].first, offdiag[b].second);
        if (!r.transitive()) continue;
        bool stable = true;
        for (const auto& u : unaries) {
            for (unsigned i = 0; i < n && stable; ++i)
                for (unsigned j = 0; j < n; ++j)
                    if (r.get(i, j) && !r.get(u[i], u[j])) { stable = false; break; }
            if (!stable) break;
        }
        if (stable) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Syntactic preorder of L: x <= y iff every DUO mapping y into L also maps
/// x into L.
inline BinRel syntactic_preorder(const FiniteAlgebra& A, Subset L) {
    unsigned n = A.size();
    auto duos = duo_closure(A);
    // hit signature: which DUOs send the element into L
    std::vector<std::vector<bool>> hits(n, std::vector<bool>(duos.size()));
    for (unsigned x = 0; x < n; ++x)
        for (std::size_t g = 0; g < duos.size(); ++g) hits[x][g] = subset_contains(L, duos[g][x]);
    BinRel r(n);
    for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y) {
            bool le = true;
            for (std::size_t g = 0; g < duos.size(); ++g)
                if (hits[y][g] && !hits[x][g]) { le = false; break; }
            if (le) r.set(x, y);
        }
    return r;
}

/// Syntactic congruence of L, the symmetrization of the syntactic preorder.
inline Partition syntactic_congruence(const FiniteAlgebra& A, Subset L) {
    return syntactic_preorder(A, L).symmetrization();
}

inline bool preserves(const FiniteAlgebra&, const UnaryTable& f, const Partition& p) {
    for (unsigned i = 0; i < p.size(); ++i)
        for (unsigned j = i + 1; j < p.size(); ++j)
            if (p.same(i, j) && !p.same(f[i], f[j])) return false;
    return true;
}

inline bool preserves(const FiniteAlgebra&, const UnaryTable& f, const BinRel& r) {
    for (unsigned i = 0; i < r.size(); ++i)
        for (unsigned j = 0; j < r.size(); ++j)
            if (r.get(i, j) && !r.get(f[i], f[j])) return false;
    return true;
}

inline bool preserves_all_congruences(const FiniteAlgebra& A, const UnaryTable& f) {
    for (const auto& c : all_congruences(A))
        if (!preserves(A, f, c)) return false;
    return true;
}

inline bool preserves_all_stable_preorders(const FiniteAlgebra& A, const UnaryTable& f,
                                           unsigned bound = 5) {
    for (const auto& r : all_stable_preorders(A, bound))
        if (!preserves(A, f, r)) return false;
    return true;
}

/// Quotient algebra A/p for a congruence p.  Class numbering follows the
/// canonical partition numbering.
inline FiniteAlgebra quotient(const FiniteAlgebra& A, const Partition& p) {
    if (!is_congruence(A, p)) throw std::domain_error("quotient: partition is not a congruence");
    unsigned m = p.num_classes();
    std::vector<Element> rep(m, 0);
    for (unsigned x = A.size(); x-- > 0;) rep[p.cls(x)] = x;
    std::vector<Operation> ops;
    for (unsigned oi = 0; oi < A.ops().size(); ++oi) {
        const Operation& op = A.ops()[oi];
        Operation q{op.arity, {}};
        std::size_t total = 1;
        for (unsigned i = 0; i < op.arity; ++i) total *= m;
        q.table.resize(total);
        std::vector<Element> args(op.arity);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            for (unsigned i = op.arity; i-- > 0;) {
                args[i] = rep[rest % m];
                rest /= m;
            }
            q.table[idx] = p.cls(A.apply(oi, args));
        }
        ops.push_back(std::move(q));
    }
    return FiniteAlgebra(m, std::move(ops));
}

struct IllDefined {
    Element x, y;  // congruent pair whose images fall in distinct classes
};

/// The induced function f_phi on A/p, or the witness pair making it
/// ill-defined.  When defined, the commuting square phi . f = f_phi . phi is
/// verified before returning.
inline std::variant<UnaryTable, IllDefined> induced_function(const FiniteAlgebra& A,
                                                             const UnaryTable& f,
                                                             const Partition& p) {
    if (!is_congruence(A, p)) throw std::domain_error("induced_function: not a congruence");
    for (unsigned i = 0; i < A.size(); ++i)
        for (unsigned j = i + 1; j < A.size(); ++j)
            if (p.same(i, j) && !p.same(f[i], f[j])) return IllDefined{i, j};
    UnaryTable t(p.num_classes());
    std::vector<bool> done(p.num_classes(), false);
    for (unsigned x = 0; x < A.size(); ++x) {
        unsigned c = p.cls(x);
        if (!done[c]) { t[c] = p.cls(f[x]); done[c] = true; }
        if (t[p.cls(x)] != p.cls(f[x]))
            throw std::logic_error("induced_function: commuting square violated");
    }
    return t;
}

/// Right-hand side of the lattice decomposition
///   f^-1(L) = U_{a in f^-1(L)}  ( intersection of gamma^-1(L) over
///             all gamma in DUO(A) with gamma(a) in L ),
/// evaluated literally over the DUO closure.  An empty intersection is the
/// whole carrier.
inline Subset decompose_preimage_lattice(const FiniteAlgebra& A, const UnaryTable& f, Subset L) {
    unsigned n = A.size();
    auto duos = duo_closure(A);
    Subset result = 0;
    for (Element a = 0; a < n; ++a) {
        if (!subset_contains(L, f[a])) continue;
        Subset inter = full_subset(n);
        for (const auto& g : duos) {
            if (!subset_contains(L, g[a])) continue;
            Subset gi = 0;
            for (Element c = 0; c < n; ++c)
                if (subset_contains(L, g[c])) gi |= Subset{1} << c;
            inter &= gi;
        }
        result |= inter;
    }
    return result;
}

/// Boolean variant: each intersection takes gamma^-1(L) when gamma(a) is in
/// L and its complement otherwise, so the inner set is the syntactic class
/// of a.
inline Subset decompose_preimage_boolean(const FiniteAlgebra& A, const UnaryTable& f, Subset L) {
    unsigned n = A.size();
    auto duos = duo_closure(A);
    Subset result = 0;
    for (Element a = 0; a < n; ++a) {
        if (!subset_contains(L, f[a])) continue;
        Subset inter = full_subset(n);
        for (const auto& g : duos) {
            Subset gi = 0;
            for (Element c = 0; c < n; ++c)
                if (subset_contains(L, g[c])) gi |= Subset{1} << c;
            inter &= subset_contains(L, g[a]) ? gi : (full_subset(n) & ~gi);
        }
        result |= inter;
    }
    return result;
}

inline Subset preimage(const UnaryTable& f, Subset L) {
    Subset out = 0;
    for (Element x = 0; x < f.size(); ++x)
        if (subset_contains(L, f[x])) out |= Subset{1} << x;
    return out;
}

namespace detail {
inline std::vector<Subset> close_family(std::set<Subset> family, bool with_complement, unsigned n) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Subset> snap(family.begin(), family.end());
        for (std::size_t i = 0; i < snap.size(); ++i) {
            if (with_complement && family.insert(full_subset(n) & ~snap[i]).second) changed = true;
            for (std::size_t j = i + 1; j < snap.size(); ++j) {
                if (family.insert(snap[i] & snap[j]).second) changed = true;
                if (family.insert(snap[i] | snap[j]).second) changed = true;
            }
        }
    }
    return {family.begin(), family.end()};
}
}  // namespace detail

/// L_A(L): closure of the DUO preimages of L under union and intersection.
inline std::vector<Subset> lattice_closure(const FiniteAlgebra& A, Subset L) {
    std::set<Subset> seeds;
    for (const auto& g : duo_closure(A)) seeds.insert(preimage(g, L));
    return detail::close_family(std::move(seeds), false, A.size());
}

/// B_A(L): closure of the DUO preimages of L under union, intersection and
/// complement.
inline std::vector<Subset> boolean_closure(const FiniteAlgebra& A, Subset L) {
    std::set<Subset> seeds;
    for (const auto& g : duo_closure(A)) seeds.insert(preimage(g, L));
    return detail::close_family(std::move(seeds), true, A.size());
}

struct GroupStructure {
    Element unit;
    UnaryTable inverse;
};
struct NotAssociative {
    Element x, y, z;
};
struct NotCancellable {
    Element x, y, z;  // op(x,z) == op(y,z) or op(z,x) == op(z,y) with x != y
    bool left;        // true when the witness is z*x == z*y
};

/// Checks the designated binary operation for associativity and two-sided
/// cancellability; a finite cancellable semigroup is a group, so on success
/// the unit and inverse table are exhibited.
inline std::variant<GroupStructure, NotCancellable, NotAssociative> cancellative_to_group(
    const FiniteAlgebra& A, unsigned op_index = 0) {
    const Operation& op = A.ops().at(op_index);
    if (op.arity != 2) throw std::domain_error("cancellative_to_group: operation must be binary");
    unsigned n = A.size();
    auto at = [&](Element x, Element y) { return op.table[std::size_t(x) * n + y]; };
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                if (at(at(x, y), z) != at(x, at(y, z))) return NotAssociative{x, y, z};
    for (Element z = 0; z < n; ++z)
        for (Element x = 0; x < n; ++x)
            for (Element y = x + 1; y < n; ++y) {
                if (at(z, x) == at(z, y)) return NotCancellable{x, y, z, true};
                if (at(x, z) == at(y, z)) return NotCancellable{x, y, z, false};
            }
    // Cancellable finite semigroup: locate the unit and the inverses.
    for (Element e = 0; e < n; ++e) {
        bool unit = true;
        for (Element a = 0; a < n && unit; ++a) unit = at(e, a) == a && at(a, e) == a;
        if (!unit) continue;
        UnaryTable inv(n);
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                if (at(a, b) == e && at(b, a) == e) { inv[a] = b; break; }
        return GroupStructure{e, inv};
    }
    throw std::logic_error("cancellative_to_group: cancellable semigroup without unit");
}

/// Verifies that the designated operation is a group operation; throws with
/// a witness otherwise.
inline GroupStructure verify_group_op(const FiniteAlgebra& A, unsigned op_index = 0) {
    auto res = cancellative_to_group(A, op_index);
    if (auto* g = std::get_if<GroupStructure>(&res)) return *g;
    std::ostringstream msg;
    if (auto* na = std::get_if<NotAssociative>(&res))
        msg << "not associative at (" << na->x << "," << na->y << "," << na->z << ")";
    else {
        auto& nc = std::get<NotCancellable>(res);
        msg << "not cancellable: witness (" << nc.x << "," << nc.y << "," << nc.z << ")";
    }
    throw std::domain_error("verify_group_op: " + msg.str());
}

/// Stable orders (antisymmetric stable preorders) of an algebra whose
/// designated operation is verified to be a group operation.  Expected to be
/// the singleton {equality}.
inline std::vector<BinRel> stable_orders_of_group(const FiniteAlgebra& A, unsigned op_index = 0,
                                                  unsigned bound = 5) {
    verify_group_op(A, op_index);
    std::vector<BinRel> out;
    for (const auto& r : all_stable_preorders(A, bound))
        if (r.antisymmetric()) out.push_back(r);
    return out;
}

}  // namespace conglat::finalg
