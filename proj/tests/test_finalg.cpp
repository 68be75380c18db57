#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "conglat/finalg.hpp"

namespace fa = conglat::finalg;
using fa::FiniteAlgebra;
using fa::Operation;
using fa::Partition;
using fa::Subset;

namespace {

// Oracle: all congruences by filtering every partition of {0..n-1} with the
// defining compatibility condition checked on the full n-ary tables.
void enumerate_partitions(unsigned n, std::vector<Partition>& out) {
    std::vector<unsigned> cls(n, 0);
    // restricted growth strings
    auto rec = [&](auto&& self, unsigned i, unsigned maxc) -> void {
        if (i == n) {
            out.emplace_back(cls);
            return;
        }
        for (unsigned c = 0; c <= maxc + 1 && c < n; ++c) {
            cls[i] = c;
            self(self, i + 1, std::max(maxc, c));
        }
    };
    if (n == 0) return;
    cls[0] = 0;
    rec(rec, 1, 0);
}

bool compatible_with_all_ops(const FiniteAlgebra& A, const Partition& p) {
    unsigned n = A.size();
    for (unsigned oi = 0; oi < A.ops().size(); ++oi) {
        const auto& op = A.ops()[oi];
        if (op.arity == 0) continue;
        std::size_t total = 1;
        for (unsigned i = 0; i < op.arity; ++i) total *= n;
        std::vector<fa::Element> xs(op.arity), ys(op.arity);
        // all pairs of related argument tuples
        for (std::size_t ix = 0; ix < total; ++ix)
            for (std::size_t iy = 0; iy < total; ++iy) {
                std::size_t rx = ix, ry = iy;
                bool related = true;
                for (unsigned i = op.arity; i-- > 0;) {
                    xs[i] = fa::Element(rx % n);
                    ys[i] = fa::Element(ry % n);
                    rx /= n;
                    ry /= n;
                    related = related && p.same(xs[i], ys[i]);
                }
                if (related && !p.same(A.apply(oi, xs), A.apply(oi, ys))) return false;
            }
    }
    return true;
}

std::vector<Partition> congruences_by_brute_force(const FiniteAlgebra& A) {
    std::vector<Partition> parts;
    enumerate_partitions(A.size(), parts);
    std::set<Partition> out;
    for (const auto& p : parts)
        if (compatible_with_all_ops(A, p)) out.insert(p);
    return {out.begin(), out.end()};
}

FiniteAlgebra random_algebra(std::mt19937& rng, unsigned max_n = 4) {
    std::uniform_int_distribution<unsigned> nd(2, max_n), opsd(1, 2), ard(1, 2);
    unsigned n = nd(rng);
    std::vector<Operation> ops;
    unsigned num_ops = opsd(rng);
    std::uniform_int_distribution<unsigned> el(0, n - 1);
    for (unsigned i = 0; i < num_ops; ++i) {
        unsigned ar = ard(rng);
        std::size_t total = 1;
        for (unsigned j = 0; j < ar; ++j) total *= n;
        Operation op{ar, {}};
        for (std::size_t j = 0; j < total; ++j) op.table.push_back(el(rng));
        ops.push_back(std::move(op));
    }
    return FiniteAlgebra(n, std::move(ops));
}

}  // namespace

TEST_CASE("freeze") {
    auto z4 = FiniteAlgebra::cyclic_add(4);
    fa::Element c = 1;
    auto t = fa::freeze(z4, 0, 0, std::span<const fa::Element>(&c, 1));
    REQUIRE(t == fa::UnaryTable{1, 2, 3, 0});

    // frozen unary of a unary operation is the operation itself
    Operation inc{1, {1, 2, 3, 0}};
    FiniteAlgebra u(4, {inc});
    REQUIRE(fa::freeze(u, 0, 0, {}) == inc.table);
}

TEST_CASE("duo_closure") {
    // (Z/5, +): exactly the five translations
    auto duos5 = fa::duo_closure(FiniteAlgebra::cyclic_add(5));
    REQUIRE(duos5.size() == 5);
    for (const auto& g : duos5) {
        unsigned shift = g[0];
        for (unsigned x = 0; x < 5; ++x) REQUIRE(g[x] == (x + shift) % 5);
    }

    // (Z/6, x): the six homotheties
    auto duos6 = fa::duo_closure(FiniteAlgebra::cyclic_mul(6));
    REQUIRE(duos6.size() == 6);
    for (const auto& g : duos6) {
        unsigned scale = g[1];
        for (unsigned x = 0; x < 6; ++x) REQUIRE(g[x] == (scale * x) % 6);
    }

    // identity-only algebra
    Operation id{1, {0, 1, 2}};
    auto duos_id = fa::duo_closure(FiniteAlgebra(3, {id}));
    REQUIRE(duos_id.size() == 1);
}

TEST_CASE("gen_set") {
    REQUIRE(fa::gen_set(FiniteAlgebra::cyclic_add(5), 2) ==
            std::vector<fa::Element>{0, 1, 2, 3, 4});

    // M_{3,1} under successor: the orbit of 1 walks to the sink
    Operation suc{1, {1, 2, 3, 3}};
    REQUIRE(fa::gen_set(FiniteAlgebra(4, {suc}), 1) == std::vector<fa::Element>{1, 2, 3});

    Operation id{1, {0, 1}};
    REQUIRE(fa::gen_set(FiniteAlgebra(2, {id}), 1) == std::vector<fa::Element>{1});
}

TEST_CASE("congruence checks") {
    auto z4 = FiniteAlgebra::cyclic_add(4);
    REQUIRE(fa::is_congruence(z4, Partition::equality(4)));
    REQUIRE(fa::is_congruence(z4, Partition::single_class(4)));
    REQUIRE(fa::is_congruence(z4, Partition({0, 1, 0, 1})));   // mod 2
    REQUIRE_FALSE(fa::is_congruence(z4, Partition({0, 0, 1, 1})));
}

TEST_CASE("principal congruences and all_congruences") {
    auto z6 = FiniteAlgebra::cyclic_add(6);
    REQUIRE(fa::principal_congruence(z6, 0, 2) == Partition({0, 1, 0, 1, 0, 1}));
    REQUIRE(fa::all_congruences(z6).size() == 4);  // one per divisor of 6

    Operation id2{1, {0, 1}};
    REQUIRE(fa::all_congruences(FiniteAlgebra(2, {id2})).size() == 2);

    // join closure agrees with the brute-force partition filter, including
    // five-element carriers (Bell(5) = 52 partitions)
    std::mt19937 rng(123);
    for (int i = 0; i < 60; ++i) {
        auto A = random_algebra(rng);
        REQUIRE(fa::all_congruences(A) == congruences_by_brute_force(A));
    }
    for (int i = 0; i < 15; ++i) {
        auto A = random_algebra(rng, 5);
        REQUIRE(fa::all_congruences(A) == congruences_by_brute_force(A));
    }
    REQUIRE(fa::all_congruences(FiniteAlgebra::cyclic_add(5)).size() == 2);
}

TEST_CASE("frozen-unary reduction equals full-arity compatibility") {
    std::mt19937 rng(321);
    for (int i = 0; i < 80; ++i) {
        auto A = random_algebra(rng);
        std::vector<Partition> parts;
        enumerate_partitions(A.size(), parts);
        for (const auto& p : parts)
            REQUIRE(fa::is_congruence(A, p) == compatible_with_all_ops(A, p));
    }
}

TEST_CASE("all_stable_preorders") {
    // (Z/3, +): only equality and the full preorder survive stability
    auto pre3 = fa::all_stable_preorders(FiniteAlgebra::cyclic_add(3));
    REQUIRE(pre3.size() == 2);
    REQUIRE(pre3.front() == fa::BinRel::equality(3));
    REQUIRE(pre3.back() == fa::BinRel::full(3));

    // identity-only two-element algebra: all four reflexive transitive
    // relations are stable
    Operation id2{1, {0, 1}};
    REQUIRE(fa::all_stable_preorders(FiniteAlgebra(2, {id2})).size() == 4);

    Operation id1{1, {0}};
    REQUIRE(fa::all_stable_preorders(FiniteAlgebra(1, {id1})).size() == 1);

    Operation big{1, {0, 1, 2, 3, 4, 5}};
    REQUIRE_THROWS_AS(fa::all_stable_preorders(FiniteAlgebra(6, {big})), std::domain_error);
}

TEST_CASE("syntactic congruence and preorder") {
    auto z6 = FiniteAlgebra::cyclic_add(6);
    Subset L = 0b001001;  // {0, 3}
    REQUIRE(fa::syntactic_congruence(z6, L) == Partition({0, 1, 2, 0, 1, 2}));

    REQUIRE(fa::syntactic_congruence(z6, 0) == Partition::single_class(6));
    REQUIRE(fa::syntactic_preorder(z6, 0) == fa::BinRel::full(6));

    // coarsest property: every congruence saturating L refines ~_L
    std::mt19937 rng(5150);
    for (int i = 0; i < 40; ++i) {
        auto A = random_algebra(rng);
        unsigned n = A.size();
        for (Subset L2 = 0; L2 < (Subset(1) << n); ++L2) {
            Partition syn = fa::syntactic_congruence(A, L2);
            REQUIRE(syn.saturates(L2, n));
            for (const auto& c : fa::all_congruences(A))
                if (c.saturates(L2, n)) REQUIRE(c.refines(syn));
        }
    }
}

TEST_CASE("preserves and DUOs preserve everything") {
    std::mt19937 rng(777);
    for (int i = 0; i < 30; ++i) {
        auto A = random_algebra(rng);
        for (const auto& g : fa::duo_closure(A)) {
            REQUIRE(fa::preserves_all_congruences(A, g));
            REQUIRE(fa::preserves_all_stable_preorders(A, g));
        }
    }

    // swapping the two points of an identity-only algebra preserves all
    // congruences even though it moves outside every gen set
    Operation id2{1, {0, 1}};
    FiniteAlgebra A2(2, {id2});
    REQUIRE(fa::preserves_all_congruences(A2, {1, 0}));

    // x -> x^2 mod 4 preserves both congruences of (Z/4, +)
    auto z4 = FiniteAlgebra::cyclic_add(4);
    fa::UnaryTable sq{0, 1, 0, 1};
    REQUIRE(fa::preserves_all_congruences(z4, sq));
}

TEST_CASE("quotient and induced functions") {
    auto z6 = FiniteAlgebra::cyclic_add(6);
    Partition mod2({0, 1, 0, 1, 0, 1});
    auto q = fa::quotient(z6, mod2);
    REQUIRE(q.size() == 2);
    fa::Element args01[2] = {0, 1};
    REQUIRE(q.apply(0, args01) == 1);
    fa::Element args11[2] = {1, 1};
    REQUIRE(q.apply(0, args11) == 0);

    // congruence-preserving f induces a well-defined quotient function
    fa::UnaryTable dbl{0, 2, 4, 0, 2, 4};
    auto ind = fa::induced_function(z6, dbl, mod2);
    REQUIRE(std::holds_alternative<fa::UnaryTable>(ind));
    REQUIRE(std::get<fa::UnaryTable>(ind) == fa::UnaryTable{0, 0});

    // an incompatible f yields a witness
    fa::UnaryTable bad{0, 0, 1, 0, 0, 0};
    auto ill = fa::induced_function(z6, bad, mod2);
    REQUIRE(std::holds_alternative<fa::IllDefined>(ill));
    auto w = std::get<fa::IllDefined>(ill);
    REQUIRE(mod2.same(w.x, w.y));
    REQUIRE_FALSE(mod2.same(bad[w.x], bad[w.y]));

    REQUIRE_THROWS_AS(fa::quotient(z6, Partition({0, 0, 1, 1, 2, 2})), std::domain_error);
}

TEST_CASE("preimage decompositions") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 50; ++i) {
        auto A = random_algebra(rng);
        unsigned n = A.size();
        std::uniform_int_distribution<unsigned> el(0, n - 1);
        fa::UnaryTable f(n);
        for (unsigned x = 0; x < n; ++x) f[x] = el(rng);
        for (Subset L = 0; L < (Subset(1) << n); ++L) {
            Subset direct = fa::preimage(f, L);
            if (fa::preserves(A, f, fa::syntactic_preorder(A, L)))
                REQUIRE(fa::decompose_preimage_lattice(A, f, L) == direct);
            if (fa::preserves(A, f, fa::syntactic_congruence(A, L)))
                REQUIRE(fa::decompose_preimage_boolean(A, f, L) == direct);
        }
        // the identity decomposes L to itself
        fa::UnaryTable id(n);
        for (unsigned x = 0; x < n; ++x) id[x] = x;
        for (Subset L = 0; L < (Subset(1) << n); ++L) {
            REQUIRE(fa::decompose_preimage_lattice(A, id, L) == L);
            REQUIRE(fa::decompose_preimage_boolean(A, id, L) == L);
        }
    }
}

TEST_CASE("closures are the saturated sets / initial segments") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 25; ++i) {
        auto A = random_algebra(rng, 5);
        unsigned n = A.size();
        for (Subset L = 0; L < (Subset(1) << n); ++L) {
            Partition syn = fa::syntactic_congruence(A, L);
            auto boolean = fa::boolean_closure(A, L);
            std::set<Subset> bool_set(boolean.begin(), boolean.end());
            fa::BinRel ord = fa::syntactic_preorder(A, L);
            auto lattice = fa::lattice_closure(A, L);
            std::set<Subset> lat_set(lattice.begin(), lattice.end());
            for (Subset X = 0; X < (Subset(1) << n); ++X) {
                REQUIRE(bool_set.contains(X) == syn.saturates(X, n));
                bool initial = true;
                for (unsigned b = 0; b < n && initial; ++b)
                    for (unsigned x = 0; x < n && initial; ++x)
                        if (fa::subset_contains(X, b) && ord.get(x, b))
                            initial = fa::subset_contains(X, x);
                // members are exactly the initial segments, except that the
                // empty and full sets belong only when the pairwise closure
                // can build them (no nullary meets or joins)
                if (X != 0 && X != fa::full_subset(n)) REQUIRE(lat_set.contains(X) == initial);
                else if (lat_set.contains(X)) REQUIRE(initial);
            }
        }
    }
}

TEST_CASE("groups: stable orders collapse and cancellative semigroups are groups") {
    auto r4 = fa::stable_orders_of_group(FiniteAlgebra::cyclic_add(4));
    REQUIRE(r4 == std::vector<fa::BinRel>{fa::BinRel::equality(4)});

    // Z/2 x Z/2
    Operation klein{2, {}};
    klein.table.resize(16);
    for (unsigned x = 0; x < 4; ++x)
        for (unsigned y = 0; y < 4; ++y) klein.table[4 * x + y] = x ^ y;
    auto rk = fa::stable_orders_of_group(FiniteAlgebra(4, {klein}));
    REQUIRE(rk == std::vector<fa::BinRel>{fa::BinRel::equality(4)});

    Operation triv{2, {0}};
    auto rt = fa::stable_orders_of_group(FiniteAlgebra(1, {triv}));
    REQUIRE(rt == std::vector<fa::BinRel>{fa::BinRel::equality(1)});

    // (Z/5)^* under multiplication, relabeled to {0..3}
    Operation umul{2, {}};
    umul.table.resize(16);
    for (unsigned x = 0; x < 4; ++x)
        for (unsigned y = 0; y < 4; ++y) umul.table[4 * x + y] = ((x + 1) * (y + 1)) % 5 - 1;
    auto g = fa::cancellative_to_group(FiniteAlgebra(4, {umul}));
    REQUIRE(std::holds_alternative<fa::GroupStructure>(g));
    REQUIRE(std::get<fa::GroupStructure>(g).unit == 0);  // element 1

    // ({0,1}, max) is not cancellable: max(0,1) == max(1,1)
    Operation mx{2, {0, 1, 1, 1}};
    auto nc = fa::cancellative_to_group(FiniteAlgebra(2, {mx}));
    REQUIRE(std::holds_alternative<fa::NotCancellable>(nc));

    // any group table returns its own unit and inverses
    auto gz6 = fa::cancellative_to_group(FiniteAlgebra::cyclic_add(6));
    REQUIRE(std::holds_alternative<fa::GroupStructure>(gz6));
    auto gs = std::get<fa::GroupStructure>(gz6);
    REQUIRE(gs.unit == 0);
    REQUIRE(gs.inverse == fa::UnaryTable{0, 5, 4, 3, 2, 1});

    // stable preorders on group algebras are congruences (symmetric)
    for (unsigned n = 2; n <= 4; ++n)
        for (const auto& r : fa::all_stable_preorders(FiniteAlgebra::cyclic_add(n)))
            REQUIRE(r.symmetric());
}

TEST_CASE("group-operation collapse at carrier size five") {
    // with a group operation, preserving all congruences, all lattice
    // memberships and all boolean memberships coincide
    auto z5 = FiniteAlgebra::cyclic_add(5);
    REQUIRE(fa::stable_orders_of_group(z5) == std::vector<fa::BinRel>{fa::BinRel::equality(5)});

    std::mt19937 rng(515151);
    std::uniform_int_distribution<unsigned> el(0, 4);
    std::vector<std::vector<Subset>> lat(32), boo(32);
    for (Subset L = 0; L < 32; ++L) {
        lat[L] = fa::lattice_closure(z5, L);
        boo[L] = fa::boolean_closure(z5, L);
    }
    for (int t = 0; t < 40; ++t) {
        fa::UnaryTable f(5);
        for (unsigned x = 0; x < 5; ++x) f[x] = el(rng);
        bool iii = fa::preserves_all_congruences(z5, f);
        bool v = true, vi = true;
        for (Subset L = 0; L < 32; ++L) {
            Subset pre = fa::preimage(f, L);
            v = v && std::binary_search(lat[L].begin(), lat[L].end(), pre);
            vi = vi && std::binary_search(boo[L].begin(), boo[L].end(), pre);
        }
        REQUIRE(iii == v);
        REQUIRE(v == vi);
    }
}
