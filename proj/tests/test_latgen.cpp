#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "conglat/latgen.hpp"

using conglat::BigInt;
namespace lg = conglat::latgen;
namespace rs = conglat::recsets;
namespace ni = conglat::natint;
using lg::ClosureKind;
using lg::Signature;

TEST_CASE("lattice of 6+10Z: all unions of residue classes") {
    rs::UPSetZ L = rs::UPSetZ::progression(6, 10);
    auto fam_add = lg::generate(L, Signature::add, ClosureKind::lattice);
    REQUIRE(fam_add.size() == 1024);

    auto fam_both = lg::generate(L, Signature::add_mul, ClosureKind::lattice);
    REQUIRE(fam_both.size() == 1024);
    REQUIRE(fam_add.members() == fam_both.members());

    // every member is G + 10Z and every G appears
    std::set<lg::Mask> seen(fam_add.members().begin(), fam_add.members().end());
    REQUIRE(seen.size() == 1024);
    for (lg::Mask g = 0; g < 1024; ++g) REQUIRE(seen.contains(g));

    // Z itself is a member
    auto q = lg::member_of(fam_add, rs::UPSetZ::all());
    REQUIRE(q.found);

    // a set not saturated mod 10 is not
    REQUIRE_FALSE(lg::member_of(fam_add, rs::UPSetZ::progression(1, 20)).found);
}

TEST_CASE("residue-class lattices over Z for small periods") {
    for (unsigned k = 2; k <= 5; ++k) {
        for (unsigned bits = 1; bits < (1u << k); ++bits) {
            std::vector<bool> G(k);
            for (unsigned j = 0; j < k; ++j) G[j] = (bits >> j) & 1u;
            rs::UPSetZ L(k, G);
            if (L.normalized().period() != k) continue;  // k must be minimal
            auto fa = lg::generate(L, Signature::add, ClosureKind::lattice);
            auto fb = lg::generate(L, Signature::add_mul, ClosureKind::lattice);
            REQUIRE(fa.size() == (std::size_t(1) << k));
            REQUIRE(fa.members() == fb.members());
        }
    }
    // trivial cases collapse to {L}
    auto fz = lg::generate(rs::UPSetZ::all(), Signature::add, ClosureKind::lattice);
    REQUIRE(fz.size() == 1);
    auto fe = lg::generate(rs::UPSetZ::empty(), Signature::add, ClosureKind::lattice);
    REQUIRE(fe.size() == 1);
}

TEST_CASE("finite multiplicative example: L = {1,2,4,5,10,20}") {
    std::vector<BigInt> L{1, 2, 4, 5, 10, 20};
    auto fam = lg::generate_finite_mul(L, ClosureKind::lattice);

    // the nine sets of the worked example plus L/2 u L/5 = {1,2,4,5,10},
    // which any lattice containing the division table is forced to hold
    std::set<std::set<BigInt>> expected = {
        {},
        {1},
        {1, 2},
        {1, 5},
        {1, 2, 4},
        {1, 2, 5},
        {1, 2, 4, 5},
        {1, 2, 5, 10},
        {1, 2, 4, 5, 10},
        {1, 2, 4, 5, 10, 20},
    };
    REQUIRE(fam.size() == expected.size());
    std::set<std::set<BigInt>> got;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        auto elems = lg::member_as_finite_set(fam, i);
        got.insert(std::set<BigInt>(elems.begin(), elems.end()));
    }
    REQUIRE(got == expected);

    // the division table L/a, entry for entry
    auto division = [&](const BigInt& a) {
        std::set<BigInt> out;
        for (const BigInt& x : std::vector<BigInt>{1, 2, 4, 5, 10, 20, 3, 6, 7, 8, 40})
            for (const BigInt& l : L)
                if (a * x == l) out.insert(x);
        return out;
    };
    REQUIRE(division(1) == std::set<BigInt>{1, 2, 4, 5, 10, 20});
    REQUIRE(division(2) == std::set<BigInt>{1, 2, 5, 10});
    REQUIRE(division(4) == std::set<BigInt>{1, 5});
    REQUIRE(division(5) == std::set<BigInt>{1, 2, 4});
    REQUIRE(division(10) == std::set<BigInt>{1, 2});
    REQUIRE(division(20) == std::set<BigInt>{1});
    REQUIRE(division(3) == std::set<BigInt>{});
    // and the generators of the family agree with it
    for (std::size_t s = 0; s < fam.generators().size(); ++s) {
        const auto& g = fam.generators()[s];
        std::set<BigInt> seed_set;
        for (const BigInt& x : std::vector<BigInt>{1, 2, 4, 5, 10, 20})
            if ((fam.seed_masks()[s] >> fam.class_of(x)) & 1u) seed_set.insert(x);
        REQUIRE(seed_set == division(g.scale));
    }

    // membership with a short witness through L/4
    auto q = lg::member_of(fam, std::vector<BigInt>{1, 5});
    REQUIRE(q.found);
    bool mentions_l4 = false;
    for (const auto& term : q.witness)
        for (std::size_t s : term.pos)
            if (fam.generators()[s].describe() == "L/4") mentions_l4 = true;
    REQUIRE(mentions_l4);

    REQUIRE_FALSE(lg::member_of(fam, std::vector<BigInt>{2, 5}).found);

    // the empty base yields the one-member family
    auto empty = lg::generate_finite_mul({}, ClosureKind::lattice);
    REQUIRE(empty.size() == 1);
}

TEST_CASE("boolean multiplicative families reach cofinite members") {
    // L = {2}: classes {1}, {2} and the sink; the Boolean algebra is all
    // 8 saturated sets, half of them cofinite
    auto fam = lg::generate_finite_mul({BigInt(2)}, ClosureKind::boolean_algebra);
    REQUIRE(fam.index() == 3);
    REQUIRE(fam.size() == 8);
    std::size_t cofinite = 0;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        try {
            lg::member_as_finite_set(fam, i);
        } catch (const std::domain_error&) {
            ++cofinite;
        }
        REQUIRE_NOTHROW(fam.dnf(i));
    }
    REQUIRE(cofinite == 4);
}

TEST_CASE("closure property and saturation invariants") {
    rs::UPSetZ L = rs::UPSetZ::progression(3, 6);
    for (auto kind : {ClosureKind::lattice, ClosureKind::boolean_algebra}) {
        auto fam = lg::generate(L, Signature::add, kind);
        std::set<lg::Mask> mem(fam.members().begin(), fam.members().end());
        for (lg::Mask a : fam.members())
            for (lg::Mask b : fam.members()) {
                REQUIRE(mem.contains(a & b));
                REQUIRE(mem.contains(a | b));
                if (kind == ClosureKind::boolean_algebra)
                    REQUIRE(mem.contains(((lg::Mask(1) << fam.index()) - 1) & ~a));
            }
    }

    // boolean families over Z are all the saturated sets: 2^index masks
    auto fb = lg::generate(L, Signature::add, ClosureKind::boolean_algebra);
    REQUIRE(fb.size() == (std::size_t(1) << fb.index()));
}

TEST_CASE("lattice families over (N,+) are the initial segments") {
    rs::UPSetN L = rs::UPSetN::finite({0, 3, 7});
    auto fam = lg::generate(L, Signature::add, ClosureKind::lattice);
    unsigned m = fam.index();
    REQUIRE(m == 9);  // syntactic index of {0,3,7} is 8 + 1

    // class preorder: c <= c' iff every seed containing c' contains c
    auto le = [&](unsigned c, unsigned cp) {
        for (lg::Mask s : fam.seed_masks())
            if (((s >> cp) & 1u) && !((s >> c) & 1u)) return false;
        return true;
    };
    std::set<lg::Mask> mem(fam.members().begin(), fam.members().end());
    for (lg::Mask X = 1; X + 1 < (lg::Mask(1) << m); ++X) {
        // proper nonempty sets: the endpoints need nullary meets/joins the
        // pairwise closure does not take
        bool initial = true;
        for (unsigned cp = 0; cp < m && initial; ++cp)
            for (unsigned c = 0; c < m && initial; ++c)
                if (((X >> cp) & 1u) && le(c, cp)) initial = (X >> c) & 1u;
        REQUIRE(mem.contains(X) == initial);
    }

    // boolean family: every saturated set, i.e. every class mask
    auto fb = lg::generate(L, Signature::add, ClosureKind::boolean_algebra);
    REQUIRE(fb.size() == (std::size_t(1) << m));
}

TEST_CASE("check_finv_in") {
    rs::UPSetZ L = rs::UPSetZ::progression(6, 10);
    auto fam = lg::generate(L, Signature::add, ClosureKind::lattice);

    // x^2: the preimage is {4,6} + 10Z
    auto sq = ni::FnTable::tabulate(ni::Domain::Z, -20, 20, [](const BigInt& x) { return x * x; });
    auto rep = lg::check_finv_in(fam, sq, L);
    REQUIRE(rep.matched);
    REQUIRE(set_equal(lg::member_as_upset_z(fam, rep.member), rs::UPSetZ(10, {
        false, false, false, false, true, false, true, false, false, false})));

    // translations are generators, so x+c always matches
    for (int c : {-3, 0, 5}) {
        auto tr = ni::FnTable::tabulate(ni::Domain::Z, -20, 20,
                                        [&](const BigInt& x) { return x + c; });
        REQUIRE(lg::check_finv_in(fam, tr, L).matched);
    }

    // 2^k on the N part is not saturated mod 10
    auto pw = ni::FnTable::tabulate(ni::Domain::Z, -20, 20, [](const BigInt& x) {
        return x >= 0 ? conglat::pow_u(2, conglat::to_ulong(x)) : BigInt(0);
    });
    auto bad = lg::check_finv_in(fam, pw, L);
    REQUIRE_FALSE(bad.matched);
    REQUIRE(bad.witness.size() == 2);

    // window too small to separate members
    auto tiny = ni::FnTable::tabulate(ni::Domain::Z, 0, 3, [](const BigInt& x) { return x; });
    REQUIRE_THROWS_AS(lg::check_finv_in(fam, tiny, L), std::domain_error);

    // instances matched in the lattice family are
    // matched in the boolean family too
    auto famb = lg::generate(L, Signature::add, ClosureKind::boolean_algebra);
    REQUIRE(lg::check_finv_in(famb, sq, L).matched);
    for (int c : {-3, 0, 5}) {
        auto tr = ni::FnTable::tabulate(ni::Domain::Z, -20, 20,
                                        [&](const BigInt& x) { return x + c; });
        REQUIRE(lg::check_finv_in(famb, tr, L).matched);
    }
}

TEST_CASE("monomials land in multiplicative lattices") {
    // f(x) = c x^n has f^-1(L) in L_x(L) for finite L (windowed check)
    std::vector<BigInt> L{1, 2, 4, 5, 10, 20};
    auto fam = lg::generate_finite_mul(L, ClosureKind::lattice);
    for (unsigned c = 1; c <= 3; ++c)
        for (unsigned n = 1; n <= 3; ++n) {
            auto f = ni::FnTable::tabulate(ni::Domain::NPos, 1, 20, [&](const BigInt& x) {
                return BigInt(c) * conglat::pow_u(x, n);
            });
            std::set<BigInt> ls(L.begin(), L.end());
            auto rep = lg::check_finv_in(fam, f, [&](const BigInt& v) { return ls.contains(v); });
            REQUIRE(rep.matched);
        }
}

TEST_CASE("regular counterexample") {
    auto rep = lg::regular_counterexample_check(200);
    REQUIRE(rep.refuted);
    REQUIRE(rep.witness < BigInt(6) - 200);
    REQUIRE(rep.witness * rep.witness % 10 == 6);
    REQUIRE(rep.control_recognizable_matched);
    REQUIRE(rep.control_identity_matched);
}

TEST_CASE("provenance derivations replay") {
    rs::UPSetZ L = rs::UPSetZ::progression(2, 6);
    auto fam = lg::generate(L, Signature::add, ClosureKind::lattice);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        auto d = fam.derivation(i);
        lg::Mask m = fam.members()[i];
        switch (d.kind) {
            case lg::Derivation::Kind::seed:
                REQUIRE(fam.seed_masks().at(d.a) == m);
                break;
            case lg::Derivation::Kind::meet:
                REQUIRE((d.a & d.b) == m);
                REQUIRE(fam.find_mask(d.a).has_value());
                REQUIRE(fam.find_mask(d.b).has_value());
                break;
            case lg::Derivation::Kind::join:
                REQUIRE((d.a | d.b) == m);
                break;
            case lg::Derivation::Kind::complement:
                REQUIRE((((lg::Mask(1) << fam.index()) - 1) & ~d.a) == m);
                break;
        }
        // the DNF expansion reproduces each member (asserted inside dnf)
        REQUIRE_NOTHROW(fam.dnf(i));
    }
}

TEST_CASE("Hasse diagram export") {
    rs::UPSetZ L = rs::UPSetZ::progression(1, 3);
    auto fam = lg::generate(L, Signature::add, ClosureKind::lattice);
    std::string dot = lg::to_dot(fam);
    REQUIRE(dot.find("digraph hasse") != std::string::npos);
    // the 8-member boolean cube on 3 classes has 12 cover edges
    std::size_t edges = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1))
        ++edges;
    REQUIRE(edges == 12);
}
