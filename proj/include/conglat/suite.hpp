#pragma once

#include <atomic>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "conglat/exactint.hpp"
#include "conglat/exotic.hpp"
#include "conglat/finalg.hpp"
#include "conglat/fryingpan.hpp"
#include "conglat/latgen.hpp"
#include "conglat/natint.hpp"
#include "conglat/padic.hpp"
#include "conglat/recsets.hpp"

/**
 * The acceptance suite: one verification routine per criterion, each
 * returning a pass/fail verdict with a one-line account of what was
 * checked.  Bounds, tolerances and witnesses are fixed here, in code; the
 * CLI `verify-suite` subcommand and the acceptance binary both run these.
 */
namespace conglat::suite {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string details;
};

namespace detail {

inline void note(std::ostream* progress, const std::string& msg) {
    if (progress) (*progress) << "  … " << msg << std::endl;
}

// Oracle: every partition of {0..n-1}, as restricted growth strings.
inline void enumerate_partitions(unsigned n, std::vector<finalg::Partition>& out) {
    std::vector<unsigned> cls(n, 0);
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
    rec(rec, 1, 0);
}

inline bool compatible_with_all_ops(const finalg::FiniteAlgebra& A, const finalg::Partition& p) {
    unsigned n = A.size();
    for (unsigned oi = 0; oi < A.ops().size(); ++oi) {
        const auto& op = A.ops()[oi];
        if (op.arity == 0) continue;
        std::size_t total = 1;
        for (unsigned i = 0; i < op.arity; ++i) total *= n;
        std::vector<finalg::Element> xs(op.arity), ys(op.arity);
        for (std::size_t ix = 0; ix < total; ++ix)
            for (std::size_t iy = 0; iy < total; ++iy) {
                std::size_t rx = ix, ry = iy;
                bool related = true;
                for (unsigned i = op.arity; i-- > 0;) {
                    xs[i] = finalg::Element(rx % n);
                    ys[i] = finalg::Element(ry % n);
                    rx /= n;
                    ry /= n;
                    related = related && p.same(xs[i], ys[i]);
                }
                if (related && !p.same(A.apply(oi, xs), A.apply(oi, ys))) return false;
            }
    }
    return true;
}

}  // namespace detail

/// 1. Frying-pan morphism law for +, x, suc: exhaustive over a+k <= 12 and
/// x, y <= 3(a+k).
inline CriterionResult criterion_1() {
    long checked = 0, failures = 0;
    for (unsigned s = 1; s <= 12; ++s)
        for (unsigned a = 0; a < s; ++a) {
            fryingpan::FryingPan pan(a, s - a);
            unsigned bound = 3 * pan.size();
            for (unsigned x = 0; x <= bound; ++x) {
                if (pan.project(BigInt(x) + 1) != pan.suc(pan.project(x))) ++failures;
                for (unsigned y = 0; y <= bound; ++y) {
                    if (pan.project(BigInt(x) + y) != pan.add(pan.project(x), pan.project(y)))
                        ++failures;
                    if (pan.project(BigInt(x) * y) != pan.mul(pan.project(x), pan.project(y)))
                        ++failures;
                    checked += 2;
                }
                ++checked;
            }
        }
    std::ostringstream d;
    d << checked << " instances over 78 monoids, " << failures << " failures";
    return {1, "frying-pan morphism law (+, x, suc)", failures == 0, d.str()};
}

/// 2. Generator formula vs brute-force orbit closure; counts match phi(k)
/// for a in {0,1}.
inline CriterionResult criterion_2() {
    long mismatches = 0;
    for (unsigned s = 1; s <= 12; ++s)
        for (unsigned a = 0; a < s; ++a) {
            fryingpan::FryingPan pan(a, s - a);
            std::set<unsigned> orbit;
            for (unsigned g = 0; g < pan.size(); ++g) {
                std::set<unsigned> sums;
                unsigned acc = g;
                for (unsigned reps = 1; reps <= 2 * pan.size() + 2; ++reps) {
                    sums.insert(acc);
                    acc = pan.add(acc, g);
                }
                bool covers = true;
                for (unsigned m = 1; m < pan.size() && covers; ++m) covers = sums.contains(m);
                if (covers) orbit.insert(g);
            }
            auto formula = pan.generators();
            if (std::set<unsigned>(formula.begin(), formula.end()) != orbit) ++mismatches;
            if (a <= 1 && BigInt(formula.size()) != exactint::euler_phi(pan.cycle())) ++mismatches;
        }
    return {2, "generators: formula vs orbit, count = phi(k) for a <= 1", mismatches == 0,
            std::to_string(mismatches) + " mismatches over 78 monoids"};
}

/// 3. Every table {0..4} -> {0..10} passing the divisibility+over-linearity
/// check preserves all ~_{a,k} with index <= 5 on the window; the explicit
/// negatives are refuted with the cited witnesses.
inline CriterionResult criterion_3(std::ostream* progress = nullptr) {
    std::vector<natint::CongruenceSpec> naks;
    for (unsigned s = 1; s <= 5; ++s)
        for (unsigned a = 0; a < s; ++a) naks.push_back(natint::Nak{a, s - a});

    long implication_failures = 0, accepted = 0;
    std::vector<BigInt> vals(5, 0);
    std::vector<int> digits(5, 0);
    while (true) {
        natint::FnTable f(natint::Domain::N, 0, 4, vals);
        if (!natint::check_cp_additive(f)) {
            ++accepted;
            if (natint::brute_force_preserves(f, naks)) ++implication_failures;
        }
        unsigned i = 0;
        for (; i < 5; ++i) {
            if (++digits[i] <= 10) { vals[i] = digits[i]; break; }
            digits[i] = 0;
            vals[i] = 0;
        }
        if (i == 5) break;
    }
    detail::note(progress, "scanned 161051 tables, " + std::to_string(accepted) + " accepted");

    // the divisibility-respecting lift of f(0)=f(1)=0, f(2)=2 is
    // refuted by the over-linearity clause at x = 1, and directly violates
    // ~_{1,1} at the pair (1,2)
    std::vector<BigInt> lift{0, 0, 2};
    for (unsigned x = 3; x <= 10; ++x) {
        exactint::ResidueConstraint acc(0, 1);
        for (unsigned d = 1; d <= x; ++d) {
            auto m = exactint::crt_merge(acc, {lift[x - d], d});
            if (!m) return {3, "divisibility characterization", false, "lift construction failed"};
            acc = *m;
        }
        lift.push_back(acc.residue());
    }
    natint::FnTable lifted(natint::Domain::N, 0, 10, lift);
    auto r1 = natint::check_cp_additive(lifted);
    bool lift_ok = r1 && r1->law == "over_linearity" && r1->witness == std::vector<BigInt>{1};
    std::vector<natint::CongruenceSpec> n11{natint::Nak{1, 1}};
    auto v1 = natint::brute_force_preserves(lifted, n11);
    lift_ok = lift_ok && v1 &&
              ((v1->x == 1 && v1->y == 2) || (v1->x == 2 && v1->y == 1));

    auto pow2 = natint::FnTable::tabulate(natint::Domain::Z, 0, 10, [](const BigInt& x) {
        return pow_u(2, to_ulong(x));
    });
    auto r2 = natint::check_cp_additive(pow2);
    bool pow2_ok = r2 && r2->law == "divisibility" && r2->witness == std::vector<BigInt>{2, 0};
    std::vector<natint::CongruenceSpec> mod2{natint::Zmod{2}};
    auto v2 = natint::brute_force_preserves(pow2, mod2);
    pow2_ok = pow2_ok && v2 && ((v2->x == 2 && v2->y == 0) || (v2->x == 0 && v2->y == 2));

    bool pass = implication_failures == 0 && lift_ok && pow2_ok;
    std::ostringstream d;
    d << accepted << "/161051 tables accepted, " << implication_failures
      << " implication failures; mod-3 lift " << (lift_ok ? "refuted with the expected witness" : "WRONG")
      << "; 2^k " << (pow2_ok ? "refuted at (2,0)" : "WRONG");
    return {3, "divisibility characterization vs direct preservation on 11^5 tables", pass,
            d.str()};
}

/// 4. For every minimal-period F + kZ with k <= 5 the lattice
/// over (Z,+) and over (Z,+,x) is exactly {G + kZ}, 2^k members (the
/// trivial sets Z and the empty set collapse to {L}).
inline CriterionResult criterion_4() {
    long deviations = 0, cases = 0;
    for (unsigned k = 1; k <= 5; ++k)
        for (unsigned bits = 1; bits < (1u << k); ++bits) {
            std::vector<bool> G(k);
            for (unsigned j = 0; j < k; ++j) G[j] = (bits >> j) & 1u;
            recsets::UPSetZ L(k, G);
            if (L.normalized().period() != k) continue;
            ++cases;
            auto fa = latgen::generate(L, latgen::Signature::add, latgen::ClosureKind::lattice);
            auto fb = latgen::generate(L, latgen::Signature::add_mul, latgen::ClosureKind::lattice);
            bool trivial = k == 1 && bits == 1;  // L = Z
            std::size_t expect = trivial ? 1 : (std::size_t(1) << k);
            if (fa.size() != expect || fa.members() != fb.members()) ++deviations;
            if (!trivial) {
                std::set<latgen::Mask> seen(fa.members().begin(), fa.members().end());
                for (latgen::Mask g = 0; g < (latgen::Mask(1) << k); ++g)
                    if (!seen.contains(g)) ++deviations;
            }
        }
    return {4, "residue-class lattices over Z for k <= 5", deviations == 0,
            std::to_string(cases) + " base sets, " + std::to_string(deviations) + " deviations"};
}

/// 5. The worked multiplicative example: the lattice of L = {1,2,4,5,10,20}
/// must equal the documented nine-set list, and the division table must
/// match entry for entry.  (The division table does match; the set-list
/// equality is stated as printed even though the table itself forces the
/// union L/2 u L/5 = {1,2,4,5,10} into any lattice containing it, so this
/// criterion documents the discrepancy rather than hiding it.)
inline CriterionResult criterion_5() {
    std::vector<BigInt> L{1, 2, 4, 5, 10, 20};
    auto fam = latgen::generate_finite_mul(L, latgen::ClosureKind::lattice);
    std::set<std::set<BigInt>> listed = {
        {}, {1}, {1, 2}, {1, 5}, {1, 2, 4}, {1, 2, 5},
        {1, 2, 4, 5}, {1, 2, 5, 10}, {1, 2, 4, 5, 10, 20}};
    std::set<std::set<BigInt>> got;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        auto e = latgen::member_as_finite_set(fam, i);
        got.insert(std::set<BigInt>(e.begin(), e.end()));
    }
    bool sets_equal = got == listed;
    bool listed_present = true;
    for (const auto& s : listed) listed_present = listed_present && got.contains(s);
    std::ostringstream extras;
    for (const auto& s : got)
        if (!listed.contains(s)) {
            extras << " {";
            for (const auto& e : s) extras << e << ",";
            extras << "}";
        }

    std::map<long, std::set<BigInt>> table = {
        {1, {1, 2, 4, 5, 10, 20}}, {2, {1, 2, 5, 10}}, {4, {1, 5}},
        {5, {1, 2, 4}}, {10, {1, 2}}, {20, {1}}, {3, {}}, {7, {}}, {21, {}}};
    bool table_ok = true;
    std::set<BigInt> ls(L.begin(), L.end());
    for (const auto& [a, want] : table) {
        std::set<BigInt> quot;
        for (BigInt x = 1; x <= 20; ++x)
            if (ls.contains(BigInt(a) * x)) quot.insert(x);
        table_ok = table_ok && quot == want;
        if (!want.empty()) {
            // the family's generator masks realize the same sets
            bool found = false;
            for (std::size_t s = 0; s < fam.generators().size() && !found; ++s) {
                if (fam.generators()[s].scale != a) continue;
                std::set<BigInt> seed_set;
                for (const BigInt& x : L)
                    if ((fam.seed_masks()[s] >> fam.class_of(x)) & 1u) seed_set.insert(x);
                found = seed_set == want;
            }
            table_ok = table_ok && found;
        }
    }
    bool pass = sets_equal && table_ok;
    std::ostringstream d;
    d << "division table " << (table_ok ? "matches entry-for-entry" : "WRONG") << "; family has "
      << got.size() << " members";
    if (!sets_equal && listed_present && table_ok)
        d << " = the 9 listed sets plus" << extras.str()
          << " (forced: it is the union of the listed quotients L/2 and L/5; the printed list "
             "omits it)";
    return {5, "worked multiplicative example {1,2,4,5,10,20}", pass, d.str()};
}

/// 6. Monomials f(x) = c x^n (c, n in 1..3) have f^-1(L) in the lattice
/// L_x(L), verified windowed via check_finv_in over finite base sets; and
/// x+1 is refuted by the monomial characterization.  The base sets range
/// over all L inside {1..10}, all singletons and pairs inside {1..60} and a
/// seeded random sample inside {1..60}, restricted to the engine's
/// syntactic-index bound.
inline CriterionResult criterion_6(std::ostream* progress = nullptr) {
    std::vector<std::vector<BigInt>> bases;
    for (unsigned bits = 1; bits < (1u << 8); ++bits) {
        std::vector<BigInt> L;
        for (unsigned i = 0; i < 8; ++i)
            if ((bits >> i) & 1u) L.push_back(i + 1);
        bases.push_back(std::move(L));
    }
    for (unsigned a = 1; a <= 60; ++a) bases.push_back({a});
    for (unsigned a = 1; a <= 30; ++a)
        for (unsigned b = a + 1; b <= 30; ++b) bases.push_back({a, b});
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<unsigned> msize(3, 4), mel(1, 16);
    for (int t = 0; t < 300; ++t) {
        std::set<BigInt> L;
        unsigned sz = msize(rng);
        while (L.size() < sz) L.insert(mel(rng));
        bases.emplace_back(L.begin(), L.end());
    }

    long checked = 0, failures = 0, skipped = 0;
    for (const auto& L : bases) {
        std::optional<latgen::GeneratedFamily> fam;
        try {
            fam = latgen::generate_finite_mul(L, latgen::ClosureKind::lattice, 12);
        } catch (const std::domain_error&) {
            ++skipped;  // syntactic index beyond the engine's documented bound
            continue;
        }
        BigInt maxL = L.back();
        std::set<BigInt> ls(L.begin(), L.end());
        for (unsigned c = 1; c <= 3; ++c)
            for (unsigned n = 1; n <= 3; ++n) {
                auto f = natint::FnTable::tabulate(
                    natint::Domain::NPos, 1, maxL,
                    [&](const BigInt& x) { return BigInt(c) * pow_u(x, n); });
                auto rep = latgen::check_finv_in(
                    *fam, f, [&](const BigInt& v) { return ls.contains(v); });
                ++checked;
                if (!rep.matched) ++failures;
            }
    }
    detail::note(progress, std::to_string(checked) + " (L, f) instances, " +
                               std::to_string(skipped) + " bases beyond the index bound");

    auto succ = natint::FnTable::tabulate(natint::Domain::NPos, 1, 30,
                                          [](const BigInt& x) { return x + 1; });
    bool succ_refuted =
        std::holds_alternative<natint::Refutation>(natint::check_cp_multiplicative(succ));

    bool pass = failures == 0 && succ_refuted;
    std::ostringstream d;
    d << checked << " monomial/base instances, " << failures << " unmatched; x+1 "
      << (succ_refuted ? "refuted" : "NOT refuted");
    return {6, "monomial preimages stay in the multiplicative lattice", pass, d.str()};
}

/// 7. appendix construction at 1023: full pairwise divisibility
/// (~523k pairs), F(2^n - 1) == 0 (mod 2^n) for n <= 10, over-linearity,
/// and F(3) = 12 exactly.
inline CriterionResult criterion_7(std::ostream* progress = nullptr) {
    auto F = exotic::appendix_F(1023, exotic::PairwisePolicy::full);
    detail::note(progress, "construction and full certificate done");
    bool div_ok = F.certificate.pairwise_divisibility;
    bool pow_ok = true;
    for (unsigned n = 2; (1u << n) - 1 <= 1023; ++n)
        pow_ok = pow_ok && F.table((1u << n) - 1) % pow_u(2, n) == 0;
    bool lin_ok = true;
    for (unsigned x = 3; x <= 1023; ++x) lin_ok = lin_ok && F.table(x) >= x;
    bool basis_ok = F.table(3) == 12;
    bool pass = div_ok && pow_ok && lin_ok && basis_ok;
    std::ostringstream d;
    d << "pairwise divisibility " << (div_ok ? "ok" : "FAILED") << " (523776 pairs), 2-power residues "
      << (pow_ok ? "ok" : "FAILED") << ", F(x)>=x " << (lin_ok ? "ok" : "FAILED") << ", F(3)="
      << F.table(3);
    return {7, "appendix construction certificates at x_max=1023", pass, d.str()};
}

/// 8. The zig-zag lift on 0..16: strict alternation of increments and full
/// pairwise divisibility.
inline CriterionResult criterion_8() {
    auto target = natint::FnTable::tabulate(natint::Domain::N, 0, 16, [](const BigInt& x) {
        return exotic::zigzag_f(unsigned(to_ulong(x)));
    });
    auto g = exotic::cp_window_lift(target);
    bool div_ok = g.certificate.pairwise_divisibility;
    bool alt_ok = true;
    for (unsigned x = 1; x <= 16; ++x) {
        BigInt diff = g.table(x) - g.table(BigInt(x) - 1);
        alt_ok = alt_ok && (x % 2 == 0 ? diff > 0 : diff < 0);
    }
    bool pass = div_ok && alt_ok;
    return {8, "zig-zag lift: alternation and divisibility on 0..16", pass,
            std::string("divisibility ") + (div_ok ? "ok" : "FAILED") + ", alternation " +
                (alt_ok ? "strict" : "FAILED")};
}

/// 9. p-adic tower: arithmetic commutes with every precision reduction for
/// p in {2,3,5} and n <= 6, verified exhaustively as (a) the one-step
/// commuting squares n -> n-1 over all residue pairs at every level and
/// (b) the projection tower reduce(reduce(x,m'),m) = reduce(x,m) over all
/// residues, whose composition covers every (n,m) square; and the extension
/// of the appendix construction sends -1 to 0 at every precision n <= 16.
inline CriterionResult criterion_9(std::ostream* progress = nullptr,
                                   unsigned extension_precision = 16) {
    std::atomic<long> failures{0};
    long pair_count = 0;
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned n = 2; n <= 6; ++n) {
            unsigned long pn = 1;
            for (unsigned i = 0; i < n; ++i) pn *= p;
            pair_count += long(pn) * long(pn);
            // operands and their one-step reductions, precomputed once
            std::vector<padic::PAdicApprox> elems, red;
            elems.reserve(pn);
            red.reserve(pn);
            for (unsigned long v = 0; v < pn; ++v) {
                elems.emplace_back(p, n, v);
                red.push_back(elems.back().reduce(n - 1));
                // the projection tower composes: reducing stepwise equals
                // reducing directly, for every target precision
                for (unsigned m = 1; m < n; ++m)
                    if (!(elems.back().reduce(m) ==
                          padic::PAdicApprox(p, m, BigInt(v))))
                        ++failures;
                for (unsigned m = 1; m + 1 < n; ++m)
                    if (!(red.back().reduce(m) == elems.back().reduce(m))) ++failures;
            }
            unsigned workers = std::max(1u, std::thread::hardware_concurrency());
            std::vector<std::thread> threads;
            for (unsigned w = 0; w < workers; ++w)
                threads.emplace_back([&, w, pn]() {
                    long local = 0;
                    for (unsigned long xv = w; xv < pn; xv += workers) {
                        const padic::PAdicApprox& x = elems[xv];
                        const padic::PAdicApprox& xr = red[xv];
                        for (unsigned long yv = 0; yv < pn; ++yv) {
                            if (!((x + elems[yv]).reduce(n - 1) == xr + red[yv])) ++local;
                            if (!((x * elems[yv]).reduce(n - 1) == xr * red[yv])) ++local;
                        }
                    }
                    failures += local;
                });
            for (auto& t : threads) t.join();
        }
    detail::note(progress, "tower commutation over " + std::to_string(pair_count) + " pairs done");

    // the appendix table out to 2^16 - 1; the pairwise certificate on this
    // window is sampled (the full quadratic scan is reserved for 1023)
    unsigned long top = (1ul << extension_precision) - 1;
    auto F = exotic::appendix_F(unsigned(top), exotic::PairwisePolicy::sampled, 2'000'000);
    detail::note(progress, "appendix table to " + std::to_string(top) + " built");
    bool ext_ok = F.certificate.pairwise_divisibility;
    for (unsigned n = 1; n <= extension_precision; ++n) {
        padic::PAdicApprox minus1(2, n, pow_u(BigInt(2), n) - 1);
        ext_ok = ext_ok && padic::cp_extend(F, minus1).value() == 0;
    }
    bool pass = failures == 0 && ext_ok;
    std::ostringstream d;
    d << pair_count << " pairs commute with " << failures << " failures; f^(-1) == 0 mod 2^n "
      << (ext_ok ? "holds" : "FAILED") << " for n <= " << extension_precision;
    return {9, "p-adic tower and the extension of the appendix function", pass, d.str()};
}

/// 10. Generic engine on 200 seeded random algebras (n <= 4, 1-2 ops of
/// arity <= 2, a third of them built over a verified group operation):
/// congruence enumeration matches brute force, syntactic congruences are
/// coarsest-saturating, the decompositions reproduce direct preimages under
/// the stated preservation hypotheses, and on group-op algebras the
/// congruence/lattice/boolean conditions coincide and stable orders
/// collapse.
inline CriterionResult criterion_10(std::ostream* progress = nullptr) {
    std::mt19937 rng(0xA15EBA11);
    long failures = 0, group_algebras = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<unsigned> nd(2, 4), opsd(1, 2), ard(1, 2), coin(0, 2);
        unsigned n = nd(rng);
        std::uniform_int_distribution<unsigned> el(0, n - 1);
        std::vector<finalg::Operation> ops;
        bool with_group = coin(rng) == 0;
        if (with_group) {
            finalg::Operation g{2, {}};
            g.table.resize(std::size_t(n) * n);
            bool klein = n == 4 && coin(rng) == 0;
            for (unsigned x = 0; x < n; ++x)
                for (unsigned y = 0; y < n; ++y)
                    g.table[std::size_t(x) * n + y] = klein ? (x ^ y) : (x + y) % n;
            ops.push_back(std::move(g));
        }
        unsigned extra = with_group ? opsd(rng) - 1 : opsd(rng);
        for (unsigned i = 0; i < extra; ++i) {
            unsigned ar = ard(rng);
            std::size_t total = 1;
            for (unsigned j = 0; j < ar; ++j) total *= n;
            finalg::Operation op{ar, {}};
            for (std::size_t j = 0; j < total; ++j) op.table.push_back(el(rng));
            ops.push_back(std::move(op));
        }
        finalg::FiniteAlgebra A(n, std::move(ops));

        // (a) congruence enumeration vs brute-force partition filter
        std::vector<finalg::Partition> parts;
        detail::enumerate_partitions(n, parts);
        std::set<finalg::Partition> brute;
        for (const auto& p : parts)
            if (detail::compatible_with_all_ops(A, p)) brute.insert(p);
        auto cong = finalg::all_congruences(A);
        if (std::set<finalg::Partition>(cong.begin(), cong.end()) != brute) ++failures;

        // (b) syntactic congruence is the coarsest saturating one
        for (finalg::Subset L = 0; L < (finalg::Subset(1) << n); ++L) {
            finalg::Partition syn = finalg::syntactic_congruence(A, L);
            if (!syn.saturates(L, n)) ++failures;
            for (const auto& c : cong)
                if (c.saturates(L, n) && !c.refines(syn)) ++failures;
        }

        // (c) the decompositions equal direct preimages under preservation
        std::vector<finalg::UnaryTable> fs;
        for (int i = 0; i < 10; ++i) {
            finalg::UnaryTable f(n);
            for (unsigned x = 0; x < n; ++x) f[x] = el(rng);
            fs.push_back(std::move(f));
        }
        for (const auto& f : fs)
            for (finalg::Subset L = 0; L < (finalg::Subset(1) << n); ++L) {
                finalg::Subset direct = finalg::preimage(f, L);
                if (finalg::preserves(A, f, finalg::syntactic_preorder(A, L)) &&
                    finalg::decompose_preimage_lattice(A, f, L) != direct)
                    ++failures;
                if (finalg::preserves(A, f, finalg::syntactic_congruence(A, L)) &&
                    finalg::decompose_preimage_boolean(A, f, L) != direct)
                    ++failures;
            }

        // (d) group-operation collapse
        if (with_group) {
            ++group_algebras;
            auto orders = finalg::stable_orders_of_group(A, 0);
            if (orders != std::vector<finalg::BinRel>{finalg::BinRel::equality(n)}) ++failures;

            std::vector<std::vector<finalg::Subset>> lat(std::size_t(1) << n),
                boo(std::size_t(1) << n);
            for (finalg::Subset L = 0; L < (finalg::Subset(1) << n); ++L) {
                lat[L] = finalg::lattice_closure(A, L);
                boo[L] = finalg::boolean_closure(A, L);
            }
            for (int i = 0; i < 50; ++i) {
                finalg::UnaryTable f(n);
                for (unsigned x = 0; x < n; ++x) f[x] = el(rng);
                bool iii = finalg::preserves_all_congruences(A, f);
                bool v = true, vi = true;
                for (finalg::Subset L = 0; L < (finalg::Subset(1) << n); ++L) {
                    finalg::Subset pre = finalg::preimage(f, L);
                    v = v && std::binary_search(lat[L].begin(), lat[L].end(), pre);
                    vi = vi && std::binary_search(boo[L].begin(), boo[L].end(), pre);
                }
                if (iii != v || v != vi) ++failures;
            }
        }
    }
    detail::note(progress, std::to_string(group_algebras) + " of 200 algebras carried a group op");
    return {10, "generic engine on 200 random algebras", failures == 0,
            std::to_string(failures) + " failures (" + std::to_string(group_algebras) +
                " group-op algebras)"};
}

/// 11. The regular-vs-recognizable counterexample: refuted for the regular 6+10N inside Z with f = x^2, matched after
/// replacing the base with the recognizable 6+10Z.
inline CriterionResult criterion_11() {
    auto rep = latgen::regular_counterexample_check(200);
    bool pass = rep.refuted && rep.control_recognizable_matched && rep.control_identity_matched;
    std::ostringstream d;
    d << (rep.refuted ? "refuted with witness " + rep.witness.str() : "NOT refuted")
      << "; recognizable control " << (rep.control_recognizable_matched ? "matched" : "FAILED")
      << "; identity control " << (rep.control_identity_matched ? "matched" : "FAILED");
    return {11, "regular-vs-recognizable counterexample", pass, d.str()};
}

inline std::vector<CriterionResult> run_all(std::ostream* progress = nullptr,
                                            unsigned extension_precision = 16) {
    std::vector<CriterionResult> out;
    auto run = [&](CriterionResult r) {
        if (progress)
            (*progress) << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
                        << " — " << r.details << std::endl;
        out.push_back(std::move(r));
    };
    run(criterion_1());
    run(criterion_2());
    run(criterion_3(progress));
    run(criterion_4());
    run(criterion_5());
    run(criterion_6(progress));
    run(criterion_7(progress));
    run(criterion_8());
    run(criterion_9(progress, extension_precision));
    run(criterion_10(progress));
    run(criterion_11());
    return out;
}

}  // namespace conglat::suite
