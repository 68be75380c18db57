#pragma once

#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "conglat/exactint.hpp"
#include "conglat/exotic.hpp"
#include "conglat/latgen.hpp"

/**
 * Fixed-precision p-adic integers.  An element of Z_p exists here only as a
 * truncation to n base-p digits, i.e. a residue mod p^n; "the" p-adic value
 * is the tower of compatible approximations across precisions.  Truncation
 * never fabricates divisibility facts: a valuation that the precision cannot
 * resolve is reported as such, not defaulted.
 */
namespace conglat::padic {

class PAdicApprox {
public:
    PAdicApprox(unsigned p, unsigned n, const BigInt& value)
        : p_(p), n_(n), pn_(std::make_shared<const BigInt>(pow_u(BigInt(p), n))) {
        if (!exactint::is_prime(p)) throw std::domain_error("PAdicApprox: p must be prime");
        if (n < 1) throw std::domain_error("PAdicApprox: precision must be >= 1");
        value_ = floor_mod(value, *pn_);
        if (mpz_fits_ulong_p(pn_->backend().data())) small_pn_ = mpz_get_ui(pn_->backend().data());
    }

    unsigned prime() const { return p_; }
    unsigned precision() const { return n_; }
    const BigInt& value() const { return value_; }
    const BigInt& modulus() const { return *pn_; }

    friend PAdicApprox operator+(const PAdicApprox& x, const PAdicApprox& y) {
        x.check_compatible(y);
        if (x.small_pn_) {
            unsigned long v = x.small_value() + y.small_value();
            if (v >= x.small_pn_) v -= x.small_pn_;
            return PAdicApprox(x, BigInt(v));
        }
        BigInt v = x.value_ + y.value_;
        if (v >= *x.pn_) v -= *x.pn_;
        return PAdicApprox(x, std::move(v));
    }
    friend PAdicApprox operator-(const PAdicApprox& x, const PAdicApprox& y) {
        x.check_compatible(y);
        if (x.small_pn_) {
            unsigned long a = x.small_value(), b = y.small_value();
            return PAdicApprox(x, BigInt(a >= b ? a - b : a + x.small_pn_ - b));
        }
        BigInt v = x.value_ - y.value_;
        if (v < 0) v += *x.pn_;
        return PAdicApprox(x, std::move(v));
    }
    friend PAdicApprox operator*(const PAdicApprox& x, const PAdicApprox& y) {
        x.check_compatible(y);
        if (x.small_pn_)
            return PAdicApprox(
                x, BigInt((unsigned long)((unsigned __int128)x.small_value() * y.small_value() %
                                          x.small_pn_)));
        return PAdicApprox(x, x.value_ * y.value_ % *x.pn_);
    }
    friend bool operator==(const PAdicApprox& x, const PAdicApprox& y) {
        return x.p_ == y.p_ && x.n_ == y.n_ && x.value_ == y.value_;
    }

    /// Projection to a smaller precision m <= n (the inverse-system map).
    PAdicApprox reduce(unsigned m) const {
        if (m < 1 || m > n_) throw std::domain_error("PAdicApprox::reduce: need 1 <= m <= n");
        if (m == n_) return *this;
        if (small_pn_) {
            unsigned long pm = 1;
            for (unsigned i = 0; i < m; ++i) pm *= p_;
            return PAdicApprox(p_, m, BigInt(small_value() % pm), pm);
        }
        return PAdicApprox(p_, m, value_);
    }

    /// Valuation: the index of the first nonzero digit.  A zero residue only
    /// shows the valuation is >= n, which `exact == false` reports.
    struct Valuation {
        bool exact;
        unsigned v;  // exact value, or the precision bound when !exact
    };
    Valuation valuation() const {
        if (value_ == 0) return {false, n_};
        BigInt x = value_;
        unsigned v = 0;
        while (x % p_ == 0) { x /= p_; ++v; }
        return {true, v};
    }

    /// Multiplicative inverse mod p^n; defined exactly for units (valuation
    /// zero).
    PAdicApprox inverse() const {
        auto val = valuation();
        if (!val.exact || val.v != 0) {
            std::ostringstream msg;
            msg << "PAdicApprox::inverse: not a unit (valuation "
                << (val.exact ? std::to_string(val.v) : ">= " + std::to_string(val.v)) << ")";
            throw std::domain_error(msg.str());
        }
        BigInt inv;
        if (mpz_invert(inv.backend().data(), value_.backend().data(), pn_->backend().data()) == 0)
            throw std::logic_error("PAdicApprox::inverse: unit not invertible");
        return PAdicApprox(*this, std::move(inv));
    }

    /// Digits, least significant first, matching left-to-right carries.
    std::string digits() const {
        std::ostringstream out;
        BigInt x = value_;
        for (unsigned i = 0; i < n_; ++i) {
            if (i) out << (p_ > 10 ? "." : "");
            out << x % p_;
            x /= p_;
        }
        return out.str();
    }

private:
    // Internal: result sharing the modulus of an existing element; `v`
    // must already be reduced.
    PAdicApprox(const PAdicApprox& like, BigInt v)
        : p_(like.p_), n_(like.n_), pn_(like.pn_), small_pn_(like.small_pn_),
          value_(std::move(v)) {}

    // Internal: fully specified, skips revalidation.
    PAdicApprox(unsigned p, unsigned n, BigInt v, unsigned long small_pn)
        : p_(p), n_(n), pn_(std::make_shared<const BigInt>(small_pn)), small_pn_(small_pn),
          value_(std::move(v)) {}

    unsigned long small_value() const { return mpz_get_ui(value_.backend().data()); }

    void check_compatible(const PAdicApprox& other) const {
        if (p_ != other.p_ || n_ != other.n_)
            throw std::domain_error("PAdicApprox: mismatched (p, n)");
    }

    unsigned p_, n_;
    std::shared_ptr<const BigInt> pn_;  // cached p^n, shared across results
    unsigned long small_pn_ = 0;        // p^n when it fits a machine word, else 0
    BigInt value_;
};

enum class Divides { yes, no, inconclusive };

/// Divisibility in Z_p at finite precision.  Units divide everything, so
/// x | y reduces to comparing valuations; unresolvable valuations propagate
/// to a tagged inconclusive result instead of a silent default.
inline Divides divides(const PAdicApprox& x, const PAdicApprox& y) {
    if (x.prime() != y.prime() || x.precision() != y.precision())
        throw std::domain_error("divides: mismatched (p, n)");
    auto vx = x.valuation(), vy = y.valuation();
    if (vx.exact && vy.exact) return vx.v <= vy.v ? Divides::yes : Divides::no;
    if (vx.exact) return Divides::yes;   // v(y) >= n > v(x)
    if (vy.exact) return Divides::no;    // v(x) >= n > v(y)
    return Divides::inconclusive;
}

struct CpZpViolation {
    BigInt x, y;
};

/// Divisibility-based congruence preservation on Z_p truncated to p^n:
/// checks (x - y) | (f(x) - f(y)) over all residue pairs of a total table.
/// The difference x - y of distinct residues always has resolvable
/// valuation, so the verdict is never inconclusive.
inline std::optional<CpZpViolation> check_cp_zp(unsigned p, unsigned n,
                                                std::span<const BigInt> table) {
    BigInt pn = pow_u(BigInt(p), n);
    if (BigInt(table.size()) != pn)
        throw std::domain_error("check_cp_zp: table must be total on residues mod p^n");
    for (std::size_t x = 0; x < table.size(); ++x)
        for (std::size_t y = 0; y < x; ++y) {
            PAdicApprox diff_arg(p, n, BigInt(x) - BigInt(y));
            PAdicApprox diff_val(p, n, table[x] - table[y]);
            if (divides(diff_arg, diff_val) == Divides::no)
                return CpZpViolation{BigInt(x), BigInt(y)};
        }
    return std::nullopt;
}

/// The unique congruence-preserving extension f^ of a certified table,
/// evaluated at x: picks a window representative x_n == x (mod p^n) and
/// returns f(x_n) mod p^n.  Well-defined because p^n | (x - x_n) forces
/// p^n | (f(x) - f(x_n)).
inline PAdicApprox cp_extend(const exotic::CPWitnessTable& f, const PAdicApprox& x) {
    const natint::FnTable& t = f.table;
    if (t.domain != natint::Domain::N)
        throw std::domain_error("cp_extend: table must be over N");
    if (!f.certificate.pairwise_divisibility)
        throw std::domain_error("cp_extend: table lacks a pairwise-divisibility certificate");
    BigInt rep = x.value();
    if (rep < t.lo) rep += ((t.lo - rep + x.modulus() - 1) / x.modulus()) * x.modulus();
    if (rep > t.hi)
        throw std::domain_error("cp_extend: no representative of " + x.value().str() + " mod " +
                                x.modulus().str() + " in window; need hi >= " + rep.str());
    return PAdicApprox(x.prime(), x.precision(), t(rep));
}

/// A recognizable subset of Z_p: F + p^n Z_p for F a set of residues.
class RecSetZp {
public:
    RecSetZp(unsigned p, unsigned n, std::vector<bool> F)
        : p_(p), n_(n), F_(std::move(F)) {
        if (!exactint::is_prime(p)) throw std::domain_error("RecSetZp: p must be prime");
        if (n < 1) throw std::domain_error("RecSetZp: precision must be >= 1");
        BigInt pn = pow_u(BigInt(p), n);
        if (pn > (1u << 22)) throw std::domain_error("RecSetZp: p^n too large for a bitset");
        if (BigInt(F_.size()) != pn) throw std::domain_error("RecSetZp: bitset must have p^n bits");
    }

    static RecSetZp from_elements(unsigned p, unsigned n, const std::vector<BigInt>& elems) {
        BigInt pn = pow_u(BigInt(p), n);
        std::vector<bool> F(to_ulong(pn), false);
        for (const auto& e : elems) F[to_ulong(floor_mod(e, pn))] = true;
        return RecSetZp(p, n, std::move(F));
    }

    unsigned prime() const { return p_; }
    unsigned precision() const { return n_; }
    const std::vector<bool>& bits() const { return F_; }
    BigInt modulus() const { return pow_u(BigInt(p_), n_); }

    bool member(const BigInt& x) const { return F_[to_ulong(floor_mod(x, modulus()))]; }
    bool member(const PAdicApprox& x) const {
        if (x.prime() != p_ || x.precision() < n_)
            throw std::domain_error("RecSetZp::member: approximation precision too low");
        return member(x.value());
    }

    /// Least precision representing the same set.
    RecSetZp normalized() const {
        unsigned n = n_;
        std::vector<bool> F = F_;
        while (n > 1) {
            std::size_t block = F.size() / p_;
            bool collapsible = true;
            for (std::size_t r = 0; r < block && collapsible; ++r)
                for (unsigned j = 1; j < p_; ++j)
                    if (F[r + j * block] != F[r]) { collapsible = false; break; }
            if (!collapsible) break;
            F.resize(block);
            --n;
        }
        return RecSetZp(p_, n, std::move(F));
    }

    RecSetZp complement() const {
        std::vector<bool> F(F_.size());
        for (std::size_t i = 0; i < F_.size(); ++i) F[i] = !F_[i];
        return RecSetZp(p_, n_, std::move(F));
    }
    friend RecSetZp set_union(const RecSetZp& a, const RecSetZp& b) {
        return pointwise(a, b, [](bool x, bool y) { return x || y; });
    }
    friend RecSetZp set_inter(const RecSetZp& a, const RecSetZp& b) {
        return pointwise(a, b, [](bool x, bool y) { return x && y; });
    }
    friend bool set_equal(const RecSetZp& a, const RecSetZp& b) {
        RecSetZp na = a.normalized(), nb = b.normalized();
        return na.p_ == nb.p_ && na.n_ == nb.n_ && na.F_ == nb.F_;
    }

    /// {x : x + t in L}.
    RecSetZp translate_preimage(const BigInt& t) const {
        BigInt pn = modulus();
        std::vector<bool> F(F_.size());
        for (std::size_t r = 0; r < F_.size(); ++r) F[r] = F_[to_ulong(floor_mod(r + t, pn))];
        return RecSetZp(p_, n_, std::move(F));
    }

    /// {x : c x in L}.  A unit c permutes residues; a factor p^v drops the
    /// resolvable precision to n - v.
    RecSetZp homothety_preimage(const BigInt& c) const {
        if (c == 0) {
            std::vector<bool> F(p_, F_[0]);
            return RecSetZp(p_, 1, std::move(F)).normalized();
        }
        unsigned v = 0;
        BigInt cc = c;
        while (cc % p_ == 0 && v < n_) { cc /= p_; ++v; }
        if (v >= n_) {
            std::vector<bool> F(p_, F_[0]);
            return RecSetZp(p_, 1, std::move(F)).normalized();
        }
        unsigned nn = n_ - v;
        BigInt pn = modulus();
        BigInt pnn = pow_u(BigInt(p_), nn);
        std::vector<bool> F(to_ulong(pnn));
        for (BigInt r = 0; r < pnn; ++r) F[to_ulong(r)] = F_[to_ulong(floor_mod(c * r, pn))];
        return RecSetZp(p_, nn, std::move(F)).normalized();
    }

private:
    template <typename Op>
    static RecSetZp pointwise(const RecSetZp& a, const RecSetZp& b, Op op) {
        if (a.p_ != b.p_ || a.n_ != b.n_)
            throw std::domain_error("RecSetZp: mismatched (p, n)");
        std::vector<bool> F(a.F_.size());
        for (std::size_t i = 0; i < F.size(); ++i) F[i] = op(a.F_[i], b.F_[i]);
        return RecSetZp(a.p_, a.n_, std::move(F));
    }

    unsigned p_, n_;
    std::vector<bool> F_;
};

/// The lattice L(L) or Boolean algebra B(L) of a recognizable subset of Z_p
/// under the ring signature, through the generic class-bitmask engine: the
/// syntactic classes are the residues modulo the normalized p^n and the
/// generators are the preimages under the affine maps x -> cx + t with c, t
/// ranging over the residues.
inline latgen::GeneratedFamily generate_zp(const RecSetZp& base, latgen::ClosureKind kind,
                                           unsigned max_index = 6) {
    RecSetZp L = base.normalized();
    BigInt pn = L.modulus();
    if (pn > 64 || L.precision() > max_index)
        throw std::domain_error("generate_zp: modulus too large for the mask engine");
    unsigned k = unsigned(to_ulong(pn));
    latgen::detail::ClassesZp classes{L.prime(), L.precision(), k};
    std::vector<latgen::Duo> gens;
    std::vector<latgen::Mask> seed_masks;
    for (unsigned c = 0; c < k; ++c)
        for (unsigned t = 0; t < k; ++t) {
            latgen::Mask m = 0;
            for (unsigned r = 0; r < k; ++r)
                if (L.member(BigInt(c) * r + t)) m |= latgen::Mask{1} << r;
            gens.push_back(latgen::Duo{c, t});
            seed_masks.push_back(m);
        }
    auto closure = latgen::detail::close_masks(seed_masks, kind, k, std::size_t(1) << 22);
    return latgen::GeneratedFamily(classes, latgen::Signature::add_mul, kind, std::move(gens),
                                   std::move(seed_masks), std::move(closure));
}

inline RecSetZp member_as_recset_zp(const latgen::GeneratedFamily& fam, std::size_t i) {
    const auto* cp = std::get_if<latgen::detail::ClassesZp>(&fam.classes());
    if (!cp) throw std::domain_error("member_as_recset_zp: family is not over Z_p");
    std::vector<bool> F(cp->pn);
    for (unsigned r = 0; r < cp->pn; ++r) F[r] = (fam.members()[i] >> r) & 1u;
    return RecSetZp(cp->p, cp->prec, std::move(F));
}

}  // namespace conglat::padic
