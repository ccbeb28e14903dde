#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mnp/finite_field.hpp"
#include "mnp/rational.hpp"

namespace mnp {

/// Truncated series sum [r_q] p^q over exact rational exponents q, known
/// modulo terms of exponent >= prec. Terms are strictly increasing in
/// exponent, all coefficients nonzero Teichmuller digits (elements of the
/// ambient residue field), and every exponent is < prec. The empty term list
/// is the zero-at-this-precision series.
class MNSeries {
public:
    struct Term {
        Rat exp;
        FFElem coeff;
    };

    MNSeries() = default;

    static MNSeries zero(const Field* f, Rat prec);
    /// Single Teichmuller term [c] p^e (c != 0); drops to zero if e >= prec.
    static MNSeries monomial(const FFElem& c, const Rat& e, const Rat& prec);
    /// Trusted constructor: terms already canonical (ascending, nonzero,
    /// below prec, coefficients in f).
    static MNSeries from_sorted(const Field* f, std::vector<Term> terms, Rat prec);

    /// Canonicalize an arbitrary multiset of (exponent, digit) pairs at the
    /// given precision. Terms in the same exponent class mod 1 are summed as
    /// Teichmuller lifts in a Galois ring sized to the precision window and
    /// re-expanded into digits, which is exactly how carries propagate
    /// (a carry moves an exponent up by 1). All coefficients must live in f.
    static MNSeries normalize(const Field* f, const std::vector<std::pair<Rat, FFElem>>& raw,
                              const Rat& prec);

    /// Canonical expansion of num/den in Q_p at the given precision.
    static MNSeries from_rational(const Int& num, const Int& den, long p, const Rat& prec);

    const Field* field_ptr() const { return f_; }
    long p() const { return f_->p; }
    const Rat& prec() const { return prec_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero_at_precision() const { return terms_.empty(); }

    /// min Supp, or nullopt when the support is empty at this precision.
    std::optional<Rat> valuation() const;
    /// Valuation lower bound: min Supp if nonempty, else prec.
    Rat vlb() const;

    /// Coefficient at exponent s (zero element if absent). Requires s < prec.
    FFElem coeff(const Rat& s) const;

private:
    const Field* f_ = nullptr;
    Rat prec_;
    std::vector<Term> terms_;
};

/// Re-embeds every coefficient into the given ambient field (same p).
MNSeries re_ambient(const MNSeries& a, const Field* target);
/// Brings two series into a common ambient field F_{p^lcm}.
std::pair<MNSeries, MNSeries> unify(const MNSeries& a, const MNSeries& b);

MNSeries mn_add(const MNSeries& a, const MNSeries& b);
MNSeries mn_neg(const MNSeries& a);
MNSeries mn_sub(const MNSeries& a, const MNSeries& b);
MNSeries mn_mul(const MNSeries& a, const MNSeries& b);
/// Exact multiplication by the monomial [c] p^e; precision shifts by e.
MNSeries mn_mul_monomial(const MNSeries& a, const FFElem& c, const Rat& e);
/// Exact multiplication by a nonzero integer.
MNSeries mn_scale_int(const MNSeries& a, const Int& m);
/// Geometric-series inverse, output precision prec(a) - 2 v(a).
MNSeries mn_invert(const MNSeries& a);
MNSeries mn_pow(const MNSeries& a, const Int& e);

/// Coefficientwise p-th power.
MNSeries mn_frobenius(const MNSeries& a);
/// Coefficientwise p^t-th power (the residue Galois action).
MNSeries mn_galois_action(const MNSeries& a, long t);

/// Group homomorphism from a finite subgroup of Q/Z into the roots of unity,
/// given by its values on a finite generating set. The generated subgroup is
/// (1/D)Z/Z with D the lcm of the generator orders, and the assignments
/// determine the value eta at 1/D uniquely; construction fails if they are
/// not consistent with a homomorphism. An empty assignment list denotes the
/// trivial homomorphism, defined (and equal to 1) on all of Q/Z.
class Character {
public:
    Character(); // trivial character
    Character(long p, const std::vector<std::pair<Rat, FFElem>>& assignments);

    long modulus() const { return D_; }
    bool trivial() const { return everywhere_trivial_; }
    const FFElem& generator_value() const { return eta_; }
    /// Value at q mod 1; throws UnassignedClass if q is outside (1/D)Z/Z.
    FFElem at(const Rat& q) const;

private:
    long D_ = 1;
    bool everywhere_trivial_ = false;
    FFElem eta_;
};

/// Multiplies the coefficient at each exponent q by xi(q mod 1).
MNSeries mn_character(const MNSeries& a, const Character& xi);

/// True when a and b agree term-by-term below min(prec a, prec b).
bool series_agree(const MNSeries& a, const MNSeries& b);

std::string series_str(const MNSeries& a);

} // namespace mnp
