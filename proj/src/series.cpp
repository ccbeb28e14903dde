#include "mnp/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mnp/errors.hpp"
#include "mnp/galois_ring.hpp"
#include "mnp/util.hpp"

namespace mnp {

MNSeries MNSeries::zero(const Field* f, Rat prec) {
    MNSeries s;
    s.f_ = f;
    s.prec_ = std::move(prec);
    return s;
}

MNSeries MNSeries::monomial(const FFElem& c, const Rat& e, const Rat& prec) {
    MNSeries s = zero(c.f, prec);
    if (!c.is_zero() && e < prec) s.terms_.push_back({e, c});
    return s;
}

MNSeries MNSeries::from_sorted(const Field* f, std::vector<Term> terms, Rat prec) {
    MNSeries s = zero(f, std::move(prec));
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coeff.f != f) throw FieldMismatch("term coefficient outside ambient field");
        if (terms[i].coeff.is_zero()) throw InternalError("zero coefficient in canonical series");
        if (terms[i].exp >= s.prec_) throw InternalError("term at or beyond precision");
        if (i && !(terms[i - 1].exp < terms[i].exp))
            throw InternalError("term exponents not strictly increasing");
    }
    s.terms_ = std::move(terms);
    return s;
}

MNSeries MNSeries::normalize(const Field* f, const std::vector<std::pair<Rat, FFElem>>& raw,
                             const Rat& prec) {
    // bucket by exponent class mod 1; carries stay inside a class
    std::map<Rat, std::vector<std::pair<Int, FFElem>>> classes;
    for (const auto& [e, c] : raw) {
        if (c.f != f) throw FieldMismatch("raw term coefficient outside ambient field");
        if (c.is_zero()) continue;
        classes[rat_frac(e)].emplace_back(rat_floor(e), c);
    }
    std::vector<Term> out;
    for (auto& [frac, members] : classes) {
        Int n_min = members[0].first;
        for (const auto& m : members) n_min = std::min(n_min, m.first);
        Rat window = prec - frac - Rat(n_min);
        Int digits = rat_ceil(window);
        if (digits <= 0) continue;
        int D = static_cast<int>(to_long(digits));
        GRElem acc = gr_zero(f, D);
        for (const auto& [n, c] : members) {
            GRElem t = teichmuller_lift(c, D);
            acc = gr_add(acc, gr_shift(t, to_long(Int(n - n_min))));
        }
        std::vector<FFElem> ds = teichmuller_decompose(acc);
        for (int i = 0; i < D; ++i) {
            if (ds[i].is_zero()) continue;
            out.push_back({frac + Rat(n_min) + Rat(i), ds[i]});
        }
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    return from_sorted(f, std::move(out), prec);
}

MNSeries MNSeries::from_rational(const Int& num, const Int& den, long p, const Rat& prec) {
    if (den == 0) throw DivisionByZero("from_rational with zero denominator");
    const Field* f = field(p, 1);
    if (num == 0) return zero(f, prec);
    Int nn = num, dd = den;
    long v1 = int_vp(nn, p), v2 = int_vp(dd, p);
    for (long i = 0; i < v1; ++i) mpz_divexact_ui(nn.get_mpz_t(), nn.get_mpz_t(), p);
    for (long i = 0; i < v2; ++i) mpz_divexact_ui(dd.get_mpz_t(), dd.get_mpz_t(), p);
    long v = v1 - v2;
    Int digits = rat_ceil(prec - Rat(v));
    if (digits <= 0) return zero(f, prec);
    int D = static_cast<int>(to_long(digits));
    Int pn = int_pow(p, D);
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), dd.get_mpz_t(), pn.get_mpz_t()) == 0)
        throw InternalError("denominator not invertible");
    Int u = ((nn * dinv) % pn + pn) % pn;
    std::vector<FFElem> ds = teichmuller_decompose(gr_from_int(f, D, u));
    std::vector<Term> out;
    for (int i = 0; i < D; ++i)
        if (!ds[i].is_zero()) out.push_back({Rat(v) + Rat(i), ds[i]});
    return from_sorted(f, std::move(out), prec);
}

std::optional<Rat> MNSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exp;
}

Rat MNSeries::vlb() const { return terms_.empty() ? prec_ : terms_.front().exp; }

FFElem MNSeries::coeff(const Rat& s) const {
    if (s >= prec_)
        throw InsufficientPrecision("coefficient at " + rat_str(s) + " requested, precision " +
                                    rat_str(prec_));
    for (const Term& t : terms_) {
        if (t.exp == s) return t.coeff;
        if (t.exp > s) break;
    }
    return ff_zero(f_);
}

MNSeries re_ambient(const MNSeries& a, const Field* target) {
    if (a.field_ptr() == target) return a;
    std::vector<MNSeries::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& t : a.terms()) terms.push_back({t.exp, embed(t.coeff, target)});
    return MNSeries::from_sorted(target, std::move(terms), a.prec());
}

std::pair<MNSeries, MNSeries> unify(const MNSeries& a, const MNSeries& b) {
    if (a.p() != b.p()) throw PrimeMismatch("series over different primes");
    if (a.field_ptr() == b.field_ptr()) return {a, b};
    int K = lcm_long(a.field_ptr()->k, b.field_ptr()->k);
    const Field* f = field(a.p(), K);
    return {re_ambient(a, f), re_ambient(b, f)};
}

MNSeries mn_add(const MNSeries& a0, const MNSeries& b0) {
    auto [a, b] = unify(a0, b0);
    Rat prec = std::min(a.prec(), b.prec());
    std::vector<std::pair<Rat, FFElem>> raw;
    raw.reserve(a.terms().size() + b.terms().size());
    for (const auto& t : a.terms()) raw.emplace_back(t.exp, t.coeff);
    for (const auto& t : b.terms()) raw.emplace_back(t.exp, t.coeff);
    return MNSeries::normalize(a.field_ptr(), raw, prec);
}

MNSeries mn_neg(const MNSeries& a) {
    // -[r] = [-r] termwise for odd p, so no carries are needed
    std::vector<MNSeries::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& t : a.terms()) terms.push_back({t.exp, ff_neg(t.coeff)});
    return MNSeries::from_sorted(a.field_ptr(), std::move(terms), a.prec());
}

MNSeries mn_sub(const MNSeries& a, const MNSeries& b) { return mn_add(a, mn_neg(b)); }

MNSeries mn_mul(const MNSeries& a0, const MNSeries& b0) {
    auto [a, b] = unify(a0, b0);
    Rat pa = a.prec() + b.vlb();
    Rat pb = b.prec() + a.vlb();
    Rat prec = std::min(pa, pb);
    if (a.terms().empty() || b.terms().empty()) return MNSeries::zero(a.field_ptr(), prec);
    std::vector<std::pair<Rat, FFElem>> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) raw.emplace_back(s.exp + t.exp, ff_mul(s.coeff, t.coeff));
    return MNSeries::normalize(a.field_ptr(), raw, prec);
}

MNSeries mn_mul_monomial(const MNSeries& a, const FFElem& c0, const Rat& e) {
    FFElem c = c0;
    const Field* f = a.field_ptr();
    if (c.f != f) {
        int K = lcm_long(f->k, c.f->k);
        const Field* g = field(a.p(), K);
        if (g != f) return mn_mul_monomial(re_ambient(a, g), embed(c, g), e);
        c = embed(c, f);
    }
    if (c.is_zero()) throw DivisionByZero("monomial multiplication by zero digit");
    std::vector<MNSeries::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& t : a.terms()) terms.push_back({t.exp + e, ff_mul(t.coeff, c)});
    return MNSeries::from_sorted(f, std::move(terms), a.prec() + e);
}

MNSeries mn_scale_int(const MNSeries& a, const Int& m) {
    if (m == 0) throw InternalError("mn_scale_int by zero");
    long t = int_vp(m, a.p());
    Rat mult_prec = a.prec() - a.vlb() + Rat(t) + 1;
    return mn_mul(a, MNSeries::from_rational(m, Int(1), a.p(), mult_prec));
}

MNSeries mn_invert(const MNSeries& a) {
    if (a.terms().empty()) throw ZeroDivisor("inverse of a series with empty support");
    Rat v = *a.valuation();
    FFElem lead = a.terms().front().coeff;
    Rat out_prec = a.prec() - 2 * v;
    // u = [lead^-1] p^-v * a = 1 + eps with v(eps) > 0
    MNSeries u = mn_mul_monomial(a, ff_inv(lead), -v);
    MNSeries one = MNSeries::monomial(ff_one(u.field_ptr()), Rat(0), u.prec());
    MNSeries eps = mn_sub(u, one);
    Rat rel = out_prec + v; // relative precision of the geometric sum
    MNSeries sum = MNSeries::monomial(ff_one(u.field_ptr()), Rat(0), rel);
    if (!eps.terms().empty()) {
        MNSeries neg_eps = mn_neg(eps);
        MNSeries term = sum;
        Rat delta = *eps.valuation();
        for (Rat reached = delta; ; reached += delta) {
            term = mn_mul(term, neg_eps);
            if (term.terms().empty()) break;
            sum = mn_add(sum, term);
            if (reached >= rel) break;
        }
    }
    return mn_mul_monomial(sum, ff_inv(lead), -v);
}

MNSeries mn_pow(const MNSeries& a, const Int& e) {
    if (e < 0) throw InternalError("negative exponent in mn_pow");
    if (e == 0) return MNSeries::monomial(ff_one(a.field_ptr()), Rat(0), a.prec());
    long bits = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
    MNSeries result = a;
    for (long bit = bits - 2; bit >= 0; --bit) {
        result = mn_mul(result, result);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result = mn_mul(result, a);
    }
    return result;
}

MNSeries mn_frobenius(const MNSeries& a) { return mn_galois_action(a, 1); }

MNSeries mn_galois_action(const MNSeries& a, long t) {
    std::vector<MNSeries::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& tm : a.terms()) terms.push_back({tm.exp, ff_frobenius(tm.coeff, t)});
    return MNSeries::from_sorted(a.field_ptr(), std::move(terms), a.prec());
}

Character::Character() : D_(1), everywhere_trivial_(true) { eta_ = ff_one(field(3, 1)); }

Character::Character(long p, const std::vector<std::pair<Rat, FFElem>>& assignments) {
    if (assignments.empty()) {
        D_ = 1;
        everywhere_trivial_ = true;
        eta_ = ff_one(field(p, 1));
        return;
    }
    long D = 1;
    for (const auto& [q, val] : assignments) {
        if (val.f->p != p) throw PrimeMismatch("character value over a different prime");
        if (val.is_zero()) throw InconsistentCharacter("character value must be a unit");
        D = lcm_long(D, to_long(rat_frac(q).get_den()));
    }
    // common field for the values
    int K = 1;
    for (const auto& [q, val] : assignments) {
        (void)q;
        K = static_cast<int>(lcm_long(K, val.f->k));
    }
    const Field* f = field(p, K);

    // express 1/D as an integer combination of the assigned classes
    Int g = D;
    std::vector<Int> coeff(assignments.size(), Int(0));
    std::vector<Int> weights;
    for (const auto& [q, val] : assignments) {
        (void)val;
        Rat r = rat_frac(q);
        weights.push_back(Int(r.get_num() * (D / to_long(Int(r.get_den())))));
    }
    // iterative extended gcd of (D, w_0, w_1, ...) tracking the w-coefficients
    for (size_t i = 0; i < weights.size(); ++i) {
        Int s, t, gg;
        mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                   weights[i].get_mpz_t());
        for (size_t j = 0; j < i; ++j) coeff[j] *= s;
        coeff[i] = t;
        g = gg;
    }
    if (g != 1) throw InternalError("character classes do not generate expected subgroup");
    FFElem eta = ff_one(f);
    for (size_t i = 0; i < assignments.size(); ++i) {
        FFElem v = embed(assignments[i].second, f);
        Int n = coeff[i] % D;
        if (n < 0) n += D;
        eta = ff_mul(eta, ff_pow(v, n));
    }
    // eta determines the homomorphism; the given values must match it
    for (const auto& [q, val] : assignments) {
        Rat r = rat_frac(q);
        Int e = Int(r.get_num() * (D / to_long(Int(r.get_den())))) % D;
        if (e < 0) e += D;
        if (!ff_eq(ff_pow(eta, e), embed(val, f)))
            throw InconsistentCharacter("assignments do not extend to a homomorphism");
    }
    D_ = D;
    eta_ = eta;
}

FFElem Character::at(const Rat& q) const {
    if (everywhere_trivial_) return eta_;
    Rat r = rat_frac(q);
    Rat scaled = r * Rat(D_);
    if (!rat_is_integer(scaled))
        throw UnassignedClass("class " + rat_str(r) + " outside the character domain");
    Int e = scaled.get_num() % D_;
    if (e < 0) e += D_;
    return ff_pow(eta_, e);
}

MNSeries mn_character(const MNSeries& a, const Character& xi) {
    if (xi.trivial()) return a;
    const Field* f = a.field_ptr();
    if (xi.generator_value().f->p != f->p)
        throw PrimeMismatch("character over a different prime");
    int K = static_cast<int>(lcm_long(f->k, xi.generator_value().f->k));
    const Field* g = field(f->p, K);
    MNSeries s = re_ambient(a, g);
    std::vector<MNSeries::Term> terms;
    terms.reserve(s.terms().size());
    for (const auto& t : s.terms()) {
        FFElem factor = embed(xi.at(t.exp), g);
        terms.push_back({t.exp, ff_mul(t.coeff, factor)});
    }
    return MNSeries::from_sorted(g, std::move(terms), s.prec());
}

bool series_agree(const MNSeries& a0, const MNSeries& b0) {
    auto [a, b] = unify(a0, b0);
    Rat w = std::min(a.prec(), b.prec());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (true) {
        while (i < ta.size() && ta[i].exp >= w) ++i;
        while (j < tb.size() && tb[j].exp >= w) ++j;
        bool ea = i == ta.size(), eb = j == tb.size();
        if (ea && eb) return true;
        if (ea != eb) return false;
        if (!(ta[i].exp == tb[j].exp) || !ff_eq(ta[i].coeff, tb[j].coeff)) return false;
        ++i;
        ++j;
    }
}

std::string series_str(const MNSeries& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : a.terms()) {
        if (!first) os << " + ";
        os << ff_str(t.coeff) << "*p^(" << rat_str(t.exp) << ")";
        first = false;
    }
    if (first) os << "0";
    os << " + O(p^(" << rat_str(a.prec()) << "))";
    return os.str();
}

} // namespace mnp
