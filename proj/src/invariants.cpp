#include "mnp/invariants.hpp"

#include <algorithm>

#include "mnp/errors.hpp"
#include "mnp/util.hpp"

namespace mnp {

namespace {

long stripped_denominator(const Rat& q, long p) {
    Int den = q.get_den();
    while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(p));
    return to_long(den);
}

} // namespace

long tame_index_estimate(const MNSeries& a) {
    long e = 1;
    for (const auto& t : a.terms()) e = lcm_long(e, stripped_denominator(t.exp, a.p()));
    return e;
}

long inertia_index_estimate(const MNSeries& a) {
    long f = 1;
    for (const auto& t : a.terms()) f = lcm_long(f, subfield_degree(t.coeff));
    return f;
}

InvariantReport invariant_report(const MNSeries& a) {
    InvariantReport r;
    r.precision_used = a.prec();
    for (const auto& t : a.terms()) {
        long w = stripped_denominator(t.exp, a.p());
        long d = subfield_degree(t.coeff);
        r.tame_certificate.emplace_back(t.exp, w);
        r.inertia_certificate.emplace_back(t.exp, d);
        r.tame_index = lcm_long(r.tame_index, w);
        r.inertia_index = lcm_long(r.inertia_index, d);
    }
    if (gcd_long(r.tame_index, a.p()) != 1)
        throw InternalError("tame index estimate not coprime to p");
    return r;
}

TameVerdict tame_criterion(const MNSeries& a, std::optional<long> known_f) {
    TameVerdict v;
    v.e = tame_index_estimate(a);
    v.tame = true;
    for (const auto& t : a.terms()) {
        Rat scaled = t.exp * Rat(v.e);
        if (!rat_is_integer(scaled)) {
            v.tame = false;
            break;
        }
    }
    if (v.tame && known_f) {
        long f = *known_f;
        if (f < 1) throw DegenerateInput("known inertia degree must be positive");
        Int m = lcm(Int(v.e), int_pow(a.p(), f) - 1);
        long mm = to_long(m);
        long c = ord_mod(a.p(), mm);
        long inertia = inertia_index_estimate(a);
        v.c = c;
        v.inertia_divides_c = (c % inertia == 0);
        v.known_f_divides_inertia = (inertia % f == 0);
    }
    return v;
}

MNSeries random_tame_element(long p, long e, long f, const Rat& prec, std::uint64_t seed) {
    if (e < 1 || gcd_long(e, p) != 1)
        throw DegenerateInput("ramification index must be positive and coprime to p");
    if (f < 1) throw DegenerateInput("inertia degree must be >= 1");
    long de = ord_mod(p, e);
    int K = static_cast<int>(lcm_long(f, de));
    const Field* amb = field(p, K);
    const Field* Ff = field(p, static_cast<int>(f));
    FFElem zeta = e == 1 ? ff_one(amb) : element_of_order(amb, e);
    SplitMix64 rng(seed);
    std::vector<MNSeries::Term> terms;
    FFElem zeta_k = ff_one(amb);
    for (long k = 0; k < e; ++k) {
        Rat frac = rat(k, e);
        for (long i = 0;; ++i) {
            Rat exp = Rat(i) + frac;
            if (exp >= prec) break;
            std::vector<long> coords(Ff->k);
            for (long& x : coords) x = rng.uniform(p);
            FFElem ci = ff_make(Ff, coords);
            if (ci.is_zero()) continue;
            terms.push_back({exp, ff_mul(embed(ci, amb), zeta_k)});
        }
        zeta_k = ff_mul(zeta_k, zeta);
    }
    std::sort(terms.begin(), terms.end(),
              [](const MNSeries::Term& a, const MNSeries::Term& b) { return a.exp < b.exp; });
    return MNSeries::from_sorted(amb, std::move(terms), prec);
}

std::vector<std::pair<long, long>> invariant_profile(const MNPoly& P, const Rat& target_prec,
                                                     int max_steps) {
    std::vector<NewtonBranchResult> branches = newton_all_roots(P, target_prec, max_steps);
    std::vector<std::pair<long, long>> out;
    for (const NewtonBranchResult& b : branches) {
        long t = tame_index_estimate(b.root);
        long f = inertia_index_estimate(b.root);
        for (int i = 0; i < b.multiplicity; ++i) out.emplace_back(t, f);
    }
    return out;
}

} // namespace mnp
