#include "mnp/cyclotomic.hpp"

#include <algorithm>

#include "mnp/errors.hpp"
#include "mnp/util.hpp"

namespace mnp {

namespace {

FFElem inv_factorial(const Field* f, long k) {
    long acc = 1;
    for (long i = 2; i <= k; ++i) acc = (acc * (i % f->p)) % f->p;
    return ff_inv(ff_from_int(f, acc));
}

} // namespace

std::vector<FFElem> primitive_2p2_roots(long p) {
    const Field* f2 = field(p, 2);
    long m = 2 * (p - 1);
    FFElem zeta = element_of_order(f2, m);
    std::vector<FFElem> out;
    for (long j = 1; j < m; ++j) {
        if (gcd_long(j, m) != 1) continue;
        out.push_back(ff_pow(zeta, Int(j)));
    }
    std::sort(out.begin(), out.end(),
              [](const FFElem& a, const FFElem& b) { return ff_lex_less(a, b); });
    return out;
}

MNSeries zeta_p_closed_form(long p, int choice, const Rat& prec) {
    Rat limit = rat(p, p - 1);
    if (prec > limit)
        throw PrecisionBeyondFormula("closed form only covers exponents below " + rat_str(limit));
    std::vector<FFElem> choices = primitive_2p2_roots(p);
    if (choice < 0 || choice >= static_cast<int>(choices.size()))
        throw DegenerateInput("root-of-unity choice out of range");
    const Field* f2 = field(p, 2);
    FFElem zeta = choices[choice];
    std::vector<MNSeries::Term> terms;
    FFElem zk = ff_one(f2);
    for (long k = 0; k < p; ++k) {
        Rat exp = rat(k, p - 1);
        if (exp < prec) {
            FFElem c = ff_mul(zk, inv_factorial(f2, k));
            terms.push_back({exp, c}); // zeta^k / k! is never zero
        }
        zk = ff_mul(zk, zeta);
    }
    return MNSeries::from_sorted(f2, std::move(terms), prec);
}

MNPoly cyclotomic_poly_p(long p, const Rat& coeff_prec) {
    MNPoly P;
    for (long i = 0; i < p; ++i)
        P.coeffs.push_back(MNSeries::from_rational(Int(1), Int(1), p, coeff_prec));
    return P;
}

MNPoly cyclotomic_poly_p2(long p, const Rat& coeff_prec) {
    MNPoly P;
    long deg = p * (p - 1);
    MNSeries one = MNSeries::from_rational(Int(1), Int(1), p, coeff_prec);
    MNSeries zero = MNSeries::zero(one.field_ptr(), coeff_prec);
    for (long i = 0; i <= deg; ++i)
        P.coeffs.push_back(i % p == 0 ? one : zero);
    return P;
}

MNSeries zeta_prime_power(long p, int n, const Rat& prec, const std::vector<int>& branch_policy,
                          int max_steps) {
    if (n < 1) throw DegenerateInput("prime-power exponent must be >= 1");
    auto pick = [&](int level, size_t count) -> size_t {
        int idx = level < static_cast<int>(branch_policy.size()) ? branch_policy[level] : 0;
        if (idx < 0 || idx >= static_cast<int>(count))
            throw DegenerateInput("branch choice out of range");
        return static_cast<size_t>(idx);
    };
    if (n == 1) {
        Rat coeff_prec = prec + 3;
        MNPoly P = cyclotomic_poly_p(p, coeff_prec);
        std::vector<NewtonBranchResult> roots = newton_all_roots(P, prec, max_steps);
        return roots[pick(0, roots.size())].root;
    }
    Rat inner_prec = Rat(p) * prec + 2;
    MNSeries base = zeta_prime_power(p, n - 1, inner_prec, branch_policy, max_steps);
    MNPoly P;
    P.coeffs.push_back(mn_neg(base));
    for (long i = 1; i < p; ++i) P.coeffs.push_back(MNSeries::zero(base.field_ptr(), inner_prec));
    P.coeffs.push_back(MNSeries::from_rational(Int(1), Int(1), p, inner_prec));
    std::vector<NewtonBranchResult> roots = newton_all_roots(P, prec, max_steps);
    return roots[pick(n - 1, roots.size())].root;
}

std::vector<std::pair<Rat, FFElem>> zeta_pn_partial_terms(long p, int n, const Rat& prec) {
    if (n < 2) throw DegenerateInput("partial-term table is defined for n >= 2");
    const Field* f2 = field(p, 2);
    FFElem zeta = primitive_2p2_roots(p).front(); // canonical choice
    Rat denom = Rat(int_pow(p, n - 1) * (p - 1));
    // The explicitly known data stops where the first quadratic correction
    // family can contribute: 2/(p^(n-2)(p-1)) - 2/p^n.
    Rat known_up_to = rat(2, 1) / Rat(int_pow(p, n - 2) * (p - 1)) - rat(2, 1) / Rat(int_pow(p, n));
    Rat cutoff = std::min(prec, known_up_to);

    std::vector<std::pair<Rat, FFElem>> out;
    auto sign_pow = [&](long e) { return (e % 2 == 0) ? ff_one(f2) : ff_neg(ff_one(f2)); };

    // leading family: [(-1)^(nk) zeta^k / k!] at k/(p^(n-1)(p-1))
    FFElem zk = ff_one(f2);
    for (long k = 0; k < p; ++k) {
        Rat exp = Rat(k) / denom;
        if (exp < cutoff) {
            FFElem c = ff_mul(ff_mul(sign_pow(static_cast<long>(n) * k), zk), inv_factorial(f2, k));
            out.emplace_back(exp, c);
        }
        zk = ff_mul(zk, zeta);
    }
    // harmonic family at exactly (k+p)/(p^(n-1)(p-1)), k >= 1
    zk = ff_mul(zeta, zeta); // zeta^(k+1) for k = 1
    for (long k = 1; k < p; ++k) {
        Rat exp = Rat(k + p) / denom;
        if (exp < cutoff) {
            long h = 0; // harmonic number H_k mod p (denominators < p are units)
            for (long l = 1; l <= k; ++l) {
                long linv = 1;
                for (long x = 1; x < p; ++x)
                    if ((x * l) % p == 1) { linv = x; break; }
                h = (h + linv) % p;
            }
            FFElem c = ff_mul(ff_mul(sign_pow(n * (k + 1) + 1), ff_scale(zk, h)),
                              inv_factorial(f2, k));
            if (!c.is_zero()) out.emplace_back(exp, c);
        }
        zk = ff_mul(zk, zeta);
    }
    // accumulating families at (k+p)/(p^(n-1)(p-1)) - 1/p^l, l >= n
    zk = zeta;
    for (long k = 0; k < p; ++k) {
        Rat base = Rat(k + p) / denom;
        FFElem c = ff_mul(ff_mul(sign_pow(n * (k + 1)), zk), inv_factorial(f2, k));
        for (long l = n; l <= 64; ++l) {
            Rat exp = base - rat(1, 1) / Rat(int_pow(p, l));
            if (exp >= cutoff) break;
            out.emplace_back(exp, c);
        }
        zk = ff_mul(zk, zeta);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i - 1].first == out[i].first)
            throw InternalError("partial-term exponents collide");
    return out;
}

long match_partial_terms(const std::vector<std::pair<Rat, FFElem>>& expected,
                         const MNSeries& got) {
    long checked = 0;
    for (const auto& [e, c] : expected) {
        if (e >= got.prec()) continue;
        FFElem actual = got.coeff(e);
        FFElem want = embed(c, actual.f);
        if (!ff_eq(actual, want)) return -1;
        ++checked;
    }
    return checked;
}

MNSeries zeta_coprime(long r, long p, const Rat& prec) {
    if (r < 1 || gcd_long(r, p) != 1)
        throw DegenerateInput("root-of-unity order must be positive and coprime to p");
    if (r == 1) return MNSeries::from_rational(Int(1), Int(1), p, prec);
    long d = ord_mod(p, r);
    const Field* f = field(p, static_cast<int>(d));
    FFElem z = element_of_order(f, r);
    return MNSeries::monomial(z, Rat(0), prec);
}

std::vector<ClassifiedRoot> enumerate_primitive_p2_roots(long p, const Rat& prec) {
    Rat xi_prec = rat(2, 1) + rat(1, p - 1); // enough to read the 1/(p-1) digit
    MNPoly Pxi = cyclotomic_poly_p(p, xi_prec + 3);
    std::vector<NewtonBranchResult> xi_branches = newton_all_roots(Pxi, xi_prec, 64);

    std::vector<std::pair<MNSeries, FFElem>> xis; // (series, coefficient at 1/(p-1))
    {
        MNSeries one = MNSeries::from_rational(Int(1), Int(1), p, xi_prec);
        xis.emplace_back(one, ff_zero(one.field_ptr()));
        for (const NewtonBranchResult& b : xi_branches)
            xis.emplace_back(b.root, b.root.coeff(rat(1, p - 1)));
    }

    MNPoly P2 = cyclotomic_poly_p2(p, prec + 3);
    std::vector<NewtonBranchResult> families = newton_all_roots(P2, prec, 64, 200000);
    if (static_cast<int>(families.size()) != p - 1)
        throw InternalError("unexpected branch count in p^2 enumeration");

    Rat small_exp = rat(1, p * (p - 1));
    std::vector<ClassifiedRoot> out;
    for (const NewtonBranchResult& fam : families) {
        if (fam.multiplicity != static_cast<int>(p))
            throw InternalError("unexpected branch multiplicity in p^2 enumeration");
        for (const auto& [xi, c_big] : xis) {
            ClassifiedRoot r;
            r.root = mn_mul(fam.root, xi);
            r.c_small = r.root.coeff(small_exp);
            r.c_big = embed(c_big, r.root.field_ptr());
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace mnp
