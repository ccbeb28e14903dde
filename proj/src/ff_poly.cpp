#include "mnp/ff_poly.hpp"

#include <algorithm>

#include "mnp/errors.hpp"
#include "mnp/util.hpp"

namespace mnp {

namespace {

const Field* poly_field(const FFPoly& a) {
    if (a.empty()) throw InternalError("field of zero polynomial");
    return a[0].f;
}

FFPoly fp_x(const Field* f) { return {ff_zero(f), ff_one(f)}; }

// Searching the whole field is fine up to this many elements; beyond it the
// equal-degree split with a fixed seed takes over.
constexpr long kExhaustiveLimit = 1000000;
constexpr std::uint64_t kSplitSeed = 0xC0FFEE123456789ULL;

void split_distinct(const FFPoly& g, std::vector<FFElem>& out, SplitMix64& rng);

} // namespace

FFPoly fp_normalize(FFPoly a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

int fp_deg(const FFPoly& a) { return static_cast<int>(a.size()) - 1; }

FFPoly fp_make(const Field* f, const std::vector<long>& ints) {
    FFPoly a;
    a.reserve(ints.size());
    for (long v : ints) a.push_back(ff_from_int(f, v));
    return fp_normalize(std::move(a));
}

FFPoly fp_add(const FFPoly& a, const FFPoly& b) {
    FFPoly r = a.size() >= b.size() ? a : b;
    const FFPoly& s = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < s.size(); ++i) r[i] = ff_add(r[i], s[i]);
    return fp_normalize(std::move(r));
}

FFPoly fp_sub(const FFPoly& a, const FFPoly& b) {
    FFPoly nb = b;
    for (FFElem& c : nb) c = ff_neg(c);
    return fp_add(a, nb);
}

FFPoly fp_mul(const FFPoly& a, const FFPoly& b) {
    if (a.empty() || b.empty()) return {};
    const Field* f = poly_field(a);
    FFPoly c(a.size() + b.size() - 1, ff_zero(f));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = ff_add(c[i + j], ff_mul(a[i], b[j]));
    }
    return fp_normalize(std::move(c));
}

FFPoly fp_monic(const FFPoly& a) {
    if (a.empty()) return a;
    FFElem inv = ff_inv(a.back());
    FFPoly r = a;
    for (FFElem& c : r) c = ff_mul(c, inv);
    return r;
}

std::pair<FFPoly, FFPoly> fp_divmod(const FFPoly& a, const FFPoly& b) {
    FFPoly bb = fp_normalize(b);
    if (bb.empty()) throw DivisionByZero("polynomial division by zero");
    FFPoly rem = fp_normalize(a);
    int db = fp_deg(bb);
    if (fp_deg(rem) < db) return {FFPoly{}, std::move(rem)};
    const Field* f = poly_field(bb);
    FFElem lead_inv = ff_inv(bb.back());
    FFPoly quot(rem.size() - bb.size() + 1, ff_zero(f));
    for (int shift = fp_deg(rem) - db; shift >= 0; --shift) {
        FFElem t = ff_mul(rem[shift + db], lead_inv);
        if (t.is_zero()) continue;
        quot[shift] = t;
        for (int j = 0; j <= db; ++j)
            rem[shift + j] = ff_sub(rem[shift + j], ff_mul(t, bb[j]));
    }
    return {fp_normalize(std::move(quot)), fp_normalize(std::move(rem))};
}

FFPoly fp_gcd(FFPoly a, FFPoly b) {
    a = fp_normalize(std::move(a));
    b = fp_normalize(std::move(b));
    while (!b.empty()) {
        FFPoly r = fp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : fp_monic(a);
}

FFPoly fp_mulmod(const FFPoly& a, const FFPoly& b, const FFPoly& m) {
    return fp_divmod(fp_mul(a, b), m).second;
}

FFPoly fp_powmod(FFPoly base, Int e, const FFPoly& m) {
    const Field* f = poly_field(m);
    FFPoly result = {ff_one(f)};
    base = fp_divmod(base, m).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = fp_mulmod(result, base, m);
        base = fp_mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

FFElem fp_eval(const FFPoly& a, const FFElem& x) {
    FFElem acc = ff_zero(x.f);
    for (size_t i = a.size(); i-- > 0;) acc = ff_add(ff_mul(acc, x), a[i]);
    return acc;
}

FFPoly fp_embed(const FFPoly& a, const Field* target) {
    FFPoly r;
    r.reserve(a.size());
    for (const FFElem& c : a) r.push_back(embed(c, target));
    return r;
}

namespace {

void split_distinct(const FFPoly& g, std::vector<FFElem>& out, SplitMix64& rng) {
    // g is monic, squarefree, and a product of linear factors over its field
    int d = fp_deg(g);
    if (d <= 0) return;
    const Field* f = poly_field(g);
    if (d == 1) {
        out.push_back(ff_neg(g[0]));
        return;
    }
    if (f->order <= kExhaustiveLimit) {
        std::vector<long> c(f->k, 0);
        long found = 0;
        while (found < d) {
            FFElem x{f, c};
            if (fp_eval(g, x).is_zero()) {
                out.push_back(x);
                ++found;
            }
            int i = f->k - 1;
            while (i >= 0 && c[i] == f->p - 1) c[i--] = 0;
            if (i < 0) break;
            ++c[i];
        }
        if (found != d) throw InternalError("exhaustive root scan missed roots");
        return;
    }
    Int half = (f->order - 1) / 2;
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<long> c(f->k);
        for (long& x : c) x = rng.uniform(f->p);
        FFPoly shifted = {FFElem{f, c}, ff_one(f)};
        FFPoly h = fp_powmod(shifted, half, g);
        h = fp_sub(h, FFPoly{ff_one(f)});
        FFPoly d1 = fp_gcd(g, h);
        if (fp_deg(d1) > 0 && fp_deg(d1) < fp_deg(g)) {
            FFPoly d2 = fp_divmod(g, d1).first;
            split_distinct(d1, out, rng);
            split_distinct(d2, out, rng);
            return;
        }
    }
    throw InternalError("equal-degree split failed to make progress");
}

std::vector<FFElem> roots_in_field(FFPoly f) {
    f = fp_normalize(std::move(f));
    if (f.empty()) throw ZeroPolynomial("root finding on the zero polynomial");
    int n = fp_deg(f);
    if (n == 0) return {};
    const Field* F = poly_field(f);
    FFPoly monic = fp_monic(f);

    FFPoly lin;
    if (n == 1) {
        lin = monic;
    } else {
        FFPoly xq = fp_powmod(fp_x(F), F->order, monic);
        lin = fp_gcd(monic, fp_sub(xq, fp_x(F)));
    }
    SplitMix64 rng(kSplitSeed);
    std::vector<FFElem> distinct;
    split_distinct(lin, distinct, rng);
    std::sort(distinct.begin(), distinct.end(),
              [](const FFElem& a, const FFElem& b) { return ff_lex_less(a, b); });

    std::vector<FFElem> out;
    for (const FFElem& rho : distinct) {
        FFPoly lin_factor = {ff_neg(rho), ff_one(F)};
        FFPoly rest = monic;
        while (true) {
            auto [q, r] = fp_divmod(rest, lin_factor);
            if (!r.empty()) break;
            out.push_back(rho);
            rest = std::move(q);
        }
    }
    return out;
}

// Degrees of the irreducible factors of h over its field (h with no roots in
// the field itself, so all degrees are >= 2).
std::vector<int> factor_degrees(FFPoly h) {
    const Field* F = poly_field(h);
    h = fp_monic(fp_normalize(std::move(h)));
    std::vector<int> degs;
    FFPoly u = fp_x(F);
    int d = 0;
    while (fp_deg(h) > 0) {
        ++d;
        if (2 * d > fp_deg(h)) {
            degs.push_back(fp_deg(h));
            break;
        }
        u = fp_powmod(u, F->order, h);
        FFPoly g = fp_gcd(h, fp_sub(u, fp_x(F)));
        if (fp_deg(g) > 0) {
            degs.push_back(d);
            h = fp_divmod(h, g).first;
            u = fp_divmod(u, h).second;
        }
    }
    return degs;
}

} // namespace

std::vector<FFElem> poly_roots(const std::vector<FFElem>& coeffs, int ambient_degree) {
    if (coeffs.empty()) throw ZeroPolynomial("root finding on the zero polynomial");
    const Field* target = field(coeffs[0].f->p, ambient_degree);
    FFPoly f;
    f.reserve(coeffs.size());
    for (const FFElem& c : coeffs) f.push_back(embed(c, target));
    return roots_in_field(std::move(f));
}

std::pair<std::vector<FFElem>, const Field*> split_completely(const std::vector<FFElem>& coeffs,
                                                              const Field* start) {
    const Field* F = start;
    FFPoly f = fp_embed(fp_normalize(coeffs), F);
    if (f.empty()) throw ZeroPolynomial("root finding on the zero polynomial");
    for (int round = 0; round < 8; ++round) {
        std::vector<FFElem> roots = roots_in_field(f);
        if (static_cast<int>(roots.size()) == fp_deg(f)) return {std::move(roots), F};
        FFPoly rest = fp_monic(f);
        for (const FFElem& rho : roots) {
            FFPoly lin = {ff_neg(rho), ff_one(F)};
            rest = fp_divmod(rest, lin).first;
        }
        std::vector<int> degs = factor_degrees(rest);
        long need = 1;
        for (int d : degs) need = lcm_long(need, d);
        const Field* next = field(F->p, F->k * static_cast<int>(need));
        f = fp_embed(f, next);
        F = next;
    }
    throw InternalError("polynomial failed to split after repeated extension");
}

} // namespace mnp
