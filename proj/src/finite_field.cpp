#include "mnp/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "mnp/errors.hpp"
#include "mnp/ff_poly.hpp"
#include "mnp/util.hpp"

namespace mnp {

namespace {

// ---- dense polynomials over F_p (plain long coordinates), used only for
// ---- modulus generation. Constant term first.

using ZPoly = std::vector<long>;

ZPoly zp_trim(ZPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

ZPoly zp_mulmod(const ZPoly& a, const ZPoly& b, const ZPoly& m, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    // reduce by monic m
    size_t k = m.size() - 1;
    for (size_t i = c.size(); i-- > k;) {
        long t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < k; ++j) c[i - k + j] = ((c[i - k + j] - t * m[j]) % p + p) % p;
    }
    c.resize(k);
    return zp_trim(c);
}

ZPoly zp_pow_p(const ZPoly& a, const ZPoly& m, long p) {
    // a^p mod m by square-and-multiply on the exponent p
    ZPoly result = {1};
    ZPoly base = a;
    long e = p;
    while (e) {
        if (e & 1) result = zp_mulmod(result, base, m, p);
        base = zp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

ZPoly zp_mod(ZPoly a, const ZPoly& b, long p) {
    a = zp_trim(std::move(a));
    ZPoly bb = b; // monic-ize
    long lead = bb.back();
    if (lead != 1) {
        long inv = 1;
        for (long x = 1; x < p; ++x)
            if ((x * lead) % p == 1) { inv = x; break; }
        for (long& x : bb) x = (x * inv) % p;
    }
    while (a.size() >= bb.size() && !a.empty()) {
        long t = a.back();
        size_t shift = a.size() - bb.size();
        for (size_t j = 0; j < bb.size(); ++j)
            a[shift + j] = ((a[shift + j] - t * bb[j]) % p + p) % p;
        a = zp_trim(std::move(a));
    }
    return a;
}

ZPoly zp_gcd(ZPoly a, ZPoly b, long p) {
    a = zp_trim(std::move(a));
    b = zp_trim(std::move(b));
    while (!b.empty()) {
        ZPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool zp_is_irreducible(const ZPoly& mod_tail, long p, int k) {
    // m = mod_tail + x^k, monic of degree k >= 2
    ZPoly m = mod_tail;
    m.resize(k + 1, 0);
    m[k] = 1;
    ZPoly u = {0, 1}; // x
    for (int d = 1; d <= k; ++d) {
        u = zp_pow_p(u, m, p); // now u = x^(p^d) mod m
        ZPoly diff = u;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        diff = zp_trim(std::move(diff));
        if (d < k) {
            if (k % d != 0) continue;
            ZPoly g = zp_gcd(m, diff, p);
            if (g.size() > 1) return false;
        } else {
            if (!diff.empty()) return false; // x^(p^k) != x
        }
    }
    return true;
}

std::vector<long> canonical_modulus(long p, int k) {
    if (k == 1) return {0}; // F_p itself: modulus x
    std::vector<long> c(k, 0);
    while (true) {
        if (zp_is_irreducible(c, p, k)) return c;
        // next tuple in lexicographic order (constant-first significance)
        int i = k - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) throw InternalError("no irreducible modulus found");
        ++c[i];
    }
}

std::map<std::pair<long, int>, std::unique_ptr<Field>> g_fields;
std::mutex g_fields_mu;

// Image of the generator of F_{p^d} inside F_{p^K}, memoized. The choice is
// the lexicographically smallest root of the degree-d canonical modulus in
// F_{p^K} that agrees with the already-chosen embeddings of every proper
// subfield of F_{p^d}; this pins the whole system so that composites commute.
std::map<std::tuple<long, int, int>, std::vector<long>> g_embeddings;
std::recursive_mutex g_embeddings_mu;

std::vector<long> embedding_image_locked(long p, int d, int K);

FFElem apply_coords_at(const std::vector<long>& coords, const FFElem& rho) {
    // evaluate sum coords[i] * rho^i
    FFElem acc = ff_zero(rho.f);
    for (size_t i = coords.size(); i-- > 0;) {
        acc = ff_mul(acc, rho);
        acc = ff_add(acc, ff_scale(ff_one(rho.f), coords[i]));
    }
    return acc;
}

std::vector<long> embedding_image_locked(long p, int d, int K) {
    auto key = std::make_tuple(p, d, K);
    auto it = g_embeddings.find(key);
    if (it != g_embeddings.end()) return it->second;

    const Field* src = field(p, d);
    const Field* tgt = field(p, K);
    std::vector<FFElem> modpoly;
    for (long c : src->modulus) modpoly.push_back(ff_from_int(tgt, c));
    modpoly.push_back(ff_one(tgt));
    std::vector<FFElem> roots = poly_roots(modpoly, K);
    if (static_cast<int>(roots.size()) != d)
        throw InternalError("canonical modulus does not split in extension");

    std::vector<int> constraints; // maximal proper divisors of d, excluding 1
    for (auto [q, e] : factorize_long(d)) {
        (void)e;
        int dd = d / static_cast<int>(q);
        if (dd > 1) constraints.push_back(dd);
    }

    for (const FFElem& rho : roots) {
        bool ok = true;
        for (int dd : constraints) {
            std::vector<long> sub_in_d = embedding_image_locked(p, dd, d);
            std::vector<long> sub_in_K = embedding_image_locked(p, dd, K);
            FFElem via = apply_coords_at(sub_in_d, rho);
            FFElem direct{tgt, sub_in_K};
            if (!ff_eq(via, direct)) { ok = false; break; }
        }
        if (ok) {
            g_embeddings.emplace(key, rho.c);
            return rho.c;
        }
    }
    throw InternalError("no compatible embedding found");
}

} // namespace

const Field* field(long p, int k) {
    if (p < 3 || !is_prime_long(p))
        throw CompositeP("p must be an odd prime, got " + std::to_string(p));
    if (k < 1) throw CompositeP("extension degree must be >= 1");
    std::lock_guard<std::mutex> lk(g_fields_mu);
    auto key = std::make_pair(p, k);
    auto it = g_fields.find(key);
    if (it != g_fields.end()) return it->second.get();
    auto f = std::make_unique<Field>();
    f->p = p;
    f->k = k;
    f->modulus = canonical_modulus(p, k);
    f->order = int_pow(p, k);
    const Field* ptr = f.get();
    g_fields.emplace(key, std::move(f));
    return ptr;
}

FFElem ff_zero(const Field* f) { return FFElem{f, std::vector<long>(f->k, 0)}; }

FFElem ff_one(const Field* f) { return ff_from_int(f, 1); }

FFElem ff_gen(const Field* f) {
    FFElem a = ff_zero(f);
    if (f->k == 1)
        return a; // x reduces to 0 in F_p[x]/(x)
    a.c[1] = 1;
    return a;
}

FFElem ff_from_int(const Field* f, long v) {
    FFElem a = ff_zero(f);
    a.c[0] = ((v % f->p) + f->p) % f->p;
    return a;
}

FFElem ff_make(const Field* f, std::vector<long> coords) {
    if (static_cast<int>(coords.size()) != f->k)
        throw FieldMismatch("coordinate vector has wrong length");
    for (long& x : coords) x = ((x % f->p) + f->p) % f->p;
    return FFElem{f, std::move(coords)};
}

static void require_same_field(const FFElem& a, const FFElem& b) {
    if (a.f != b.f) throw FieldMismatch("operands in different fields");
}

bool ff_eq(const FFElem& a, const FFElem& b) {
    require_same_field(a, b);
    return a.c == b.c;
}

bool ff_lex_less(const FFElem& a, const FFElem& b) {
    require_same_field(a, b);
    return a.c < b.c;
}

FFElem ff_add(const FFElem& a, const FFElem& b) {
    require_same_field(a, b);
    FFElem r = a;
    for (int i = 0; i < a.f->k; ++i) r.c[i] = (r.c[i] + b.c[i]) % a.f->p;
    return r;
}

FFElem ff_sub(const FFElem& a, const FFElem& b) { return ff_add(a, ff_neg(b)); }

FFElem ff_neg(const FFElem& a) {
    FFElem r = a;
    for (long& x : r.c) x = (a.f->p - x) % a.f->p;
    return r;
}

FFElem ff_scale(const FFElem& a, long s) {
    s = ((s % a.f->p) + a.f->p) % a.f->p;
    FFElem r = a;
    for (long& x : r.c) x = (x * s) % a.f->p;
    return r;
}

FFElem ff_mul(const FFElem& a, const FFElem& b) {
    require_same_field(a, b);
    const Field* f = a.f;
    const long p = f->p;
    const int k = f->k;
    std::vector<long> c(2 * k - 1, 0);
    for (int i = 0; i < k; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < k; ++j) c[i + j] = (c[i + j] + a.c[i] * b.c[j]) % p;
    }
    for (int i = 2 * k - 2; i >= k; --i) {
        long t = c[i];
        if (!t) continue;
        c[i] = 0;
        for (int j = 0; j < k; ++j) c[i - k + j] = ((c[i - k + j] - t * f->modulus[j]) % p + p) % p;
    }
    c.resize(k);
    return FFElem{f, std::move(c)};
}

FFElem ff_pow(const FFElem& a, const Int& e) {
    if (e < 0) throw InternalError("negative exponent in ff_pow");
    FFElem result = ff_one(a.f);
    FFElem base = a;
    Int m = e;
    while (m > 0) {
        if (mpz_odd_p(m.get_mpz_t())) result = ff_mul(result, base);
        base = ff_mul(base, base);
        m >>= 1;
    }
    return result;
}

FFElem ff_inv(const FFElem& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero field element");
    return ff_pow(a, a.f->order - 2);
}

FFElem ff_frobenius(const FFElem& a, long t) {
    t %= a.f->k;
    if (t < 0) t += a.f->k;
    FFElem r = a;
    for (long i = 0; i < t; ++i) r = ff_pow(r, Int(a.f->p));
    return r;
}

int subfield_degree(const FFElem& a) {
    FFElem b = a;
    for (int d = 1; d <= a.f->k; ++d) {
        b = ff_frobenius(b, 1);
        if (ff_eq(b, a)) {
            if (a.f->k % d != 0) throw InternalError("subfield degree does not divide k");
            return d;
        }
    }
    throw InternalError("frobenius orbit did not close");
}

FFElem embed(const FFElem& a, const Field* target) {
    if (a.f->p != target->p) throw PrimeMismatch("embedding across different primes");
    int d = a.f->k, K = target->k;
    if (a.f == target) return a;
    if (K % d != 0) throw NotASubfield("degree " + std::to_string(d) + " does not divide " + std::to_string(K));
    if (d == 1) return ff_from_int(target, a.c[0]);
    std::lock_guard<std::recursive_mutex> lk(g_embeddings_mu);
    std::vector<long> img = embedding_image_locked(a.f->p, d, K);
    FFElem rho{target, img};
    return apply_coords_at(a.c, rho);
}

FFElem element_of_order(const Field* f, long m) {
    if (m < 1) throw InternalError("order must be positive");
    Int q1 = f->order - 1;
    if (!mpz_divisible_ui_p(q1.get_mpz_t(), static_cast<unsigned long>(m)))
        throw InternalError("field has no element of order " + std::to_string(m));
    auto factors = factorize_long(m);
    // scan in canonical order; the multiplicative group is cyclic so an
    // element of exact order m exists
    std::vector<long> c(f->k, 0);
    while (true) {
        int i = f->k - 1;
        while (i >= 0 && c[i] == f->p - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
        FFElem a{f, c};
        if (!ff_eq(ff_pow(a, Int(m)), ff_one(f))) continue;
        bool exact = true;
        for (auto [q, e] : factors) {
            (void)e;
            if (ff_eq(ff_pow(a, Int(m / q)), ff_one(f))) { exact = false; break; }
        }
        if (exact) return a;
    }
    throw InternalError("element of requested order not found");
}

std::string ff_str(const FFElem& a) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < a.f->k; ++i) {
        if (i) os << ",";
        os << a.c[i];
    }
    os << "]";
    return os.str();
}

} // namespace mnp
