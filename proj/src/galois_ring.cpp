#include "mnp/galois_ring.hpp"

#include "mnp/errors.hpp"
#include "mnp/util.hpp"

namespace mnp {

namespace {

void require_match(const GRElem& a, const GRElem& b) {
    if (a.f != b.f || a.N != b.N) throw FieldMismatch("galois ring operands do not match");
}

Int mod_pn(const Int& x, const Int& pn) {
    Int r = x % pn;
    if (r < 0) r += pn;
    return r;
}

} // namespace

GRElem gr_zero(const Field* f, int N) {
    if (N < 1) throw InternalError("galois ring precision must be >= 1");
    GRElem a;
    a.f = f;
    a.N = N;
    a.pn = int_pow(f->p, N);
    a.c.assign(f->k, Int(0));
    return a;
}

GRElem gr_one(const Field* f, int N) {
    GRElem a = gr_zero(f, N);
    a.c[0] = 1;
    return a;
}

GRElem gr_from_ff(const FFElem& r, int N) {
    GRElem a = gr_zero(r.f, N);
    for (int i = 0; i < r.f->k; ++i) a.c[i] = r.c[i];
    return a;
}

GRElem gr_from_int(const Field* f, int N, const Int& v) {
    GRElem a = gr_zero(f, N);
    a.c[0] = mod_pn(v, a.pn);
    return a;
}

bool gr_eq(const GRElem& a, const GRElem& b) {
    require_match(a, b);
    return a.c == b.c;
}

GRElem gr_add(const GRElem& a, const GRElem& b) {
    require_match(a, b);
    GRElem r = a;
    for (int i = 0; i < a.f->k; ++i) r.c[i] = mod_pn(r.c[i] + b.c[i], a.pn);
    return r;
}

GRElem gr_sub(const GRElem& a, const GRElem& b) { return gr_add(a, gr_neg(b)); }

GRElem gr_neg(const GRElem& a) {
    GRElem r = a;
    for (Int& x : r.c) x = mod_pn(-x, a.pn);
    return r;
}

GRElem gr_mul(const GRElem& a, const GRElem& b) {
    require_match(a, b);
    const Field* f = a.f;
    const int k = f->k;
    std::vector<Int> c(2 * k - 1, Int(0));
    for (int i = 0; i < k; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < k; ++j) c[i + j] = mod_pn(c[i + j] + a.c[i] * b.c[j], a.pn);
    }
    for (int i = 2 * k - 2; i >= k; --i) {
        Int t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (int j = 0; j < k; ++j) c[i - k + j] = mod_pn(c[i - k + j] - t * f->modulus[j], a.pn);
    }
    c.resize(k);
    GRElem r = a;
    r.c = std::move(c);
    return r;
}

GRElem gr_pow(const GRElem& a, Int e) {
    if (e < 0) throw InternalError("negative exponent in gr_pow");
    GRElem result = gr_one(a.f, a.N);
    GRElem base = a;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = gr_mul(result, base);
        base = gr_mul(base, base);
        e >>= 1;
    }
    return result;
}

GRElem gr_inv(const GRElem& a) {
    FFElem abar = gr_reduce(a);
    if (abar.is_zero()) throw NotAUnit("inverse of a non-unit in the galois ring");
    GRElem x = gr_from_ff(ff_inv(abar), a.N);
    // Newton iteration x <- x(2 - ax) doubles the number of correct digits
    int correct = 1;
    while (correct < a.N) {
        GRElem t = gr_sub(gr_from_int(a.f, a.N, Int(2)), gr_mul(a, x));
        x = gr_mul(x, t);
        correct *= 2;
    }
    if (!gr_eq(gr_mul(a, x), gr_one(a.f, a.N))) throw InternalError("gr_inv failed");
    return x;
}

GRElem gr_shift(const GRElem& a, long t) {
    if (t < 0) throw InternalError("negative shift in gr_shift");
    Int m = int_pow(a.f->p, t);
    GRElem r = a;
    for (Int& x : r.c) x = mod_pn(x * m, a.pn);
    return r;
}

FFElem gr_reduce(const GRElem& a) {
    std::vector<long> c(a.f->k);
    for (int i = 0; i < a.f->k; ++i) c[i] = to_long(Int(a.c[i] % a.f->p));
    return ff_make(a.f, std::move(c));
}

GRElem teichmuller_lift(const FFElem& r, int N) {
    GRElem t = gr_from_ff(r, N);
    for (int i = 1; i < N; ++i) t = gr_pow(t, r.f->order);
    if (!gr_eq(gr_pow(t, r.f->order), t)) throw InternalError("teichmuller lift not a fixed point");
    return t;
}

std::vector<FFElem> teichmuller_decompose(const GRElem& a) {
    std::vector<FFElem> digits;
    digits.reserve(a.N);
    GRElem w = a;
    for (int i = 0; i < a.N; ++i) {
        FFElem r = gr_reduce(w);
        digits.push_back(r);
        if (i + 1 == a.N) break;
        GRElem t = teichmuller_lift(r, w.N);
        GRElem d = gr_sub(w, t);
        GRElem next = gr_zero(a.f, w.N - 1);
        for (int j = 0; j < a.f->k; ++j) {
            if (!mpz_divisible_ui_p(d.c[j].get_mpz_t(), static_cast<unsigned long>(a.f->p)))
                throw InternalError("non-exact division in teichmuller_decompose");
            Int q;
            mpz_divexact_ui(q.get_mpz_t(), d.c[j].get_mpz_t(), static_cast<unsigned long>(a.f->p));
            next.c[j] = q % next.pn;
        }
        w = std::move(next);
    }
    return digits;
}

} // namespace mnp
