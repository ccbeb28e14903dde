#pragma once

#include <vector>

#include "mnp/finite_field.hpp"

namespace mnp {

/// Element of the Galois ring W(F_{p^k})/p^N, realized as
/// (Z/p^N)[x]/(m~(x)) where m~ is the integer-coefficient lift of the
/// canonical modulus of F_{p^k}. Coordinates are kept reduced into [0, p^N).
struct GRElem {
    const Field* f = nullptr;
    int N = 0;
    Int pn; // p^N
    std::vector<Int> c;

    bool is_zero() const {
        for (const Int& x : c)
            if (x != 0) return false;
        return true;
    }
};

GRElem gr_zero(const Field* f, int N);
GRElem gr_one(const Field* f, int N);
GRElem gr_from_ff(const FFElem& r, int N); // coordinatewise lift, no Teichmuller
GRElem gr_from_int(const Field* f, int N, const Int& v);

bool gr_eq(const GRElem& a, const GRElem& b);
GRElem gr_add(const GRElem& a, const GRElem& b);
GRElem gr_sub(const GRElem& a, const GRElem& b);
GRElem gr_neg(const GRElem& a);
GRElem gr_mul(const GRElem& a, const GRElem& b);
GRElem gr_pow(const GRElem& a, Int e);
/// Inverse of a unit (nonzero mod p); throws NotAUnit otherwise.
GRElem gr_inv(const GRElem& a);
/// Multiply by p^t, t >= 0.
GRElem gr_shift(const GRElem& a, long t);

FFElem gr_reduce(const GRElem& a); // reduction mod p

/// The Teichmuller lift: the unique t = r mod p with t^(p^k) = t, computed by
/// iterating t -> t^(p^k) exactly N-1 times (each pass fixes at least one
/// more digit). The fixed-point identity is re-checked at the end.
GRElem teichmuller_lift(const FFElem& r, int N);

/// Digits (r_0, ..., r_{N-1}) with a = sum [r_i] p^i mod p^N.
std::vector<FFElem> teichmuller_decompose(const GRElem& a);

} // namespace mnp
