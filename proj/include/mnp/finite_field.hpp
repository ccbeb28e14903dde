#pragma once

#include <string>
#include <vector>

#include "mnp/rational.hpp"

namespace mnp {

/// Description of F_{p^k} = F_p[x]/(m(x)) for an odd prime p. The modulus is
/// the canonical one for (p, k): the lexicographically smallest monic
/// irreducible of degree k, coefficients compared constant-first. Instances
/// are interned, so two fields with the same (p, k) are pointer-equal.
struct Field {
    long p = 0;
    int k = 0;
    std::vector<long> modulus; // c_0..c_{k-1}; leading coefficient 1 implicit
    Int order;                 // p^k
};

/// Interned field lookup; constructs (and verifies) the canonical modulus on
/// first use. Throws CompositeP unless p is an odd prime, and rejects k < 1.
const Field* field(long p, int k);

/// Element of F_{p^k} in power-basis coordinates (constant first).
struct FFElem {
    const Field* f = nullptr;
    std::vector<long> c;

    bool is_zero() const {
        for (long x : c)
            if (x) return false;
        return true;
    }
};

FFElem ff_zero(const Field* f);
FFElem ff_one(const Field* f);
FFElem ff_gen(const Field* f); // the class of x
FFElem ff_from_int(const Field* f, long v);
FFElem ff_make(const Field* f, std::vector<long> coords);

bool ff_eq(const FFElem& a, const FFElem& b);
/// Canonical total order: lexicographic on coordinate vectors, constant first.
bool ff_lex_less(const FFElem& a, const FFElem& b);

FFElem ff_add(const FFElem& a, const FFElem& b);
FFElem ff_sub(const FFElem& a, const FFElem& b);
FFElem ff_neg(const FFElem& a);
FFElem ff_scale(const FFElem& a, long s);
FFElem ff_mul(const FFElem& a, const FFElem& b);
FFElem ff_inv(const FFElem& a);
FFElem ff_pow(const FFElem& a, const Int& e); // e >= 0

/// a^(p^t).
FFElem ff_frobenius(const FFElem& a, long t);

/// Minimal d (dividing k) with a^(p^d) = a, i.e. the degree of the subfield
/// generated by a.
int subfield_degree(const FFElem& a);

/// Canonical embedding F_{p^d} -> F_{p^K} for d | K. Embeddings are chosen so
/// that composites commute: embedding through an intermediate field equals
/// the direct embedding. Throws NotASubfield if d does not divide K.
FFElem embed(const FFElem& a, const Field* target);

/// Lexicographically smallest element of multiplicative order exactly m.
/// Requires m | p^k - 1.
FFElem element_of_order(const Field* f, long m);

std::string ff_str(const FFElem& a);

} // namespace mnp
