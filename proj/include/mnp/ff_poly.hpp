#pragma once

#include <utility>
#include <vector>

#include "mnp/finite_field.hpp"

namespace mnp {

/// Dense polynomial over one finite field, constant term first, no trailing
/// zero coefficients (the zero polynomial is the empty vector).
using FFPoly = std::vector<FFElem>;

FFPoly fp_normalize(FFPoly a);
int fp_deg(const FFPoly& a); // -1 for the zero polynomial
FFPoly fp_make(const Field* f, const std::vector<long>& ints);
FFPoly fp_add(const FFPoly& a, const FFPoly& b);
FFPoly fp_sub(const FFPoly& a, const FFPoly& b);
FFPoly fp_mul(const FFPoly& a, const FFPoly& b);
FFPoly fp_monic(const FFPoly& a);
std::pair<FFPoly, FFPoly> fp_divmod(const FFPoly& a, const FFPoly& b);
FFPoly fp_gcd(FFPoly a, FFPoly b); // monic gcd
FFPoly fp_mulmod(const FFPoly& a, const FFPoly& b, const FFPoly& m);
FFPoly fp_powmod(FFPoly base, Int e, const FFPoly& m);
FFElem fp_eval(const FFPoly& a, const FFElem& x);
FFPoly fp_embed(const FFPoly& a, const Field* target);

/// All roots of the polynomial that lie in F_{p^K}, K = ambient_degree, each
/// repeated with multiplicity and sorted by the canonical coordinate order.
/// Coefficients may live in subfields of F_{p^K}; they are embedded first.
/// The list may be shorter than the degree when the polynomial does not split
/// over F_{p^K}. Throws ZeroPolynomial on the zero polynomial.
std::vector<FFElem> poly_roots(const std::vector<FFElem>& coeffs, int ambient_degree);

/// Roots over the smallest extension F_{p^K'} of the start field in which the
/// polynomial splits completely; returns the roots (with multiplicity,
/// sorted) together with that field.
std::pair<std::vector<FFElem>, const Field*> split_completely(const std::vector<FFElem>& coeffs,
                                                              const Field* start);

} // namespace mnp
