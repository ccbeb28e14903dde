#pragma once

#include <utility>
#include <vector>

#include "mnp/newton.hpp"
#include "mnp/series.hpp"

namespace mnp {

/// The primitive 2(p-1)-th roots of unity of F_{p^2}, canonically ordered
/// (coordinate-lexicographic). choice indexes into this list.
std::vector<FFElem> primitive_2p2_roots(long p);

/// Closed-form leading terms of a primitive p-th root of unity: the sum of
/// [zeta^k / k!] p^(k/(p-1)) over k < p, with zeta the chosen primitive
/// 2(p-1)-th root of F_{p^2}. Valid only below exponent p/(p-1); requesting
/// more throws PrecisionBeyondFormula.
MNSeries zeta_p_closed_form(long p, int choice, const Rat& prec);

/// A primitive p^n-th root of unity to the requested precision, computed by
/// iterated Newton extraction of p-th roots. branch_policy[j] picks the
/// branch at stage j+1 (0 = canonical smallest). For n >= 2 the support
/// accumulates below 1/(p^(n-2)(p-1)), so the achieved precision saturates
/// there no matter the request; the returned series carries the honest value.
MNSeries zeta_prime_power(long p, int n, const Rat& prec,
                          const std::vector<int>& branch_policy = {}, int max_steps = 48);

/// Explicit leading coefficients of the p^n-th root-of-unity expansion for
/// n >= 2, as (exponent, coefficient) assertions against a computed
/// truncation. Tail families that accumulate towards a limit exponent are
/// emitted only while they stay below the requested precision, and nothing
/// is emitted at or beyond the exponent where the known closed-form data
/// stops being exhaustive.
std::vector<std::pair<Rat, FFElem>> zeta_pn_partial_terms(long p, int n, const Rat& prec);

/// Checks assertions against a computed series; every assertion below the
/// series precision must match. Returns the number checked, or -1 on any
/// mismatch.
long match_partial_terms(const std::vector<std::pair<Rat, FFElem>>& expected, const MNSeries& got);

/// [zeta_r] p^0 for the canonical element of order r (gcd(r, p) = 1); exact
/// root of unity of order coprime to p.
MNSeries zeta_coprime(long r, long p, const Rat& prec);

struct ClassifiedRoot {
    MNSeries root;
    FFElem c_small; // coefficient at 1/(p(p-1))
    FFElem c_big;   // coefficient at 1/(p-1), derived from the factorization
};

/// All p(p-1) primitive p^2-th roots of unity as products r_k * xi_c of the
/// Newton branch representatives r_k (the family with vanishing coefficient
/// at 1/(p-1)) with the p-th roots of unity xi_c. Each entry carries its two
/// classifying coefficients; exactly p-1 entries have c_big = 0.
std::vector<ClassifiedRoot> enumerate_primitive_p2_roots(long p, const Rat& prec);

/// Cyclotomic-style input polynomials with exact integer coefficients.
MNPoly cyclotomic_poly_p(long p, const Rat& coeff_prec);     // (T^p - 1)/(T - 1)
MNPoly cyclotomic_poly_p2(long p, const Rat& coeff_prec);    // (T^p2 - 1)/(T^p - 1)

} // namespace mnp
