#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mnp/newton.hpp"
#include "mnp/series.hpp"

namespace mnp {

/// Minimal e with the observed support inside (1/e)Z[1/p]: write each
/// exponent as u p^v / w in lowest terms with w coprime to p and take the
/// lcm of the w. Empty support gives 1. Always coprime to p.
long tame_index_estimate(const MNSeries& a);

/// lcm of the subfield degrees of the observed coefficients; 1 when empty.
long inertia_index_estimate(const MNSeries& a);

/// Both estimates with the precision they were read at. The estimates are
/// lower bounds: terms beyond the precision can only enlarge them.
struct InvariantReport {
    long tame_index = 1;
    long inertia_index = 1;
    Rat precision_used;
    bool lower_bound_only = true;
    // certificates: the per-term data the lcms were built from
    std::vector<std::pair<Rat, long>> tame_certificate;    // (exponent, stripped denominator)
    std::vector<std::pair<Rat, long>> inertia_certificate; // (exponent, subfield degree)
};

InvariantReport invariant_report(const MNSeries& a);

/// Ramification verdict from the support shape: the extension generated by
/// the (exact) element is tame iff the support lies in (1/e)Z with
/// e = tame_index, i.e. no exponent denominator carries a factor of p. The
/// verdict is precision-qualified: a wild tail beyond prec is invisible.
struct TameVerdict {
    bool tame = false;
    long e = 1; // ramification-index candidate (= tame index when tame)
    std::optional<long> c;
    std::optional<bool> inertia_divides_c;    // inertia estimate divides c
    std::optional<bool> known_f_divides_inertia;
};

TameVerdict tame_criterion(const MNSeries& a, std::optional<long> known_f = std::nullopt);

/// Element of Q_{p^f}(p^(1/e) [zeta_e]) with pseudo-random digits:
/// sum over k < e, i >= 0 of [c_i^(k) zeta_e^k] p^(i + k/e) with the
/// c_i^(k) drawn from F_{p^f} deterministically from the seed and zeta_e the
/// canonical primitive e-th root of unity. Requires gcd(e, p) = 1.
MNSeries random_tame_element(long p, long e, long f, const Rat& prec, std::uint64_t seed);

/// Invariant estimates of every root of P, one entry per root counted with
/// multiplicity, ordered by branch path.
std::vector<std::pair<long, long>> invariant_profile(const MNPoly& P, const Rat& target_prec,
                                                     int max_steps = 64);

} // namespace mnp
