#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mnp/ff_poly.hpp"
#include "mnp/series.hpp"

namespace mnp {

/// Polynomial over truncated series, constant term first (coeffs[i]
/// multiplies T^i). The leading coefficient must be nonzero at its precision.
struct MNPoly {
    std::vector<MNSeries> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Brings all coefficients into one ambient field and returns it.
const Field* poly_unify(MNPoly& P);
MNSeries poly_eval(const MNPoly& P, const MNSeries& x);
/// P(T + [c] p^s) by binomial expansion with exact integer binomials.
MNPoly poly_shift(const MNPoly& P, const FFElem& c, const Rat& s);

/// Abscissas follow the reversed indexing: the point for the coefficient of
/// T^(n-i) sits at abscissa i, so the leading coefficient is at i = 0 and
/// the constant term at i = n. With this convention the slopes of the lower
/// convex hull are exactly the valuations of the roots.
struct PolygonSegment {
    int left_i;
    Rat left_v;
    int right_i;
    Rat right_v;
    Rat slope;
    int length; // right_i - left_i
};

struct NewtonPolygon {
    std::vector<PolygonSegment> segments; // slopes strictly increasing
    Rat s_max;                            // slope of the last segment
    int m_max;                            // abscissa of its left endpoint
};

/// Lower convex hull of the coefficient valuations. Coefficients that are
/// zero at their precision only contribute an uncertainty floor: if such a
/// floor does not lie strictly above the hull the polygon is ambiguous and
/// InsufficientPrecision is raised. A constant term that is zero at
/// precision is handled by stripping the corresponding zero roots first
/// (factor-out-T convention); stripping everything raises DegenerateInput.
NewtonPolygon newton_polygon(const MNPoly& P);

/// The residue polynomial along the maximal-slope segment; its roots are the
/// candidate next digits of maximal-valuation roots.
FFPoly residue_polynomial(const MNPoly& P);

struct NewtonStep {
    MNSeries increment;
    MNPoly shifted;
};

/// One update r <- r + [c] p^(s_max), Phi <- Phi(T + [c] p^(s_max)).
/// chosen_root must be a root of residue_polynomial(P), and the constant
/// term must be nonzero at precision.
NewtonStep newton_step(const MNPoly& P, const FFElem& chosen_root);

enum class NewtonStatus { ExactAtPrecision, TargetReached, IterationCapped };

const char* status_name(NewtonStatus s);

struct NewtonBranchResult {
    MNSeries root;
    NewtonStatus status;
    int steps = 0;
    std::vector<std::pair<Rat, FFElem>> branch_path; // chosen digits in order
    int multiplicity = 1;
    /// Lower bound on v_p(P(root)), from evaluating P at the root.
    Rat achieved;
    bool achieved_exact = false; // true when P(root) has a visible leading term
};

/// Single-branch iteration: always follows the maximal slope and the
/// lexicographically minimal residue root. target_prec bounds the root
/// digits: the run stops once the next digit exponent reaches it.
NewtonBranchResult newton_root(const MNPoly& P, const Rat& target_prec, int max_steps);

/// Depth-first enumeration of every branch. Each node branches over every
/// polygon segment whose slope exceeds the exponent of the branch's last
/// digit (so each root of P lands in exactly one branch), and over every
/// residue root of that segment with its multiplicity. Exact hits deflate
/// the polynomial and continue into the remaining roots. Results are sorted
/// by branch path and their multiplicities sum to deg P.
std::vector<NewtonBranchResult> newton_all_roots(const MNPoly& P, const Rat& target_prec,
                                                 int max_steps, long node_budget = 20000);

} // namespace mnp
