#include "mnp/newton.hpp"

#include <algorithm>

#include "mnp/errors.hpp"
#include "mnp/util.hpp"

namespace mnp {

namespace {

struct RawPoint {
    int i;     // reversed abscissa, 0 = leading coefficient
    Rat v;     // valuation, or precision floor when uncertain
    bool certain;
};

Rat hull_height_at(const std::vector<RawPoint>& hull, const Rat& x) {
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        Rat x1(hull[s].i), x2(hull[s + 1].i);
        if (x < x1 || x > x2) continue;
        return hull[s].v + (hull[s + 1].v - hull[s].v) * (x - x1) / (x2 - x1);
    }
    throw InternalError("hull query outside span");
}

/// Lower hull of the certain points; uncertain points must stay strictly
/// above it or the polygon is ambiguous.
NewtonPolygon build_polygon(const std::vector<RawPoint>& pts) {
    std::vector<RawPoint> certain;
    for (const RawPoint& p : pts)
        if (p.certain) certain.push_back(p);
    if (certain.size() < 2) throw InsufficientPrecision("too few certain points for a polygon");

    std::vector<RawPoint> hull;
    for (const RawPoint& p : certain) {
        while (hull.size() >= 2) {
            const RawPoint& a = hull[hull.size() - 2];
            const RawPoint& b = hull[hull.size() - 1];
            // keep turn strictly convex; drop b when it is on or above a-p
            Rat lhs = (b.v - a.v) * Rat(p.i - a.i);
            Rat rhs = (p.v - a.v) * Rat(b.i - a.i);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    for (const RawPoint& p : pts) {
        if (p.certain) continue;
        if (p.i < hull.front().i || p.i > hull.back().i)
            throw InternalError("uncertain point outside hull span");
        Rat h = hull_height_at(hull, Rat(p.i));
        if (!(p.v > h))
            throw InsufficientPrecision("coefficient precision too low to fix the polygon");
    }
    NewtonPolygon poly;
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        PolygonSegment seg;
        seg.left_i = hull[s].i;
        seg.left_v = hull[s].v;
        seg.right_i = hull[s + 1].i;
        seg.right_v = hull[s + 1].v;
        seg.slope = (seg.right_v - seg.left_v) / Rat(seg.right_i - seg.left_i);
        seg.length = seg.right_i - seg.left_i;
        poly.segments.push_back(std::move(seg));
    }
    poly.s_max = poly.segments.back().slope;
    poly.m_max = poly.segments.back().left_i;
    return poly;
}

std::vector<RawPoint> polygon_points(const MNPoly& P, bool constant_at_floor) {
    int n = P.degree();
    std::vector<RawPoint> pts;
    for (int j = n; j >= 0; --j) {
        const MNSeries& a = P.coeffs[j];
        int i = n - j;
        if (!a.terms().empty())
            pts.push_back({i, *a.valuation(), true});
        else if (j == 0 && constant_at_floor)
            pts.push_back({i, a.prec(), true}); // pessimistic floor as a real point
        else
            pts.push_back({i, a.prec(), false});
    }
    return pts;
}

NewtonPolygon polygon_of(const MNPoly& P) { return build_polygon(polygon_points(P, false)); }

FFPoly segment_residue(const MNPoly& P, const PolygonSegment& seg) {
    int n = P.degree();
    const Field* f = P.coeffs[0].field_ptr();
    FFPoly res(seg.length + 1, ff_zero(f));
    for (int k = 0; k <= seg.length; ++k) {
        int j = n - seg.right_i + k; // coefficient index of T^j
        Rat idx = seg.left_v + seg.slope * Rat(seg.length - k);
        res[k] = P.coeffs[j].coeff(idx); // throws InsufficientPrecision when idx >= prec
    }
    return fp_normalize(std::move(res));
}

/// Lower bound for the exponent of the next digit along any continuing
/// branch: the least polygon slope exceeding last_exp, with an empty constant
/// term pinned at its precision floor.
Rat next_digit_bound(const MNPoly& P, const std::optional<Rat>& last_exp) {
    NewtonPolygon poly = build_polygon(polygon_points(P, true));
    for (const PolygonSegment& seg : poly.segments)
        if (!last_exp || seg.slope > *last_exp) return seg.slope;
    // every remaining root sits at or below digits we already placed; report
    // the top slope as the (vacuous) bound
    return poly.s_max;
}

MNPoly deflate_by_T(const MNPoly& P) {
    MNPoly Q;
    Q.coeffs.assign(P.coeffs.begin() + 1, P.coeffs.end());
    return Q;
}

struct Walker {
    const MNPoly* original = nullptr;
    Rat target;
    int max_steps = 0;
    long node_budget = 0;
    long nodes = 0;
    std::vector<NewtonBranchResult> results;

    void emit(const MNSeries& root, NewtonStatus status, int steps,
              const std::vector<std::pair<Rat, FFElem>>& path, int multiplicity) {
        NewtonBranchResult r;
        r.root = root;
        r.status = status;
        r.steps = steps;
        r.branch_path = path;
        r.multiplicity = multiplicity;
        MNSeries val = poly_eval(*original, root);
        r.achieved = val.vlb();
        r.achieved_exact = !val.terms().empty();
        results.push_back(std::move(r));
    }

    MNSeries finalize_root(const Field* f, const std::vector<std::pair<Rat, FFElem>>& digits,
                           const Rat& prec) const {
        std::vector<MNSeries::Term> terms;
        for (const auto& [e, c] : digits)
            if (e < prec) terms.push_back({e, embed(c, f)});
        return MNSeries::from_sorted(f, std::move(terms), prec);
    }

    void walk(MNPoly phi, std::vector<std::pair<Rat, FFElem>> digits,
              std::optional<Rat> last_exp, int mult, int steps) {
        if (++nodes > node_budget) throw BranchExplosion("newton branch tree exceeded node budget");
        while (true) {
            const Field* f = phi.coeffs[0].field_ptr();

            // exact hits: the accumulated digits are a root as far as the
            // arithmetic can see; deflate and continue into the remaining ones
            int exact_hits = 0;
            while (phi.degree() >= 1 && phi.coeffs[0].terms().empty() && exact_hits < mult) {
                ++exact_hits;
                phi = deflate_by_T(phi);
            }
            if (exact_hits > 0) {
                Rat bound = phi.degree() >= 1 ? next_digit_bound(phi, last_exp)
                                              : phi.coeffs[0].prec();
                emit(finalize_root(f, digits, bound), NewtonStatus::ExactAtPrecision, steps,
                     digits, exact_hits);
                mult -= exact_hits;
                if (mult == 0 || phi.degree() == 0) return;
            }

            NewtonPolygon poly = polygon_of(phi);
            std::vector<PolygonSegment> allowed;
            for (const PolygonSegment& seg : poly.segments)
                if (!last_exp || seg.slope > *last_exp) allowed.push_back(seg);
            int allowed_count = 0;
            for (const PolygonSegment& seg : allowed) allowed_count += seg.length;
            if (allowed_count != mult)
                throw InternalError("branch root count does not match polygon");

            // segments whose slope already reaches the target close out here
            std::vector<PolygonSegment> go;
            int stopped = 0;
            std::optional<Rat> stop_prec;
            for (const PolygonSegment& seg : allowed) {
                if (seg.slope >= target) {
                    stopped += seg.length;
                    if (!stop_prec || seg.slope < *stop_prec) stop_prec = seg.slope;
                } else {
                    go.push_back(seg);
                }
            }
            if (stopped > 0)
                emit(finalize_root(f, digits, *stop_prec), NewtonStatus::TargetReached, steps,
                     digits, stopped);
            if (go.empty()) return;

            if (steps >= max_steps) {
                Rat bound = go.front().slope; // least continuing slope
                int remaining = 0;
                for (const PolygonSegment& seg : go) remaining += seg.length;
                emit(finalize_root(f, digits, bound), NewtonStatus::IterationCapped, steps,
                     digits, remaining);
                return;
            }

            // descend: recurse into all but one child, iterate on the last
            struct Child {
                PolygonSegment seg;
                FFElem c;
                int mult;
                const Field* fld;
            };
            std::vector<Child> children;
            for (const PolygonSegment& seg : go) {
                FFPoly res = segment_residue(phi, seg);
                auto [roots, rf] = split_completely(res, f);
                for (size_t i = 0; i < roots.size();) {
                    size_t j = i;
                    while (j < roots.size() && ff_eq(roots[j], roots[i])) ++j;
                    children.push_back({seg, roots[i], static_cast<int>(j - i), rf});
                    i = j;
                }
            }
            for (size_t ci = 0; ci + 1 < children.size(); ++ci) {
                const Child& ch = children[ci];
                MNPoly phi_c = phi;
                const Field* cf = poly_unify(phi_c);
                if (ch.fld != cf) {
                    for (MNSeries& s : phi_c.coeffs) s = re_ambient(s, ch.fld);
                }
                MNPoly shifted = poly_shift(phi_c, ch.c, ch.seg.slope);
                auto d2 = digits;
                d2.emplace_back(ch.seg.slope, ch.c);
                walk(std::move(shifted), std::move(d2), ch.seg.slope, ch.mult, steps + 1);
            }
            const Child& ch = children.back();
            if (ch.fld != f)
                for (MNSeries& s : phi.coeffs) s = re_ambient(s, ch.fld);
            phi = poly_shift(phi, ch.c, ch.seg.slope);
            digits.emplace_back(ch.seg.slope, ch.c);
            last_exp = ch.seg.slope;
            mult = ch.mult;
            ++steps;
        }
    }
};

void validate_input(const MNPoly& P) {
    if (P.coeffs.empty() || P.degree() < 1)
        throw DegenerateInput("newton iteration needs a non-constant polynomial");
    if (P.coeffs.back().terms().empty())
        throw DegenerateInput("leading coefficient is zero at precision");
}

} // namespace

const Field* poly_unify(MNPoly& P) {
    if (P.coeffs.empty()) throw DegenerateInput("empty polynomial");
    long p = P.coeffs[0].p();
    int K = 1;
    for (const MNSeries& s : P.coeffs) {
        if (s.p() != p) throw PrimeMismatch("polynomial coefficients over different primes");
        K = static_cast<int>(lcm_long(K, s.field_ptr()->k));
    }
    const Field* f = field(p, K);
    for (MNSeries& s : P.coeffs) s = re_ambient(s, f);
    return f;
}

MNSeries poly_eval(const MNPoly& P, const MNSeries& x) {
    if (P.coeffs.empty()) throw DegenerateInput("empty polynomial");
    MNSeries acc = P.coeffs.back();
    for (size_t i = P.coeffs.size() - 1; i-- > 0;) acc = mn_add(mn_mul(acc, x), P.coeffs[i]);
    return acc;
}

MNPoly poly_shift(const MNPoly& P0, const FFElem& c, const Rat& s) {
    MNPoly P = P0;
    const Field* f = poly_unify(P);
    FFElem cc = embed(c, f);
    int n = P.degree();
    // powers of the shift monomial [c] p^s
    std::vector<FFElem> cpow(n + 1, ff_one(f));
    for (int t = 1; t <= n; ++t) cpow[t] = ff_mul(cpow[t - 1], cc);
    MNPoly out;
    out.coeffs.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        MNSeries acc = P.coeffs[i];
        for (int j = i + 1; j <= n; ++j) {
            MNSeries term = mn_mul_monomial(P.coeffs[j], cpow[j - i], s * Rat(j - i));
            acc = mn_add(acc, mn_scale_int(term, binomial(j, i)));
        }
        out.coeffs.push_back(std::move(acc));
    }
    return out;
}

NewtonPolygon newton_polygon(const MNPoly& P0) {
    MNPoly P = P0;
    validate_input(P);
    poly_unify(P);
    while (P.degree() >= 1 && P.coeffs[0].terms().empty()) P = deflate_by_T(P);
    if (P.degree() < 1) throw DegenerateInput("all roots are zero at precision; no polygon");
    return polygon_of(P);
}

FFPoly residue_polynomial(const MNPoly& P0) {
    MNPoly P = P0;
    validate_input(P);
    poly_unify(P);
    if (P.coeffs[0].terms().empty())
        throw InsufficientPrecision("constant term is zero at precision");
    NewtonPolygon poly = polygon_of(P);
    return segment_residue(P, poly.segments.back());
}

const char* status_name(NewtonStatus s) {
    switch (s) {
        case NewtonStatus::ExactAtPrecision: return "exact_at_precision";
        case NewtonStatus::TargetReached: return "target_reached";
        case NewtonStatus::IterationCapped: return "iteration_capped";
    }
    return "?";
}

NewtonStep newton_step(const MNPoly& P0, const FFElem& chosen_root) {
    MNPoly P = P0;
    validate_input(P);
    const Field* f = poly_unify(P);
    if (P.coeffs[0].terms().empty())
        throw InsufficientPrecision("constant term is zero at precision");
    NewtonPolygon poly = polygon_of(P);
    FFPoly res = segment_residue(P, poly.segments.back());
    const Field* cf = field(f->p, static_cast<int>(lcm_long(f->k, chosen_root.f->k)));
    FFElem c = embed(chosen_root, cf);
    FFPoly res_c = fp_embed(res, cf);
    if (!fp_eval(res_c, c).is_zero())
        throw NotAResidueRoot("chosen digit is not a residue root");
    if (cf != f)
        for (MNSeries& ss : P.coeffs) ss = re_ambient(ss, cf);
    Rat old_v = P.coeffs[0].vlb();
    NewtonStep step;
    step.shifted = poly_shift(P, c, poly.s_max);
    step.increment = MNSeries::monomial(c, poly.s_max, poly.s_max + 1);
    if (!(step.shifted.coeffs[0].vlb() > old_v))
        throw InternalError("newton step did not increase the constant valuation");
    return step;
}

NewtonBranchResult newton_root(const MNPoly& P0, const Rat& target_prec, int max_steps) {
    MNPoly P = P0;
    validate_input(P);
    const Field* f = poly_unify(P);
    std::vector<std::pair<Rat, FFElem>> digits;
    std::optional<Rat> last;
    int steps = 0;
    auto finish = [&](NewtonStatus st, const Rat& prec) {
        std::vector<MNSeries::Term> terms;
        for (const auto& [e, c] : digits)
            if (e < prec) terms.push_back({e, embed(c, f)});
        NewtonBranchResult r;
        r.root = MNSeries::from_sorted(f, std::move(terms), prec);
        r.status = st;
        r.steps = steps;
        r.branch_path = digits;
        MNSeries val = poly_eval(P0, r.root);
        r.achieved = val.vlb();
        r.achieved_exact = !val.terms().empty();
        return r;
    };
    while (true) {
        if (P.coeffs[0].terms().empty())
            return finish(NewtonStatus::ExactAtPrecision, next_digit_bound(P, last));
        NewtonPolygon poly = polygon_of(P);
        if (poly.s_max >= target_prec) return finish(NewtonStatus::TargetReached, poly.s_max);
        if (steps >= max_steps) return finish(NewtonStatus::IterationCapped, poly.s_max);
        FFPoly res = segment_residue(P, poly.segments.back());
        auto [roots, rf] = split_completely(res, f);
        if (roots.empty()) throw InternalError("residue polynomial has no roots");
        FFElem c = roots.front(); // canonical minimal branch
        if (rf != f) {
            f = rf;
            for (MNSeries& s : P.coeffs) s = re_ambient(s, f);
        }
        P = poly_shift(P, c, poly.s_max);
        digits.emplace_back(poly.s_max, c);
        last = poly.s_max;
        ++steps;
    }
}

std::vector<NewtonBranchResult> newton_all_roots(const MNPoly& P0, const Rat& target_prec,
                                                 int max_steps, long node_budget) {
    MNPoly P = P0;
    validate_input(P);
    poly_unify(P);
    Walker w;
    w.original = &P0;
    w.target = target_prec;
    w.max_steps = max_steps;
    w.node_budget = node_budget;
    w.walk(P, {}, std::nullopt, P.degree(), 0);

    auto path_less = [](const NewtonBranchResult& a, const NewtonBranchResult& b) {
        const auto& x = a.branch_path;
        const auto& y = b.branch_path;
        for (size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
            if (x[i].first != y[i].first) return x[i].first < y[i].first;
            if (x[i].second.c != y[i].second.c) return x[i].second.c < y[i].second.c;
        }
        return x.size() < y.size();
    };
    std::stable_sort(w.results.begin(), w.results.end(), path_less);
    int total = 0;
    for (const auto& r : w.results) total += r.multiplicity;
    if (total != P.degree()) throw InternalError("branch multiplicities do not sum to the degree");
    return w.results;
}

} // namespace mnp
