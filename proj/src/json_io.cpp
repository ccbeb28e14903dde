#include "mnp/json_io.hpp"

#include "mnp/errors.hpp"
#include "mnp/util.hpp"

namespace mnp {

namespace {

long json_long(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("expected integer for ") + what);
    return j.get<long>();
}

} // namespace

Json rat_to_json(const Rat& q) {
    Json j;
    j["num"] = to_long(Int(q.get_num()));
    j["den"] = to_long(Int(q.get_den()));
    return j;
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("rational must be an integer, \"a/b\" string, or {num, den}");
    Rat q(json_long(j["num"], "num"), json_long(j["den"], "den"));
    if (j["den"].get<long>() <= 0) throw ParseError("rational denominator must be positive");
    q.canonicalize();
    if (q.get_num() != json_long(j["num"], "num") || q.get_den() != json_long(j["den"], "den"))
        throw ParseError("rational not in lowest terms");
    return q;
}

Json series_to_json(const MNSeries& a) {
    Json j;
    j["p"] = a.p();
    j["field"] = Json{{"degree", a.field_ptr()->k}, {"modulus", a.field_ptr()->modulus}};
    j["precision"] = rat_to_json(a.prec());
    Json terms = Json::array();
    for (const auto& t : a.terms()) {
        Json term;
        term["exp"] = rat_to_json(t.exp);
        term["coeff"] = t.coeff.c;
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

MNSeries series_from_json(const Json& j) {
    try {
        long p = json_long(j.at("p"), "p");
        const Json& fld = j.at("field");
        int degree = static_cast<int>(json_long(fld.at("degree"), "degree"));
        const Field* f = field(p, degree);
        std::vector<long> modulus = fld.at("modulus").get<std::vector<long>>();
        if (modulus != f->modulus)
            throw ParseError("modulus does not match the canonical modulus for this (p, degree)");
        Rat prec = rat_from_json(j.at("precision"));
        std::vector<MNSeries::Term> terms;
        for (const Json& tj : j.at("terms")) {
            Rat e = rat_from_json(tj.at("exp"));
            std::vector<long> coords = tj.at("coeff").get<std::vector<long>>();
            if (static_cast<int>(coords.size()) != degree)
                throw ParseError("coefficient vector length does not match field degree");
            for (long x : coords)
                if (x < 0 || x >= p) throw ParseError("coefficient coordinate out of range");
            FFElem c{f, coords};
            if (c.is_zero()) throw ParseError("zero coefficient in canonical series");
            if (!(e < prec)) throw ParseError("term exponent at or beyond the precision");
            if (!terms.empty() && !(terms.back().exp < e))
                throw ParseError("term exponents not strictly increasing");
            terms.push_back({e, c});
        }
        return MNSeries::from_sorted(f, std::move(terms), prec);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed series JSON: ") + e.what());
    }
}

Json poly_to_json(const MNPoly& P) {
    Json j;
    if (P.coeffs.empty()) throw DegenerateInput("cannot serialize an empty polynomial");
    j["p"] = P.coeffs[0].p();
    Json coeffs = Json::array();
    for (const MNSeries& c : P.coeffs) coeffs.push_back(series_to_json(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

MNPoly poly_from_json(const Json& j) {
    try {
        long p = json_long(j.at("p"), "p");
        Rat default_prec = rat(6);
        bool has_default = j.contains("default_precision");
        if (has_default) default_prec = rat_from_json(j.at("default_precision"));
        MNPoly P;
        for (const Json& cj : j.at("coeffs")) {
            if (cj.is_number_integer()) {
                P.coeffs.push_back(
                    MNSeries::from_rational(Int(cj.get<long>()), Int(1), p, default_prec));
            } else {
                MNSeries s = series_from_json(cj);
                if (s.p() != p) throw ParseError("coefficient prime differs from polynomial prime");
                P.coeffs.push_back(std::move(s));
            }
        }
        if (P.coeffs.empty()) throw ParseError("polynomial needs at least one coefficient");
        return P;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

Json invariant_report_to_json(const InvariantReport& r) {
    Json j;
    j["tame_index"] = r.tame_index;
    j["inertia_index"] = r.inertia_index;
    j["precision"] = rat_to_json(r.precision_used);
    j["lower_bound_only"] = r.lower_bound_only;
    return j;
}

Json tame_verdict_to_json(const TameVerdict& v) {
    Json j;
    j["tame"] = v.tame;
    j["e"] = v.e;
    j["c"] = v.c ? Json(*v.c) : Json(nullptr);
    if (v.inertia_divides_c)
        j["divisibility_ok"] = *v.inertia_divides_c && *v.known_f_divides_inertia;
    else
        j["divisibility_ok"] = nullptr;
    return j;
}

Json branch_result_to_json(const NewtonBranchResult& r) {
    Json j = series_to_json(r.root);
    j["status"] = status_name(r.status);
    j["steps"] = r.steps;
    j["multiplicity"] = r.multiplicity;
    j["achieved"] = rat_to_json(r.achieved);
    Json path = Json::array();
    for (const auto& [e, c] : r.branch_path) {
        Json entry;
        entry["exp"] = rat_to_json(e);
        entry["digit"] = c.c;
        path.push_back(std::move(entry));
    }
    j["branch_path"] = std::move(path);
    return j;
}

Character character_from_json(const Json& j) {
    try {
        long p = json_long(j.at("p"), "p");
        std::vector<std::pair<Rat, FFElem>> assignments;
        int degree = 1;
        if (j.contains("field"))
            degree = static_cast<int>(json_long(j.at("field").at("degree"), "degree"));
        for (const Json& aj : j.at("assignments")) {
            Rat q = rat_from_json(aj.at("q"));
            std::vector<long> coords = aj.at("value").get<std::vector<long>>();
            int d = j.contains("field") ? degree : static_cast<int>(coords.size());
            const Field* f = field(p, d);
            if (static_cast<int>(coords.size()) != f->k)
                throw ParseError("character value length does not match field degree");
            assignments.emplace_back(q, ff_make(f, coords));
        }
        return Character(p, assignments);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed character JSON: ") + e.what());
    }
}

} // namespace mnp
