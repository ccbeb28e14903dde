#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mnp/errors.hpp"

namespace mnp {

using Int = mpz_class;
using Rat = mpq_class; // always kept in lowest terms with positive denominator

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "a", "-a" or "a/b".
inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rat(Int(s), Int(1));
        return rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

/// Fractional part in [0, 1).
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw InternalError("integer out of range: " + z.get_str());
    return z.get_si();
}

inline long rat_to_long(const Rat& q) {
    if (!rat_is_integer(q)) throw InternalError("expected integer rational");
    return to_long(q.get_num());
}

inline std::string rat_str(const Rat& q) {
    if (rat_is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace mnp
