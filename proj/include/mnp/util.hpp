#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mnp/rational.hpp"

namespace mnp {

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    Int l = lcm(Int(a), Int(b));
    return to_long(l);
}

inline bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<long, int>> factorize_long(long n) {
    std::vector<std::pair<long, int>> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1, m >= 1.
inline long ord_mod(long a, long m) {
    if (m == 1) return 1;
    if (gcd_long(a, m) != 1) throw InternalError("ord_mod of non-unit");
    long x = ((a % m) + m) % m, t = 1;
    long cur = x;
    while (cur != 1) {
        cur = to_long(Int(Int(cur) * x) % m);
        ++t;
        if (t > m) throw InternalError("ord_mod did not terminate");
    }
    return t;
}

/// Exponent of p in z (z nonzero).
inline long int_vp(Int z, long p) {
    if (z == 0) throw InternalError("valuation of zero integer");
    long v = 0;
    while (mpz_divisible_ui_p(z.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

inline Int int_pow(long base, long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

inline Int binomial(long n, long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform for a given seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    long uniform(long n) { return static_cast<long>(below(static_cast<std::uint64_t>(n))); }
};

} // namespace mnp
