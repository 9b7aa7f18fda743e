#pragma once

#include <gmpxx.h>
#include <string>

namespace logw {

using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat to_rat(long long x) { return Rat(static_cast<long>(x)); }

inline Rat rat_frac(long long num, long long den) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline Rat rat_parse(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

// floor(a/b) for exact rationals
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline long long floordiv(long long a, long long b) {
    long long q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

} // namespace logw
