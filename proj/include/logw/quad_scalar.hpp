#pragma once

#include <string>

#include "logw/errors.hpp"
#include "logw/rational.hpp"

namespace logw {

// Element a + b*sqrt(p) of the quadratic ring Q(sqrt p). For a perfect-square
// p the representation stays formal (never collapsed to Q), so inversion can
// fail on zero divisors; that case is reported, not silently evaluated.
struct QuadScalar {
    Rat a = 0, b = 0;

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const QuadScalar& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QuadScalar& o) const { return !(*this == o); }
};

inline QuadScalar quad_rat(Rat r) { return {std::move(r), Rat(0)}; }
inline QuadScalar quad_sqrtp(Rat r) { return {Rat(0), std::move(r)}; }

inline QuadScalar quad_add(const QuadScalar& x, const QuadScalar& y) { return {x.a + y.a, x.b + y.b}; }
inline QuadScalar quad_sub(const QuadScalar& x, const QuadScalar& y) { return {x.a - y.a, x.b - y.b}; }
inline QuadScalar quad_neg(const QuadScalar& x) { return {-x.a, -x.b}; }

inline QuadScalar quad_mul(const QuadScalar& x, const QuadScalar& y, long long p) {
    return {x.a * y.a + to_rat(p) * x.b * y.b, x.a * y.b + x.b * y.a};
}

inline QuadScalar quad_scale(const QuadScalar& x, const Rat& r) { return {x.a * r, x.b * r}; }

inline QuadScalar quad_inv(const QuadScalar& x, long long p) {
    Rat n = x.a * x.a - to_rat(p) * x.b * x.b;
    if (n == 0) throw InternalError("element of Q(sqrt p) not invertible");
    return {x.a / n, -x.b / n};
}

inline QuadScalar quad_pow(const QuadScalar& x, long long k, long long p) {
    QuadScalar acc = quad_rat(1);
    for (long long i = 0; i < k; ++i) acc = quad_mul(acc, x, p);
    return acc;
}

inline std::string quad_str(const QuadScalar& x) {
    if (x.b == 0) return rat_str(x.a);
    std::string s = x.a == 0 ? "" : rat_str(x.a) + "+";
    return s + "(" + rat_str(x.b) + ")r";
}

} // namespace logw
