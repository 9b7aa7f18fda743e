#pragma once

#include <map>
#include <string>

#include "logw/root_data.hpp"

namespace logw {

// Exact formal q-series with rational exponents, truncated: exponents above
// `order` are absent by contract, exponents <= order are complete.
struct QSeries {
    std::map<Rat, Rat> terms;
    Rat order = 0;

    explicit QSeries(Rat ord = 0) : order(std::move(ord)) {}
    bool is_zero() const { return terms.empty(); }
    bool operator==(const QSeries& o) const { return order == o.order && terms == o.terms; }
};

void qs_add_term(QSeries& s, const Rat& exp, const Rat& coeff);
QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_scale(QSeries a, const Rat& c);
QSeries qs_truncate(QSeries a, const Rat& new_order); // new_order <= order

// q^{-l/24} times the l-fold partition generating function, complete to `order`
QSeries eta_inverse_power(int l, const Rat& order);

// Laurent polynomial in z, exponents in fundamental-weight coordinates
using ZPoly = std::map<Weight, Rat>;

ZPoly zp_monomial(const Weight& w, const Rat& c = 1);
ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
Rat zp_eval_at_one(const ZPoly& a);

// Exact series in q and z: map from z-exponent to a q-series, all sharing one
// truncation order.
struct QZSeries {
    std::map<Weight, QSeries> terms;
    Rat order = 0;

    explicit QZSeries(Rat ord = 0) : order(std::move(ord)) {}
    bool operator==(const QZSeries& o) const { return order == o.order && terms == o.terms; }
};

void qz_add_term(QZSeries& s, const Weight& z, const Rat& qexp, const Rat& coeff);
QZSeries qz_add(const QZSeries& a, const QZSeries& b);
QZSeries qz_mul(const QZSeries& a, const QZSeries& b);
QZSeries qz_mul_zpoly(const ZPoly& a, const QZSeries& b);
QZSeries qz_mul_qseries(const QSeries& a, const QZSeries& b);
QZSeries qz_truncate(QZSeries a, const Rat& new_order);
QSeries qz_eval_z_at_one(const QZSeries& a);
QZSeries qz_from_zpoly(const ZPoly& a, const Rat& order);

// one line per term: `q^{a/b} z^(c1,...,cl) : r/s`, sorted by (q-exponent, z lex)
std::string qz_dump_text(const QZSeries& s);

// Exact quotient of Laurent polynomials under the monomial order in which the
// constant term of the product over negative roots of (1 - z^gamma) leads;
// throws InternalError if any remainder survives.
ZPoly laurent_divide_exact(const RootSystemData& rs, const ZPoly& num, const ZPoly& den);

// product over negative roots gamma of (1 - z^gamma)
ZPoly weyl_denominator_poly(const RootSystemData& rs);

// Weyl character of the irreducible module with dominant highest weight beta,
// as an exact z-Laurent polynomial
ZPoly weyl_character(const RootSystemData& rs, const Weight& beta, const Caps& caps = Caps{});
ZPoly weyl_character(const RootSystemData& rs, const Weight& beta,
                     const std::vector<WeylElement>& weyl, const ZPoly& denom);

} // namespace logw
