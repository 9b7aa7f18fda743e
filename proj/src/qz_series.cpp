#include "logw/qz_series.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "logw/errors.hpp"

namespace logw {

void qs_add_term(QSeries& s, const Rat& exp, const Rat& coeff) {
    if (coeff == 0 || exp > s.order) return;
    auto it = s.terms.find(exp);
    if (it == s.terms.end()) {
        s.terms.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) s.terms.erase(it);
    }
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
    QSeries out(std::min(a.order, b.order));
    for (const auto& [e, c] : a.terms) qs_add_term(out, e, c);
    for (const auto& [e, c] : b.terms) qs_add_term(out, e, c);
    return out;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
    QSeries out(std::min(a.order, b.order));
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) qs_add_term(out, ea + eb, ca * cb);
    return out;
}

QSeries qs_scale(QSeries a, const Rat& c) {
    if (c == 0) return QSeries(a.order);
    for (auto& [e, v] : a.terms) v *= c;
    return a;
}

QSeries qs_truncate(QSeries a, const Rat& new_order) {
    if (new_order > a.order) throw ArgumentError("cannot extend a truncated series");
    a.order = new_order;
    while (!a.terms.empty()) {
        auto it = std::prev(a.terms.end());
        if (it->first <= new_order) break;
        a.terms.erase(it);
    }
    return a;
}

QSeries eta_inverse_power(int l, const Rat& order) {
    if (l < 0) throw ArgumentError("negative power");
    Rat shift(-l, 24);
    shift.canonicalize();
    long long kmax = -1;
    {
        Rat top = order - shift;
        if (top >= 0) kmax = static_cast<long long>(rat_floor(top).get_si());
    }
    QSeries out(order);
    if (kmax < 0) return out;
    std::vector<Rat> c(kmax + 1, 0);
    c[0] = 1;
    for (long long n = 1; n <= kmax; ++n)
        for (int rep = 0; rep < l; ++rep)
            for (long long k = n; k <= kmax; ++k) c[k] += c[k - n];
    for (long long k = 0; k <= kmax; ++k) qs_add_term(out, shift + to_rat(k), c[k]);
    return out;
}

ZPoly zp_monomial(const Weight& w, const Rat& c) {
    ZPoly p;
    if (c != 0) p[w] = c;
    return p;
}

static void zp_add_term(ZPoly& p, const Weight& w, const Rat& c) {
    if (c == 0) return;
    auto it = p.find(w);
    if (it == p.end()) {
        p.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly out = a;
    for (const auto& [w, c] : b) zp_add_term(out, w, c);
    return out;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    ZPoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) zp_add_term(out, wa + wb, ca * cb);
    return out;
}

Rat zp_eval_at_one(const ZPoly& a) {
    Rat acc = 0;
    for (const auto& [w, c] : a) acc += c;
    return acc;
}

void qz_add_term(QZSeries& s, const Weight& z, const Rat& qexp, const Rat& coeff) {
    if (coeff == 0 || qexp > s.order) return;
    auto it = s.terms.find(z);
    if (it == s.terms.end()) it = s.terms.emplace(z, QSeries(s.order)).first;
    qs_add_term(it->second, qexp, coeff);
    if (it->second.is_zero()) s.terms.erase(it);
}

QZSeries qz_add(const QZSeries& a, const QZSeries& b) {
    if (a.order != b.order) throw ArgumentError("truncation order mismatch");
    QZSeries out(a.order);
    for (const auto& [z, qs] : a.terms)
        for (const auto& [e, c] : qs.terms) qz_add_term(out, z, e, c);
    for (const auto& [z, qs] : b.terms)
        for (const auto& [e, c] : qs.terms) qz_add_term(out, z, e, c);
    return out;
}

QZSeries qz_mul(const QZSeries& a, const QZSeries& b) {
    if (a.order != b.order) throw ArgumentError("truncation order mismatch");
    QZSeries out(a.order);
    for (const auto& [za, qa] : a.terms)
        for (const auto& [zb, qb] : b.terms) {
            Weight z = za + zb;
            for (const auto& [ea, ca] : qa.terms)
                for (const auto& [eb, cb] : qb.terms) qz_add_term(out, z, ea + eb, ca * cb);
        }
    return out;
}

QZSeries qz_mul_zpoly(const ZPoly& a, const QZSeries& b) {
    QZSeries out(b.order);
    for (const auto& [za, ca] : a)
        for (const auto& [zb, qb] : b.terms) {
            Weight z = za + zb;
            for (const auto& [e, c] : qb.terms) qz_add_term(out, z, e, ca * c);
        }
    return out;
}

QZSeries qz_mul_qseries(const QSeries& a, const QZSeries& b) {
    QZSeries out(std::min(a.order, b.order));
    for (const auto& [zb, qb] : b.terms)
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : qb.terms) qz_add_term(out, zb, ea + eb, ca * cb);
    return out;
}

QZSeries qz_truncate(QZSeries a, const Rat& new_order) {
    if (new_order > a.order) throw ArgumentError("cannot extend a truncated series");
    QZSeries out(new_order);
    for (auto& [z, qs] : a.terms) {
        QSeries t = qs_truncate(qs, new_order);
        if (!t.is_zero()) out.terms.emplace(z, std::move(t));
    }
    return out;
}

QSeries qz_eval_z_at_one(const QZSeries& a) {
    QSeries out(a.order);
    for (const auto& [z, qs] : a.terms)
        for (const auto& [e, c] : qs.terms) qs_add_term(out, e, c);
    return out;
}

QZSeries qz_from_zpoly(const ZPoly& a, const Rat& order) {
    QZSeries out(order);
    for (const auto& [w, c] : a) qz_add_term(out, w, 0, c);
    return out;
}

std::string qz_dump_text(const QZSeries& s) {
    std::vector<std::tuple<Rat, Weight, Rat>> rows;
    for (const auto& [z, qs] : s.terms)
        for (const auto& [e, c] : qs.terms) rows.emplace_back(e, z, c);
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    for (const auto& [e, z, c] : rows) os << "q^{" << rat_str(e) << "} z^" << z.str() << " : " << rat_str(c) << "\n";
    return os.str();
}

ZPoly weyl_denominator_poly(const RootSystemData& rs) {
    ZPoly acc = zp_monomial(Weight(rs.rank), 1);
    for (const auto& alpha : rs.positive_roots) {
        ZPoly factor = zp_monomial(Weight(rs.rank), 1);
        zp_add_term(factor, -alpha, -1);
        acc = zp_mul(acc, factor);
    }
    return acc;
}

ZPoly laurent_divide_exact(const RootSystemData& rs, const ZPoly& num, const ZPoly& den) {
    if (num.empty()) return {};
    if (den.empty()) throw ArgumentError("division by zero polynomial");
    if (rs.rank > 8) throw ArgumentError("division supports rank <= 8");

    // scaled root coordinates order the monomials; every nonconstant term of
    // the standard denominator is lexicographically below the constant term.
    // Keys are fixed-size arrays so the hot reduction loop never allocates.
    using Key = std::array<int16_t, 8>;
    auto key_of = [&](const Weight& w) {
        auto rc = root_coords_scaled(rs, w);
        Key k{};
        for (int j = 0; j < rs.rank; ++j) {
            if (rc[j] > 30000 || rc[j] < -30000) throw InternalError("coordinate overflow in division");
            k[j] = static_cast<int16_t>(rc[j]);
        }
        return k;
    };

    std::vector<std::tuple<Key, Weight, Rat>> den_terms;
    const Weight zero(rs.rank);
    auto lead = den.find(zero);
    if (lead == den.end() || lead->second != 1)
        throw ArgumentError("divisor must have constant leading term 1");
    for (const auto& [w, c] : den) {
        if (w == zero) continue;
        Key k = key_of(w);
        bool nonpos = true, nonzero = false;
        for (auto x : k) {
            if (x > 0) nonpos = false;
            if (x != 0) nonzero = true;
        }
        if (!nonpos || !nonzero)
            throw ArgumentError("divisor term not below the constant under the monomial order");
        den_terms.emplace_back(k, w, c);
    }

    // Exact quotients satisfy q >= min(num) - corner(den) componentwise in
    // root coordinates: the lowest expansion corner q + corner survives
    // cancellation when the divisor attains its corner at a single monomial.
    Key corner{};
    int corner_hits = 0;
    for (const auto& [k, w, c] : den_terms)
        for (int j = 0; j < rs.rank; ++j) corner[j] = std::min(corner[j], k[j]);
    for (const auto& [k, w, c] : den_terms)
        if (k == corner) ++corner_hits;
    if (corner == Key{}) corner_hits = 1; // divisor is the constant 1
    if (corner_hits != 1) throw ArgumentError("divisor corner is not attained by a unique monomial");
    Key floor_key{};
    {
        Key m{};
        bool first = true;
        for (const auto& [w, c] : num) {
            Key k = key_of(w);
            if (first) { m = k; first = false; continue; }
            for (int j = 0; j < rs.rank; ++j) m[j] = std::min(m[j], k[j]);
        }
        for (int j = 0; j < rs.rank; ++j) floor_key[j] = static_cast<int16_t>(m[j] - corner[j]);
    }

    std::map<Key, std::pair<Weight, Rat>, std::greater<Key>> rem;
    for (const auto& [w, c] : num) rem.emplace(key_of(w), std::make_pair(w, c));

    ZPoly quot;
    while (!rem.empty()) {
        auto it = rem.begin();
        Key k = it->first;
        auto [w, c] = std::move(it->second);
        rem.erase(it);
        if (c == 0) continue;
        for (int j = 0; j < rs.rank; ++j)
            if (k[j] < floor_key[j]) throw InternalError("laurent division left a remainder");
        for (const auto& [dk, dw, dc] : den_terms) {
            Key nk = k;
            for (int j = 0; j < rs.rank; ++j) nk[j] = static_cast<int16_t>(nk[j] + dk[j]);
            auto r = rem.find(nk);
            if (r == rem.end()) {
                rem.emplace(nk, std::make_pair(w + dw, -c * dc));
            } else {
                r->second.second -= c * dc;
                if (r->second.second == 0) rem.erase(r);
            }
        }
        quot.emplace(std::move(w), std::move(c));
    }
    return quot;
}

ZPoly weyl_character(const RootSystemData& rs, const Weight& beta, const std::vector<WeylElement>& weyl,
                     const ZPoly& denom) {
    if (!beta.is_dominant()) throw ArgumentError("weyl_character: weight must be dominant");
    ZPoly numer;
    Weight shifted = beta + rs.rho;
    for (const auto& w : weyl) zp_add_term(numer, apply_weyl(w, shifted) - rs.rho, w.sign);
    return laurent_divide_exact(rs, numer, denom);
}

ZPoly weyl_character(const RootSystemData& rs, const Weight& beta, const Caps& caps) {
    return weyl_character(rs, beta, enumerate_weyl(rs, caps), weyl_denominator_poly(rs));
}

} // namespace logw
