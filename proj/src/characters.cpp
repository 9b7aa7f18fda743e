#include "logw/characters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "logw/errors.hpp"

namespace logw {

Rat central_charge(const RootSystemData& rs, int p) {
    if (p < 2) throw ArgumentError("p must be >= 2");
    Rat f = 2 - Rat(p) - Rat(1, p);
    f.canonicalize();
    return Rat(rs.rank) + to_rat(rs.coxeter * rs.dim_g) * f;
}

Rat delta_general(const RootSystemData& rs, int p, const Weight& beta, const Weight& w) {
    Rat bb = pairing(rs, beta, beta);
    Rat bw = pairing(rs, beta, w);
    Rat ww = pairing(rs, w, w);
    Rat brho = pairing(rs, beta, rs.rho);
    Rat wrho = pairing(rs, w, rs.rho);
    Rat d = Rat(p) * bb / 2 - bw + ww / (2 * Rat(p)) + Rat(p - 1) * brho - wrho + wrho / Rat(p);
    d.canonicalize();
    return d;
}

static Weight s_weight(const LambdaParam& lam) {
    Weight w(lam.s.size());
    for (std::size_t i = 0; i < lam.s.size(); ++i) w[i] = lam.s[i];
    return w;
}

Rat delta(const RootSystemData& rs, int p, const Weight& beta, const LambdaParam& lam) {
    if (lam.p != p) throw ArgumentError("level mismatch");
    return delta_general(rs, p, beta, s_weight(lam));
}

namespace {

// exponent of the sector at sqrt(p)*v - (1/sqrt p)*u in the graded trace:
// p|v|^2/2 - (v,u) + |u|^2/(2p); combined with eta^{-l} this realizes the
// q^{Delta - c/24} grading exactly
Rat sector_exponent(const RootSystemData& rs, int p, const Weight& v, const Weight& u) {
    Rat e = Rat(p) * pairing(rs, v, v) / 2 - pairing(rs, v, u) + pairing(rs, u, u) / (2 * Rat(p));
    e.canonicalize();
    return e;
}

double norm_of(const RootSystemData& rs, const Weight& w) {
    Rat n = pairing(rs, w, w);
    return std::sqrt(std::max(0.0, n.get_d()));
}

QSeries theta_trace_impl(const RootSystemData& rs, const LambdaParam& lam, const Weight& alpha,
                         const Rat& order, const std::vector<WeylElement>& weyl) {
    Weight vh = alpha + hat_weight(rs, lam);
    if (!vh.is_dominant()) throw ArgumentError("theta_trace: alpha + hat must be dominant");
    Weight v = vh + rs.rho;
    Weight u = s_weight(lam) + rs.rho;
    Rat pad = order + Rat(rs.rank, 24);
    QSeries signed_sum(pad);
    for (const auto& w : weyl) qs_add_term(signed_sum, sector_exponent(rs, lam.p, apply_weyl(w, v), u), w.sign);
    QSeries eta = eta_inverse_power(rs.rank, pad);
    return qs_truncate(qs_mul(signed_sum, eta), order);
}

} // namespace

QSeries theta_trace(const RootSystemData& rs, const LambdaParam& lam, const Weight& alpha, const Rat& order,
                    const Caps& caps) {
    return theta_trace_impl(rs, lam, alpha, order, enumerate_weyl(rs, caps));
}

// dominant weights beta in the coset of `rep` modulo the root lattice with
// |beta|^2 <= norm2_bound, sorted by (|beta - rep|^2, lex)
static std::vector<Weight> dominant_coset_points(const RootSystemData& rs, const Weight& rep,
                                                 const Rat& norm2_bound) {
    std::vector<Weight> out;
    if (norm2_bound < 0) return out;
    double r = std::sqrt(norm2_bound.get_d() + 1e-9);
    std::vector<long long> box(rs.rank);
    for (int i = 0; i < rs.rank; ++i) box[i] = static_cast<long long>(std::floor(std::sqrt(2.0) * r)) + 1;
    auto cls = pq_class(rs, rep);
    Weight cur(rs.rank);
    std::vector<std::pair<Rat, Weight>> found;
    // dominant weights have nonnegative fundamental coordinates
    std::function<void(int)> rec = [&](int pos) {
        if (pos == rs.rank) {
            if (pairing(rs, cur, cur) <= norm2_bound && pq_class(rs, cur) == cls) {
                Weight alpha = cur - rep;
                found.emplace_back(pairing(rs, alpha, alpha), cur);
            }
            return;
        }
        for (long long v = 0; v <= box[pos]; ++v) {
            cur[pos] = v;
            rec(pos + 1);
        }
        cur[pos] = 0;
    };
    rec(0);
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first != b.first ? a.first < b.first : a.second < b.second; });
    for (auto& [n, w] : found) out.push_back(w);
    return out;
}

std::vector<Weight> dominant_q_points(const RootSystemData& rs, const Rat& norm2_bound) {
    return dominant_coset_points(rs, Weight(rs.rank), norm2_bound);
}

CharSide rhs_character(const RootSystemData& rs, const LambdaParam& lam, const Rat& order, const Caps& caps,
                       bool allow_nonalcove) {
    if (!check_alcove(rs, lam) && !allow_nonalcove)
        throw ArgumentError("identity unproven outside the alcove; rerun with the unsafe override to compute anyway");
    auto weyl = enumerate_weyl(rs, caps);
    ZPoly denom = weyl_denominator_poly(rs);
    Weight hat = hat_weight(rs, lam);
    Weight u = s_weight(lam) + rs.rho;

    // The decomposition runs over blocks with a dominant highest weight in
    // the coset of hat: alpha in Q with alpha + hat dominant. Every
    // contributing one satisfies p|v|^2/2 - (v,u) + |u|^2/(2p) <= order + l/24.
    Rat pad = order + Rat(rs.rank, 24);
    double unorm = norm_of(rs, u);
    double p = lam.p;
    double rv = (unorm / std::sqrt(p) + std::sqrt(std::max(0.0, 2.0 * pad.get_d()))) / std::sqrt(p);
    double rrho = norm_of(rs, rs.rho);
    Rat beta_bound((rv + rrho + 1.0) * (rv + rrho + 1.0));
    beta_bound.canonicalize();

    CharSide side;
    side.which = CharSide::Which::rhs;
    side.lambda = lam;
    side.order = order;
    side.series = QZSeries(order);
    for (const auto& beta : dominant_coset_points(rs, hat, beta_bound)) {
        Weight alpha = beta - hat;
        Weight v = beta + rs.rho;
        if (sector_exponent(rs, lam.p, v, u) > pad) continue;
        QSeries tr = theta_trace_impl(rs, lam, alpha, order, weyl);
        if (tr.is_zero()) continue;
        ZPoly chi = weyl_character(rs, beta, weyl, denom);
        QZSeries tr_z(order);
        for (const auto& [e, c] : tr.terms) qz_add_term(tr_z, Weight(rs.rank), e, c);
        side.series = qz_add(side.series, qz_mul_zpoly(chi, tr_z));
        ++side.alpha_terms;
    }
    return side;
}

CharSide euler_character(const RootSystemData& rs, const LambdaParam& lam, const Rat& order, const Caps& caps) {
    auto weyl = enumerate_weyl(rs, caps);
    ZPoly denom = weyl_denominator_poly(rs);
    Weight hat = hat_weight(rs, lam);
    Weight u = s_weight(lam) + rs.rho;
    Rat pad = order + Rat(rs.rank, 24);

    // box of root-lattice points whose sector exponent can reach the order
    double unorm = norm_of(rs, u);
    double p = lam.p;
    double rv = (unorm / std::sqrt(p) + std::sqrt(std::max(0.0, 2.0 * pad.get_d()))) / std::sqrt(p);
    std::vector<long long> box(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        Rat wii = rs.cartan_inv[i][i];
        double wnorm = std::sqrt(wii.get_d());
        double off = 0;
        Weight hr = hat + rs.rho;
        for (int j = 0; j < rs.rank; ++j) off += std::abs(static_cast<double>(hr[j]) * rs.cartan_inv[i][j].get_d());
        box[i] = static_cast<long long>(std::floor(wnorm * rv + off)) + 1;
    }

    // q-graded numerators of the fixed-point sum
    std::map<Rat, ZPoly> numer;
    std::size_t alpha_terms = 0;
    std::vector<long long> rc(rs.rank, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == rs.rank) {
            Weight alpha(rs.rank);
            for (int i = 0; i < rs.rank; ++i) {
                long long acc = 0;
                for (int j = 0; j < rs.rank; ++j) acc += rs.cartan[i][j] * rc[j];
                alpha[i] = acc;
            }
            Weight v = alpha + hat + rs.rho;
            Rat e = sector_exponent(rs, lam.p, v, u);
            if (e > pad) return;
            ++alpha_terms;
            ZPoly& np = numer[e];
            for (const auto& w : weyl) {
                Weight z = apply_weyl(w, v) - rs.rho;
                auto it = np.find(z);
                if (it == np.end()) {
                    np.emplace(z, w.sign);
                } else {
                    it->second += w.sign;
                    if (it->second == 0) np.erase(it);
                }
            }
            return;
        }
        for (long long v = -box[pos]; v <= box[pos]; ++v) {
            rc[pos] = v;
            rec(pos + 1);
        }
        rc[pos] = 0;
    };
    rec(0);

    QZSeries assembled(pad);
    for (auto& [e, np] : numer) {
        if (np.empty()) continue;
        ZPoly chi = laurent_divide_exact(rs, np, denom);
        for (const auto& [z, c] : chi) qz_add_term(assembled, z, e, c);
    }
    QSeries eta = eta_inverse_power(rs.rank, pad);
    CharSide side;
    side.which = CharSide::Which::euler;
    side.lambda = lam;
    side.order = order;
    side.alpha_terms = alpha_terms;
    side.series = qz_truncate(qz_mul_qseries(eta, assembled), order);
    return side;
}

CompareReport compare_sides(const CharSide& a, const CharSide& b) {
    if (!(a.lambda == b.lambda)) throw ArgumentError("compare_sides: parameter mismatch");
    if (a.order != b.order) throw ArgumentError("compare_sides: order mismatch");
    CompareReport rep;
    rep.order = a.order;
    std::map<std::pair<Rat, Weight>, std::pair<Rat, Rat>> merged;
    for (const auto& [z, qs] : a.series.terms)
        for (const auto& [e, c] : qs.terms) merged[{e, z}].first = c;
    for (const auto& [z, qs] : b.series.terms)
        for (const auto& [e, c] : qs.terms) merged[{e, z}].second = c;
    for (const auto& [key, lr] : merged) {
        if (lr.first == lr.second) continue;
        rep.matches = false;
        rep.diffs.push_back({key.first, key.second, lr.first, lr.second});
    }
    return rep;
}

std::string compare_report_json(const CompareReport& rep) {
    std::ostringstream os;
    os << "{\"order\": \"" << rat_str(rep.order) << "\", \"matches\": " << (rep.matches ? "true" : "false")
       << ", \"diffs\": [";
    for (std::size_t i = 0; i < rep.diffs.size(); ++i) {
        const auto& d = rep.diffs[i];
        if (i) os << ", ";
        os << "{\"q\": \"" << rat_str(d.q) << "\", \"z\": \"" << d.z.str() << "\", \"lhs\": \"" << rat_str(d.lhs)
           << "\", \"rhs\": \"" << rat_str(d.rhs) << "\"}";
    }
    os << "]}";
    return os.str();
}

} // namespace logw
