#include "logw/fock.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "logw/errors.hpp"

namespace logw {

std::string FockBasisVector::str() const {
    std::string s;
    for (auto [i, n] : creations) s += "a" + std::to_string(i) + "(-" + std::to_string(n) + ") ";
    s += "|beta=" + beta.str() + ",w=" + wpart.str() + ">";
    return s;
}

Rat fock_weight(const RootSystemData& rs, int p, const FockBasisVector& v) {
    return delta_general(rs, p, v.beta, v.wpart) + to_rat(v.depth());
}

void fock_add_term(FockElement& e, const FockBasisVector& v, const QuadScalar& c) {
    if (c.is_zero()) return;
    auto it = e.terms.find(v);
    if (it == e.terms.end()) {
        e.terms.emplace(v, c);
    } else {
        it->second = quad_add(it->second, c);
        if (it->second.is_zero()) e.terms.erase(it);
    }
}

FockElement fock_add(const FockElement& x, const FockElement& y) {
    FockElement out = x;
    for (const auto& [v, c] : y.terms) fock_add_term(out, v, c);
    return out;
}

FockElement fock_scale(const FockElement& x, const QuadScalar& c, long long p) {
    FockElement out;
    for (const auto& [v, k] : x.terms) fock_add_term(out, v, quad_mul(k, c, p));
    return out;
}

namespace {

Weight simple_root_fc(const RootSystemData& rs, int i1based) {
    Weight a(rs.rank);
    for (int j = 0; j < rs.rank; ++j) a[j] = rs.cartan[i1based - 1][j];
    return a;
}

Weight s_weight(const LambdaParam& lam) {
    Weight w(lam.s.size());
    for (std::size_t i = 0; i < lam.s.size(); ++i) w[i] = lam.s[i];
    return w;
}

// multisets of (direction, mode) of total mode sum d, canonically sorted
void colored_partitions(int rank, long long d, std::vector<std::pair<int, int>>& cur,
                        std::vector<std::vector<std::pair<int, int>>>& out, int dir, long long max_part) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    if (dir > rank) return;
    // partition the amount given to `dir` into parts <= max_part, then recurse
    for (long long part = std::min(d, max_part); part >= 1; --part) {
        cur.emplace_back(dir, static_cast<int>(part));
        colored_partitions(rank, d - part, cur, out, dir, part);
        cur.pop_back();
    }
    colored_partitions(rank, d, cur, out, dir + 1, d);
}

std::vector<std::vector<std::pair<int, int>>> creation_multisets(int rank, long long d) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    colored_partitions(rank, d, cur, out, 1, d);
    for (auto& m : out) std::sort(m.begin(), m.end());
    return out;
}

std::vector<std::vector<long long>> plain_partitions(long long d) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    std::function<void(long long, long long)> rec = [&](long long rem, long long maxp) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (long long part = std::min(rem, maxp); part >= 1; --part) {
            cur.push_back(part);
            rec(rem - part, part);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

// zero mode of the sector-shift field for mu = c*alpha_i acting on one basis
// monomial; shift moves (beta, wpart) by (beta_shift, w_shift)
void vertex_zero_mode_term(const RootSystemData& rs, int p, int i, const QuadScalar& cquad, long long mu_nu,
                           const Weight& beta_shift, const Weight& w_shift, const FockBasisVector& v,
                           const QuadScalar& coeff, FockElement& out) {
    const long long d0 = -1 - mu_nu;
    FockBasisVector base;
    base.beta = v.beta + beta_shift;
    base.wpart = v.wpart + w_shift;

    const std::size_t nc = v.creations.size();
    if (nc > 30) throw ResourceError("creation multiset too large for zero-mode expansion");

    // contraction factor of creation (j, n) is -(mu, alpha_j)
    std::vector<QuadScalar> contr(nc);
    for (std::size_t k = 0; k < nc; ++k) {
        long long cij = rs.cartan[i - 1][v.creations[k].first - 1];
        contr[k] = quad_scale(quad_neg(cquad), to_rat(cij));
    }

    for (std::size_t mask = 0; mask < (std::size_t(1) << nc); ++mask) {
        long long contracted = 0;
        QuadScalar factor = coeff;
        std::vector<std::pair<int, int>> rest;
        for (std::size_t k = 0; k < nc; ++k) {
            if (mask & (std::size_t(1) << k)) {
                contracted += v.creations[k].second;
                factor = quad_mul(factor, contr[k], p);
            } else {
                rest.push_back(v.creations[k]);
            }
        }
        if (factor.is_zero()) continue;
        long long a = d0 + contracted;
        if (a < 0) continue;
        for (const auto& parts : plain_partitions(a)) {
            Rat denom = 1;
            long long mult = 1, prev = -1;
            for (long long part : parts) {
                if (part == prev) ++mult; else { mult = 1; prev = part; }
                denom *= rat_frac(part * mult, 1);
            }
            QuadScalar pc = quad_scale(quad_pow(cquad, static_cast<long long>(parts.size()), p), Rat(1) / denom);
            FockBasisVector nv = base;
            nv.creations = rest;
            for (long long part : parts) nv.creations.emplace_back(i, static_cast<int>(part));
            std::sort(nv.creations.begin(), nv.creations.end());
            fock_add_term(out, nv, quad_mul(factor, pc, p));
        }
    }
}

FockElement vertex_zero_mode(const RootSystemData& rs, int p, int i, bool narrow, const FockElement& x) {
    if (i < 1 || i > rs.rank) throw ArgumentError("direction out of range");
    FockElement out;
    Weight alpha = simple_root_fc(rs, i);
    QuadScalar cquad = narrow ? quad_sqrtp(Rat(-1, p)) : quad_sqrtp(Rat(1));
    for (const auto& [v, coeff] : x.terms) {
        long long mu_nu;
        Weight bshift(rs.rank), wshift(rs.rank);
        if (narrow) {
            if (v.wpart[i - 1] % p != 0)
                throw ArgumentError("narrow screening undefined on this sector: pairing not integral");
            mu_nu = v.beta[i - 1] - v.wpart[i - 1] / p;
            wshift = -alpha;
        } else {
            mu_nu = -static_cast<long long>(p) * v.beta[i - 1] + v.wpart[i - 1];
            bshift = -alpha;
        }
        vertex_zero_mode_term(rs, p, i, cquad, mu_nu, bshift, wshift, v, coeff, out);
    }
    // zero modes preserve the conformal grading exactly
    if (!x.terms.empty() && !out.terms.empty()) {
        Rat w0 = fock_weight(rs, p, x.terms.begin()->first);
        for (const auto& [v, c] : out.terms)
            if (fock_weight(rs, p, v) != w0) throw InternalError("zero mode changed a conformal weight");
    }
    return out;
}

} // namespace

GradedBasis graded_basis(const RootSystemData& rs, const LambdaParam& lam, const Rat& delta_max, const Caps& caps) {
    if (delta_max < 0) throw ArgumentError("delta_max must be >= 0");
    GradedBasis gb;
    const int p = lam.p;
    Weight w = s_weight(lam);
    Weight hat = hat_weight(rs, lam);

    // radius bound from the positive-definite quadratic growth of the sector weight
    double wn = std::sqrt(std::max(0.0, pairing(rs, w, w).get_d()));
    double rn = std::sqrt(pairing(rs, rs.rho, rs.rho).get_d());
    double hn = std::sqrt(std::max(0.0, pairing(rs, hat, hat).get_d()));
    double M = wn + (p - 1) * rn;
    double C0 = pairing(rs, w, w).get_d() / (2.0 * p) - pairing(rs, w, rs.rho).get_d() * (1.0 - 1.0 / p);
    double disc = M * M + 2.0 * p * (delta_max.get_d() - C0);
    double r = disc > 0 ? (M + std::sqrt(disc)) / p : 0.0;
    r += 2.0;

    std::vector<long long> box(rs.rank);
    for (int k = 0; k < rs.rank; ++k)
        box[k] = static_cast<long long>(std::floor((r + hn) * std::sqrt(rs.cartan_inv[k][k].get_d()))) + 1;

    std::vector<long long> rc(rs.rank, 0);
    std::vector<std::pair<Weight, Rat>> sectors;
    std::function<void(int)> rec = [&](int pos) {
        if (pos == rs.rank) {
            Weight beta = hat;
            for (int a = 0; a < rs.rank; ++a) {
                long long acc = 0;
                for (int b = 0; b < rs.rank; ++b) acc += rs.cartan[a][b] * rc[b];
                beta[a] += acc;
            }
            Rat ds = delta_general(rs, p, beta, w);
            if (ds <= delta_max) sectors.emplace_back(beta, ds);
            return;
        }
        for (long long t = -box[pos]; t <= box[pos]; ++t) {
            rc[pos] = t;
            rec(pos + 1);
        }
        rc[pos] = 0;
    };
    rec(0);
    std::sort(sectors.begin(), sectors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [beta, ds] : sectors) {
        long long maxdepth = static_cast<long long>(rat_floor(delta_max - ds).get_si());
        for (long long d = 0; d <= maxdepth; ++d) {
            for (auto& cr : creation_multisets(rs.rank, d)) {
                FockBasisVector v;
                v.beta = beta;
                v.wpart = w;
                v.creations = std::move(cr);
                gb.by_weight[ds + to_rat(d)].push_back(std::move(v));
                if (++gb.total > caps.max_basis) throw ResourceError("graded basis larger than cap");
            }
        }
    }
    for (auto& [dd, vec] : gb.by_weight) std::sort(vec.begin(), vec.end());
    return gb;
}

FockElement heisenberg_act(const RootSystemData& rs, int p, int i, long long mode, const FockElement& x) {
    if (i < 1 || i > rs.rank) throw ArgumentError("direction out of range");
    FockElement out;
    for (const auto& [v, c] : x.terms) {
        if (mode < 0) {
            FockBasisVector nv = v;
            nv.creations.emplace_back(i, static_cast<int>(-mode));
            std::sort(nv.creations.begin(), nv.creations.end());
            fock_add_term(out, nv, c);
        } else if (mode == 0) {
            // eigenvalue (alpha_i, nu) = -sqrt(p)(alpha_i,beta) + (alpha_i,w)/sqrt(p)
            QuadScalar eig = quad_sqrtp(to_rat(-v.beta[i - 1]) + rat_frac(v.wpart[i - 1], p));
            fock_add_term(out, v, quad_mul(c, eig, p));
        } else {
            for (std::size_t k = 0; k < v.creations.size(); ++k) {
                auto [j, n] = v.creations[k];
                if (n != mode) continue;
                FockBasisVector nv = v;
                nv.creations.erase(nv.creations.begin() + k);
                fock_add_term(out, nv, quad_scale(c, to_rat(mode * rs.cartan[i - 1][j - 1])));
            }
        }
    }
    return out;
}

FockElement screening_f(const RootSystemData& rs, int p, int i, const FockElement& x) {
    return vertex_zero_mode(rs, p, i, false, x);
}

FockElement narrow_f(const RootSystemData& rs, int p, int i, const FockElement& x) {
    return vertex_zero_mode(rs, p, i, true, x);
}

Rat h_eigenvalue(const RootSystemData& rs, const LambdaParam& lam, int i, const Weight& mu,
                 const FockBasisVector& v) {
    Rat e = to_rat(v.beta[i - 1] + mu[i - 1]) + rat_frac(lam.s[i - 1] - v.wpart[i - 1], lam.p);
    e.canonicalize();
    return e;
}

FockElement h_action(const RootSystemData& rs, const LambdaParam& lam, int i, const Weight& mu,
                     const FockElement& x) {
    if (i < 1 || i > rs.rank) throw ArgumentError("direction out of range");
    FockElement out;
    for (const auto& [v, c] : x.terms) fock_add_term(out, v, quad_scale(c, h_eigenvalue(rs, lam, i, mu, v)));
    return out;
}

std::size_t quad_matrix_rank(QuadMatrix m, long long p) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        QuadScalar inv = quad_inv(m[rank][col], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            QuadScalar f = quad_mul(m[r][col], inv, p);
            for (std::size_t cc = col; cc < cols; ++cc)
                m[r][cc] = quad_sub(m[r][cc], quad_mul(f, m[rank][cc], p));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<QuadScalar>> quad_matrix_kernel(const QuadMatrix& m0, std::size_t cols, long long p) {
    QuadMatrix m = m0;
    std::size_t rows = m.size();
    std::vector<long long> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        QuadScalar inv = quad_inv(m[rank][col], p);
        for (std::size_t cc = 0; cc < cols; ++cc) m[rank][cc] = quad_mul(m[rank][cc], inv, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            QuadScalar f = m[r][col];
            for (std::size_t cc = 0; cc < cols; ++cc)
                m[r][cc] = quad_sub(m[r][cc], quad_mul(f, m[rank][cc], p));
        }
        pivot_of_col[col] = static_cast<long long>(rank);
        ++rank;
    }
    std::vector<std::vector<QuadScalar>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<QuadScalar> v(cols, quad_rat(0));
        v[free_col] = quad_rat(1);
        for (std::size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = quad_neg(m[static_cast<std::size_t>(pivot_of_col[col])][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

struct SectorBlock {
    Weight beta;
    std::vector<FockBasisVector> basis;
    QuadMatrix stacked; // rows: all images over J, cols: basis
};

std::vector<SectorBlock> build_blocks(const RootSystemData& rs, const LambdaParam& lam,
                                      const std::vector<int>& J, const std::vector<FockBasisVector>& slice) {
    std::map<Weight, SectorBlock> by_sector;
    for (const auto& v : slice) {
        auto& blk = by_sector[v.beta];
        blk.beta = v.beta;
        blk.basis.push_back(v);
    }
    std::vector<SectorBlock> blocks;
    for (auto& [beta, blk] : by_sector) {
        std::size_t cols = blk.basis.size();
        std::vector<std::vector<QuadScalar>> rows;
        for (int i : J) {
            std::map<FockBasisVector, std::size_t> row_index;
            std::vector<std::vector<QuadScalar>> local;
            for (std::size_t c = 0; c < cols; ++c) {
                FockElement x;
                fock_add_term(x, blk.basis[c], quad_rat(1));
                FockElement img = narrow_f(rs, lam.p, i, x);
                for (const auto& [tv, tc] : img.terms) {
                    auto it = row_index.find(tv);
                    if (it == row_index.end()) {
                        it = row_index.emplace(tv, local.size()).first;
                        local.emplace_back(cols, quad_rat(0));
                    }
                    local[it->second][c] = tc;
                }
            }
            for (auto& r : local) rows.push_back(std::move(r));
        }
        blk.stacked = std::move(rows);
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

} // namespace

GradedKernelReport kernel_graded_dims(const RootSystemData& rs, const LambdaParam& lam, const std::vector<int>& J,
                                      const Rat& delta_max, bool refine_by_weight, const Caps& caps) {
    for (int i : J) {
        if (i < 1 || i > rs.rank) throw ArgumentError("index set outside 1..rank");
        if (lam.s[i - 1] != 0)
            throw ArgumentError("unsupported sector: narrow screening in direction " + std::to_string(i) +
                                " needs s_i = 0");
    }
    GradedKernelReport rep;
    rep.lambda = lam;
    rep.J = J;
    rep.refined = refine_by_weight;
    GradedBasis gb = graded_basis(rs, lam, delta_max, caps);
    for (const auto& [dd, slice] : gb.by_weight) {
        KernelEntry entry;
        entry.delta = dd;
        for (auto& blk : build_blocks(rs, lam, J, slice)) {
            std::size_t cols = blk.basis.size();
            std::size_t rank = quad_matrix_rank(blk.stacked, lam.p);
            std::size_t kdim = cols - rank;
            entry.ambient += cols;
            entry.kernel += kdim;
            if (refine_by_weight) {
                auto& we = entry.by_weight[blk.beta];
                we.ambient += cols;
                we.kernel += kdim;
            }
        }
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

std::vector<FockElement> kernel_vectors_at(const RootSystemData& rs, const LambdaParam& lam,
                                           const std::vector<int>& J, const Rat& delta, const Caps& caps) {
    std::vector<FockElement> out;
    GradedBasis gb = graded_basis(rs, lam, delta, caps);
    auto it = gb.by_weight.find(delta);
    if (it == gb.by_weight.end()) return out;
    for (auto& blk : build_blocks(rs, lam, J, it->second)) {
        std::size_t cols = blk.basis.size();
        for (auto& kv : quad_matrix_kernel(blk.stacked, cols, lam.p)) {
            FockElement e;
            for (std::size_t c = 0; c < cols; ++c) fock_add_term(e, blk.basis[c], kv[c]);
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::string kernel_report_json(const RootSystemData& rs, const GradedKernelReport& rep) {
    std::ostringstream os;
    os << "{\"lambda\": \"" << lambda_str(rs, rep.lambda) << "\", \"J\": [";
    for (std::size_t i = 0; i < rep.J.size(); ++i) os << (i ? "," : "") << rep.J[i];
    os << "], \"entries\": [";
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        const auto& e = rep.entries[i];
        if (i) os << ", ";
        os << "{\"delta\": \"" << rat_str(e.delta) << "\", \"ambient\": " << e.ambient
           << ", \"kernel\": " << e.kernel;
        if (rep.refined) {
            os << ", \"weights\": {";
            bool first = true;
            for (const auto& [w, we] : e.by_weight) {
                if (we.kernel == 0) continue;
                os << (first ? "" : ", ") << "\"" << w.str() << "\": " << we.kernel;
                first = false;
            }
            os << "}";
        }
        os << "}";
    }
    os << "]}";
    return os.str();
}

namespace {

FockBasisVector sector_vacuum(const RootSystemData& rs, const Weight& beta, const Weight& w) {
    FockBasisVector v;
    v.beta = beta;
    v.wpart = w;
    return v;
}

FockElement iterate_f(const RootSystemData& rs, int p, int i, FockElement x, long long times) {
    for (long long k = 0; k < times && !x.is_zero(); ++k) x = screening_f(rs, p, i, x);
    return x;
}

} // namespace

RelationReport relation_suite(const RootSystemData& rs, int p, const Rat& delta_max, const Caps& caps) {
    RelationReport rep;
    LambdaParam lam = lambda_zero(rs, p);
    GradedBasis gb = graded_basis(rs, lam, delta_max, caps);
    auto fail = [&](RelationCheck& c, const std::string& why) {
        if (c.pass) c.detail = why;
        c.pass = false;
    };

    // (a) zero modes and the Cartan action preserve the conformal weight
    {
        RelationCheck c{"weight_preservation", true, ""};
        try {
            for (const auto& [dd, slice] : gb.by_weight)
                for (const auto& v : slice) {
                    FockElement x;
                    fock_add_term(x, v, quad_rat(1));
                    for (int i = 1; i <= rs.rank; ++i) {
                        screening_f(rs, p, i, x);
                        narrow_f(rs, p, i, x);
                        for (const auto& [tv, tc] : h_action(rs, lam, i, Weight(rs.rank), x).terms)
                            if (fock_weight(rs, p, tv) != dd) fail(c, "h moved " + v.str());
                    }
                }
        } catch (const InternalError& e) {
            fail(c, e.what());
        }
        rep.checks.push_back(c);
    }

    // (b) commutator of the Cartan action with the screenings: [h_i(mu), f_j] = -c_ij f_j
    {
        RelationCheck c{"h_f_commutator", true, ""};
        std::vector<Weight> mus = {Weight(rs.rank), rs.rho};
        for (const auto& [dd, slice] : gb.by_weight)
            for (const auto& v : slice) {
                FockElement x;
                fock_add_term(x, v, quad_rat(1));
                for (int j = 1; j <= rs.rank && c.pass; ++j) {
                    FockElement fx = screening_f(rs, p, j, x);
                    for (int i = 1; i <= rs.rank && c.pass; ++i)
                        for (const auto& mu : mus) {
                            FockElement lhs = fock_add(h_action(rs, lam, i, mu, fx),
                                                       fock_scale(screening_f(rs, p, j, h_action(rs, lam, i, mu, x)),
                                                                  quad_rat(-1), p));
                            FockElement rhs = fock_scale(fx, quad_rat(to_rat(-rs.cartan[i - 1][j - 1])), p);
                            if (!(fock_add(lhs, fock_scale(rhs, quad_rat(-1), p)).is_zero()))
                                fail(c, "fails on " + v.str() + " at (i,j)=(" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
                        }
                }
            }
        rep.checks.push_back(c);
    }

    // (c) nilpotency of the screenings on the adjacent shift vectors
    {
        RelationCheck c{"serre_nilpotency", true, ""};
        for (int i = 1; i <= rs.rank; ++i)
            for (int j = 1; j <= rs.rank; ++j) {
                if (i == j) continue;
                FockElement x;
                fock_add_term(x, sector_vacuum(rs, -simple_root_fc(rs, j), Weight(rs.rank)), quad_rat(1));
                long long n = 1 - rs.cartan[i - 1][j - 1];
                if (!iterate_f(rs, p, i, x, n).is_zero())
                    fail(c, "f_" + std::to_string(i) + "^" + std::to_string(n) + " does not kill the shift vector j=" +
                               std::to_string(j));
            }
        rep.checks.push_back(c);
    }

    // (d) integrability: the quadratic weight growth bounds the lowering power
    {
        RelationCheck c{"integrability_bound", true, ""};
        for (const auto& [dd, slice] : gb.by_weight)
            for (const auto& v : slice)
                for (int i = 1; i <= rs.rank && c.pass; ++i) {
                    Weight alpha = simple_root_fc(rs, i);
                    long long n = 1;
                    while (delta_general(rs, p, v.beta - n * alpha, v.wpart) <= dd) ++n;
                    FockElement x;
                    fock_add_term(x, v, quad_rat(1));
                    if (!iterate_f(rs, p, i, x, n).is_zero())
                        fail(c, "f_" + std::to_string(i) + "^" + std::to_string(n) + " nonzero on " + v.str());
                }
        rep.checks.push_back(c);
    }

    // (e) sign-twisted compatibility of narrow screenings with screenings
    {
        RelationCheck c{"sign_twisted_Ff", true, ""};
        for (const auto& [dd, slice] : gb.by_weight)
            for (const auto& v : slice) {
                FockElement x;
                fock_add_term(x, v, quad_rat(1));
                for (int i = 1; i <= rs.rank && c.pass; ++i)
                    for (int j = 1; j <= rs.rank && c.pass; ++j) {
                        long long cij = rs.cartan[i - 1][j - 1];
                        QuadScalar sgn = quad_rat((cij % 2 == 0) ? 1 : -1);
                        FockElement lhs = narrow_f(rs, p, i, screening_f(rs, p, j, x));
                        FockElement rhs = fock_scale(screening_f(rs, p, j, narrow_f(rs, p, i, x)), sgn, p);
                        if (!fock_add(lhs, fock_scale(rhs, quad_rat(-1), p)).is_zero())
                            fail(c, "fails on " + v.str() + " at (i,j)=(" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
                    }
            }
        rep.checks.push_back(c);
    }

    // sampled lowering-power identities on sector vacua and depth-1 vectors
    {
        RelationCheck ca{"lowering_power_annihilates", true, ""};
        RelationCheck cn{"lowering_power_nonzero", true, ""};
        std::vector<Weight> samples = {Weight(rs.rank), rs.theta};
        for (int k = 1; k <= rs.rank; ++k) samples.push_back(simple_root_fc(rs, k));
        for (const auto& alpha : samples)
            for (int j = 1; j <= rs.rank; ++j) {
                long long m = alpha[j - 1];
                if (m < 0) continue;
                FockElement vac;
                fock_add_term(vac, sector_vacuum(rs, alpha, Weight(rs.rank)), quad_rat(1));
                if (!iterate_f(rs, p, j, vac, m + 1).is_zero())
                    fail(ca, "power " + std::to_string(m + 1) + " nonzero at alpha=" + alpha.str());
                if (iterate_f(rs, p, j, vac, m).is_zero())
                    fail(cn, "power " + std::to_string(m) + " zero at alpha=" + alpha.str());
                for (int dir = 1; dir <= rs.rank; ++dir) {
                    FockElement v1 = heisenberg_act(rs, p, dir, -1, vac);
                    if (iterate_f(rs, p, j, v1, m).is_zero())
                        fail(cn, "power " + std::to_string(m) + " zero on depth-1 vector at alpha=" + alpha.str());
                }
            }
        rep.checks.push_back(ca);
        rep.checks.push_back(cn);
    }

    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

std::string relation_report_json(const RelationReport& rep) {
    std::ostringstream os;
    os << "{\"all_pass\": " << (rep.all_pass ? "true" : "false") << ", \"checks\": [";
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const auto& c = rep.checks[i];
        if (i) os << ", ";
        os << "{\"name\": \"" << c.name << "\", \"pass\": " << (c.pass ? "true" : "false") << ", \"detail\": \""
           << c.detail << "\"}";
    }
    os << "]}";
    return os.str();
}

} // namespace logw
