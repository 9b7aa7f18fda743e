#include "logw/root_data.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "logw/errors.hpp"

namespace logw {

namespace {

std::vector<std::pair<int, int>> dynkin_edges(char kind, int rank) {
    std::vector<std::pair<int, int>> e;
    if (kind == 'A') {
        if (rank < 1) throw ConfigError("A_l requires l >= 1");
        for (int i = 1; i < rank; ++i) e.push_back({i, i + 1});
    } else if (kind == 'D') {
        if (rank < 3) throw ConfigError("D_l requires l >= 3");
        for (int i = 1; i < rank - 2; ++i) e.push_back({i, i + 1});
        e.push_back({rank - 2, rank - 1});
        e.push_back({rank - 2, rank});
    } else if (kind == 'E') {
        if (rank < 6 || rank > 8) throw ConfigError("E_l requires l in {6,7,8}");
        // chain 1-3-4-5-...-l, node 2 attached to 4
        e.push_back({1, 3});
        for (int i = 3; i < rank; ++i) e.push_back({i, i + 1});
        e.push_back({2, 4});
    } else {
        throw ConfigError("unsupported type kind");
    }
    return e;
}

// Longest-element word segments. Stored in concatenation order; the
// application-order word is the reverse of the full concatenation.
//
// For the E types the source tables use a node numbering with the long chain
// on 1-2-3-5-6(-7-8) and the branch node 4 attached to 3; the maps below
// transport the segments to the numbering used here (chain 1-3-4-5-6..,
// branch node 2 at 4).
std::vector<std::vector<int>> w0_segments(char kind, int rank) {
    std::vector<std::vector<int>> seg(rank + 1);
    if (kind == 'A') {
        for (int i = 1; i <= rank; ++i)
            for (int k = rank + 1 - i; k <= rank; ++k) seg[i].push_back(k);
        return seg;
    }
    if (kind == 'D') {
        seg[1] = {rank};
        seg[2] = {rank - 1};
        for (int i = 3; i <= rank; ++i) {
            for (int k = rank + 1 - i; k <= rank - 2; ++k) seg[i].push_back(k);
            seg[i].push_back(rank);
            seg[i].push_back(rank - 1);
            for (int k = rank - 2; k >= rank + 1 - i; --k) seg[i].push_back(k);
        }
        return seg;
    }
    // E types: D5 block relabeled by 1,2,3,4,5 -> 1,3,4,5,2
    const int d5map[6] = {0, 1, 3, 4, 5, 2};
    std::vector<std::vector<int>> d5 = {{}, {5}, {4}, {3, 5, 4, 3}, {2, 3, 5, 4, 3, 2}, {1, 2, 3, 5, 4, 3, 2, 1}};
    for (int i = 1; i <= 5; ++i)
        for (int x : d5[i]) seg[i].push_back(d5map[x]);
    // E6/E7 specific segments relabeled by 1,2,3,4,5,6,7,8 -> 1,3,4,2,5,6,7,8
    const int emap[9] = {0, 1, 3, 4, 2, 5, 6, 7, 8};
    std::vector<int> s6 = {6, 5, 3, 4, 2, 1, 3, 2, 5, 3, 4, 6, 5, 3, 2, 1};
    std::vector<int> s7 = {7, 6, 5, 3, 4, 2, 1, 3, 2, 5, 3, 4, 6, 5,
                           3, 2, 1, 7, 6, 5, 3, 4, 2, 3, 5, 6, 7};
    if (rank >= 6)
        for (int x : s6) seg[6].push_back(emap[x]);
    if (rank >= 7)
        for (int x : s7) seg[7].push_back(emap[x]);
    if (rank == 8) {
        seg[8].push_back(8);
        for (int x : s7) seg[8].push_back(emap[x]);
        seg[8].push_back(8);
        for (int x : s7) seg[8].push_back(emap[x]);
        seg[8].push_back(8);
    }
    return seg;
}

RatMatrix invert_exact(const IntMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a(n, std::vector<Rat>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = to_rat(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw InternalError("Cartan matrix is singular");
        std::swap(a[piv], a[col]);
        Rat d = a[col][col];
        for (auto& x : a[col]) x /= d;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    RatMatrix inv(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

long long det_exact(const IntMatrix& m) {
    RatMatrix a(m.size(), std::vector<Rat>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = to_rat(m[i][j]);
    Rat det = 1;
    for (std::size_t col = 0; col < a.size(); ++col) {
        std::size_t piv = col;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < a.size(); ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < a.size(); ++j) a[r][j] -= f * a[col][j];
        }
    }
    if (det.get_den() != 1) throw InternalError("integer determinant expected");
    return static_cast<long long>(det.get_num().get_si());
}

} // namespace

RootSystemData build_root_system(char kind, int rank) {
    RootSystemData rs;
    rs.kind = kind;
    rs.rank = rank;

    auto edges = dynkin_edges(kind, rank);
    rs.cartan.assign(rank, std::vector<long long>(rank, 0));
    for (int i = 0; i < rank; ++i) rs.cartan[i][i] = 2;
    for (auto [a, b] : edges) {
        rs.cartan[a - 1][b - 1] = -1;
        rs.cartan[b - 1][a - 1] = -1;
    }
    rs.cartan_inv = invert_exact(rs.cartan);
    rs.cartan_det = det_exact(rs.cartan);
    rs.cartan_adj.assign(rank, std::vector<long long>(rank, 0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rat x = to_rat(rs.cartan_det) * rs.cartan_inv[i][j];
            if (x.get_den() != 1) throw InternalError("adjugate not integral");
            rs.cartan_adj[i][j] = static_cast<long long>(x.get_num().get_si());
        }

    // close the simple roots under simple reflections; track fundamental and
    // root coordinates together
    struct R {
        Weight fc;
        std::vector<long long> rc;
    };
    std::map<Weight, std::vector<long long>> all;
    std::vector<R> frontier;
    for (int i = 0; i < rank; ++i) {
        R r;
        r.fc = Weight(rank);
        for (int j = 0; j < rank; ++j) r.fc[j] = rs.cartan[j][i];
        r.rc.assign(rank, 0);
        r.rc[i] = 1;
        all[r.fc] = r.rc;
        frontier.push_back(r);
    }
    while (!frontier.empty()) {
        std::vector<R> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < rank; ++i) {
                R s;
                s.fc = r.fc;
                long long pi = r.fc[i];
                for (int j = 0; j < rank; ++j) s.fc[j] -= pi * rs.cartan[i][j];
                s.rc = r.rc;
                s.rc[i] -= pi;
                if (all.emplace(s.fc, s.rc).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    for (const auto& [fc, rc] : all) {
        long long ht = 0;
        bool pos = true;
        for (auto x : rc) {
            ht += x;
            if (x < 0) pos = false;
        }
        if (!pos) continue;
        rs.positive_roots.push_back(fc);
        rs.pos_rc.push_back(rc);
        if (rs.theta.c.empty() || ht > std::accumulate(rs.theta_rc.begin(), rs.theta_rc.end(), 0LL)) {
            rs.theta = fc;
            rs.theta_rc = rc;
        }
    }

    long long npos = static_cast<long long>(rs.positive_roots.size());
    long long theta_ht = std::accumulate(rs.theta_rc.begin(), rs.theta_rc.end(), 0LL);
    rs.coxeter = theta_ht + 1;
    rs.dim_g = rank + 2 * npos;
    if (npos * 2 != rank * rs.coxeter) throw InternalError("root count inconsistent with Coxeter number");

    rs.rho = Weight(rank);
    for (int i = 0; i < rank; ++i) rs.rho[i] = 1;

    for (int i = 0; i < rank; ++i)
        if (rs.theta_rc[i] == 1) rs.minuscule.push_back(i + 1);

    auto seg = w0_segments(kind, rank);
    for (int i = rank; i >= 1; --i) {
        rs.w0_blocks.push_back(static_cast<int>(seg[i].size()));
        for (auto it = seg[i].rbegin(); it != seg[i].rend(); ++it) rs.w0_word.push_back(*it);
    }
    if (static_cast<long long>(rs.w0_word.size()) != npos)
        throw InternalError("longest-element word length != number of positive roots");

    return rs;
}

RootSystemData build_root_system(const std::string& type) {
    if (type.size() < 2) throw ConfigError("type must look like A2, D4, E6");
    char kind = type[0];
    int rank = 0;
    try {
        rank = std::stoi(type.substr(1));
    } catch (...) {
        throw ConfigError("cannot parse rank in type " + type);
    }
    return build_root_system(kind, rank);
}

Rat pairing(const RootSystemData& rs, const Weight& mu, const Weight& nu) {
    if (mu.rank() != static_cast<std::size_t>(rs.rank) || nu.rank() != static_cast<std::size_t>(rs.rank))
        throw ArgumentError("pairing: rank mismatch");
    Rat acc = 0;
    for (int i = 0; i < rs.rank; ++i) {
        if (mu[i] == 0) continue;
        for (int j = 0; j < rs.rank; ++j) {
            if (nu[j] == 0) continue;
            acc += to_rat(mu[i]) * rs.cartan_inv[i][j] * to_rat(nu[j]);
        }
    }
    return acc;
}

std::vector<long long> root_coords_scaled(const RootSystemData& rs, const Weight& mu) {
    std::vector<long long> out(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) out[i] += rs.cartan_adj[i][j] * mu[j];
    return out;
}

long long pairing_with_root_rc(const std::vector<long long>& rc, const Weight& mu) {
    long long acc = 0;
    for (std::size_t i = 0; i < rc.size(); ++i) acc += rc[i] * mu[i];
    return acc;
}

WeylElement weyl_identity(const RootSystemData& rs) {
    WeylElement w;
    w.mat.assign(rs.rank, std::vector<long long>(rs.rank, 0));
    for (int i = 0; i < rs.rank; ++i) w.mat[i][i] = 1;
    return w;
}

static IntMatrix reflection_matrix(const RootSystemData& rs, int i1based) {
    IntMatrix m(rs.rank, std::vector<long long>(rs.rank, 0));
    // (sigma_i mu)_j = mu_j - c_ij * mu_i
    for (int j = 0; j < rs.rank; ++j) {
        m[j][j] = 1;
        m[j][i1based - 1] -= rs.cartan[i1based - 1][j];
    }
    return m;
}

WeylElement simple_reflection(const RootSystemData& rs, int i1based) {
    if (i1based < 1 || i1based > rs.rank) throw ArgumentError("reflection index out of range");
    WeylElement w;
    w.word = {i1based};
    w.mat = reflection_matrix(rs, i1based);
    w.length = 1;
    w.sign = -1;
    return w;
}

WeylElement weyl_compose_reflection(const RootSystemData& rs, const WeylElement& w, int i1based) {
    WeylElement out;
    out.word = w.word;
    out.word.push_back(i1based);
    IntMatrix refl = reflection_matrix(rs, i1based);
    out.mat.assign(rs.rank, std::vector<long long>(rs.rank, 0));
    for (int i = 0; i < rs.rank; ++i)
        for (int k = 0; k < rs.rank; ++k) {
            if (refl[i][k] == 0) continue;
            for (int j = 0; j < rs.rank; ++j) out.mat[i][j] += refl[i][k] * w.mat[k][j];
        }
    out.length = weyl_length_from_matrix(rs, out);
    out.sign = (out.word.size() % 2 == 0) ? 1 : -1;
    return out;
}

WeylElement weyl_from_word(const RootSystemData& rs, const std::vector<int>& word) {
    WeylElement w = weyl_identity(rs);
    for (int i : word) w = weyl_compose_reflection(rs, w, i);
    return w;
}

Weight apply_weyl(const WeylElement& w, const Weight& mu) {
    if (mu.rank() != w.mat.size()) throw ArgumentError("apply_weyl: rank mismatch");
    Weight out(mu.rank());
    for (std::size_t i = 0; i < w.mat.size(); ++i) {
        long long acc = 0;
        for (std::size_t j = 0; j < w.mat.size(); ++j) acc += w.mat[i][j] * mu[j];
        out[i] = acc;
    }
    return out;
}

int weyl_length_from_matrix(const RootSystemData& rs, const WeylElement& w) {
    int cnt = 0;
    for (const auto& alpha : rs.positive_roots) {
        Weight img = apply_weyl(w, alpha);
        auto rc = root_coords_scaled(rs, img);
        bool neg = true;
        for (auto x : rc)
            if (x > 0) neg = false;
        if (neg) ++cnt;
    }
    return cnt;
}

bool word_is_reduced(const RootSystemData& rs, const std::vector<int>& word) {
    WeylElement w = weyl_identity(rs);
    int len = 0;
    for (int i : word) {
        w = weyl_compose_reflection(rs, w, i);
        ++len;
        if (w.length != len) return false;
    }
    return true;
}

std::vector<WeylElement> enumerate_weyl(const RootSystemData& rs, const Caps& caps) {
    std::vector<WeylElement> out;
    std::set<IntMatrix> seen;
    out.push_back(weyl_identity(rs));
    seen.insert(out[0].mat);
    std::size_t head = 0;
    while (head < out.size()) {
        WeylElement cur = out[head++];
        for (int i = 1; i <= rs.rank; ++i) {
            WeylElement nxt = weyl_compose_reflection(rs, cur, i);
            if (seen.insert(nxt.mat).second) {
                if (out.size() >= caps.max_weyl)
                    throw ResourceError("Weyl group larger than cap " + std::to_string(caps.max_weyl));
                out.push_back(std::move(nxt));
            }
        }
    }
    return out;
}

Int weyl_dimension(const RootSystemData& rs, const Weight& beta) {
    if (!beta.is_dominant()) throw ArgumentError("weyl_dimension: weight must be dominant");
    Weight shifted = beta + rs.rho;
    Rat prod = 1;
    for (const auto& rc_scaled : rs.pos_rc) {
        long long num = pairing_with_root_rc(rc_scaled, shifted);
        long long den = pairing_with_root_rc(rc_scaled, rs.rho);
        prod *= rat_frac(num, den);
    }
    prod.canonicalize();
    if (prod.get_den() != 1) throw InternalError("Weyl dimension product is not an integer");
    return prod.get_num();
}

std::vector<long long> pq_class(const RootSystemData& rs, const Weight& mu) {
    auto rc = root_coords_scaled(rs, mu);
    long long d = rs.cartan_det;
    for (auto& x : rc) {
        x %= d;
        if (x < 0) x += d;
    }
    return rc;
}

} // namespace logw
