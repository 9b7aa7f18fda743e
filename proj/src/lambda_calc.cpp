#include "logw/lambda_calc.hpp"

#include <algorithm>

#include "logw/errors.hpp"

namespace logw {

LambdaParam lambda_zero(const RootSystemData& rs, int p) {
    if (p < 2) throw ArgumentError("p must be >= 2");
    LambdaParam lam;
    lam.p = p;
    lam.hat_index = -1;
    lam.s.assign(rs.rank, 0);
    return lam;
}

LambdaParam lambda_make(const RootSystemData& rs, int p, int hat_index, std::vector<long long> s) {
    if (p < 2) throw ArgumentError("p must be >= 2");
    if (hat_index < -1 || hat_index >= static_cast<int>(rs.minuscule.size()))
        throw ArgumentError("hat index out of range");
    if (s.size() != static_cast<std::size_t>(rs.rank)) throw ArgumentError("s-vector rank mismatch");
    for (auto x : s)
        if (x < 0 || x > p - 1) throw ArgumentError("s-vector outside the box [0, p-1]");
    LambdaParam lam;
    lam.p = p;
    lam.hat_index = hat_index;
    lam.s = std::move(s);
    return lam;
}

Weight hat_weight(const RootSystemData& rs, const LambdaParam& lam) {
    if (lam.hat_index < 0) return Weight(rs.rank);
    return fundamental_weight(rs.rank, rs.minuscule[lam.hat_index]);
}

std::string lambda_str(const RootSystemData& rs, const LambdaParam& lam) {
    std::string h = lam.hat_index < 0 ? "0" : "w" + std::to_string(rs.minuscule[lam.hat_index]);
    std::string s = "";
    for (std::size_t i = 0; i < lam.s.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lam.s[i]);
    }
    return "hat=" + h + ",s=" + s;
}

std::vector<LambdaParam> lambda_enumerate(const RootSystemData& rs, int p, const Caps& caps) {
    std::size_t count = rs.minuscule.size() + 1;
    for (int i = 0; i < rs.rank; ++i) {
        count *= static_cast<std::size_t>(p);
        if (count > caps.max_lambda) throw ResourceError("Lambda larger than cap");
    }
    std::vector<LambdaParam> out;
    out.reserve(count);
    for (int h = -1; h < static_cast<int>(rs.minuscule.size()); ++h) {
        std::vector<long long> s(rs.rank, 0);
        while (true) {
            out.push_back(lambda_make(rs, p, h, s));
            int k = rs.rank - 1;
            while (k >= 0 && s[k] == p - 1) s[k--] = 0;
            if (k < 0) break;
            ++s[k];
        }
    }
    return out;
}

namespace {

int hat_rep_index(const RootSystemData& rs, const Weight& mu) {
    auto cls = pq_class(rs, mu);
    if (cls == pq_class(rs, Weight(rs.rank))) return -1;
    for (std::size_t k = 0; k < rs.minuscule.size(); ++k)
        if (cls == pq_class(rs, fundamental_weight(rs.rank, rs.minuscule[k]))) return static_cast<int>(k);
    throw InternalError("no coset representative found in {0} + minuscule");
}

// carry and box part of an integer weight: mu = p*eps + s', 0 <= s'_i <= p-1
std::pair<Weight, std::vector<long long>> box_reduce(const Weight& mu, int p) {
    Weight eps(mu.rank());
    std::vector<long long> s(mu.rank());
    for (std::size_t i = 0; i < mu.rank(); ++i) {
        eps[i] = floordiv(mu[i], p);
        s[i] = mu[i] - static_cast<long long>(p) * eps[i];
    }
    return {eps, s};
}

Weight s_as_weight(const LambdaParam& lam) {
    Weight w(lam.s.size());
    for (std::size_t i = 0; i < lam.s.size(); ++i) w[i] = lam.s[i];
    return w;
}

} // namespace

std::pair<LambdaParam, Weight> star_action(const RootSystemData& rs, const LambdaParam& lam, int i) {
    Weight shifted = s_as_weight(lam) + rs.rho;
    Weight mu = apply_weyl(simple_reflection(rs, i), shifted) - rs.rho;
    auto [eps, snew] = box_reduce(mu, lam.p);
    LambdaParam out;
    out.p = lam.p;
    out.s = snew;
    out.hat_index = hat_rep_index(rs, hat_weight(rs, lam) - eps);
    return {out, eps};
}

Weight epsilon_of(const RootSystemData& rs, const LambdaParam& lam, const WeylElement& w) {
    Weight mu = apply_weyl(w, s_as_weight(lam) + rs.rho) - rs.rho;
    return box_reduce(mu, lam.p).first;
}

Weight epsilon_of(const RootSystemData& rs, const LambdaParam& lam, const std::vector<int>& word) {
    if (!word_is_reduced(rs, word)) throw ArgumentError("word is not reduced");
    return epsilon_of(rs, lam, weyl_from_word(rs, word));
}

EpsilonChain epsilon_chain(const RootSystemData& rs, const LambdaParam& lam, const std::vector<int>& word) {
    EpsilonChain ch;
    ch.lambda = lam;
    ch.word = word;
    ch.cumulative = Weight(rs.rank);
    LambdaParam cur = lam;
    WeylElement prefix = weyl_identity(rs);
    for (std::size_t n = 0; n < word.size(); ++n) {
        // stepwise condition: the carry of the current prefix pairs to zero
        // with the next simple root
        if (n >= 1 && ch.condition1) {
            Weight eps_prefix = epsilon_of(rs, lam, prefix);
            long long pr = eps_prefix[word[n] - 1];
            if (pr != 0) {
                ch.condition1 = false;
                ch.first_violation = static_cast<int>(n);
                ch.violation_pairing = pr;
            }
        }
        auto [next, eps] = star_action(rs, cur, word[n]);
        ch.steps.push_back(eps);
        ch.lambda_after.push_back(next);
        ch.cumulative += eps;
        cur = next;
        prefix = weyl_compose_reflection(rs, prefix, word[n]);
    }
    return ch;
}

bool check_alcove(const RootSystemData& rs, const LambdaParam& lam) {
    long long stheta = pairing_with_root_rc(rs.theta_rc, s_as_weight(lam));
    return stheta + rs.coxeter - 1 <= lam.p;
}

bool check_novel(const RootSystemData& rs, const LambdaParam& lam, const std::set<int>& J) {
    for (int j : J) {
        if (j < 1 || j > rs.rank) throw ArgumentError("index set outside 1..rank");
        Weight eps = star_action(rs, lam, j).second;
        Weight minus_alpha(rs.rank);
        for (int k = 0; k < rs.rank; ++k) minus_alpha[k] = -rs.cartan[j - 1][k];
        if (eps == minus_alpha) continue;
        for (int i : J) {
            long long want = (i == j) ? -1 : 0;
            if (eps[i - 1] != want) return false;
        }
    }
    return true;
}

bool check_novel_full(const RootSystemData& rs, const LambdaParam& lam) {
    std::set<int> J;
    for (int i = 1; i <= rs.rank; ++i) J.insert(i);
    return check_novel(rs, lam, J);
}

CondScanReport condequiv_scan(const RootSystemData& rs, int p, const Caps& caps) {
    CondScanReport rep;
    for (const auto& lam : lambda_enumerate(rs, p, caps)) {
        ++rep.total;
        bool alcove = check_alcove(rs, lam);
        EpsilonChain ch = epsilon_chain(rs, lam, rs.w0_word);
        if (ch.condition1 != alcove) rep.mismatches.push_back(lam);
        if (alcove) {
            ++rep.alcove_count;
            // cumulative-sum form of the stepwise condition
            Weight acc(rs.rank);
            for (std::size_t n = 0; n + 1 < ch.steps.size(); ++n) {
                acc += ch.steps[n];
                if (acc[rs.w0_word[n + 1] - 1] != 0) rep.partial_sum_condition_ok = false;
            }
        } else {
            if (!(ch.first_violation >= 1 && ch.violation_pairing > 0))
                rep.nonalcove_positive_violation = false;
            if (check_novel_full(rs, lam)) rep.novel_not_alcove.push_back(lam);
        }
    }
    return rep;
}

std::vector<Table2Block> table2_generate(const RootSystemData& rs, const LambdaParam& lam) {
    if (!check_alcove(rs, lam)) throw ArgumentError("table requires an alcove parameter");
    EpsilonChain ch = epsilon_chain(rs, lam, rs.w0_word);
    std::vector<Table2Block> blocks;
    std::size_t pos = 0;
    for (std::size_t b = 0; b < rs.w0_blocks.size(); ++b) {
        Table2Block blk;
        blk.hi = rs.rank + 1 - static_cast<int>(b);
        blk.lo = blk.hi - 1;
        for (int k = 0; k < rs.w0_blocks[b]; ++k, ++pos) {
            blk.letters.push_back(rs.w0_word[pos]);
            blk.steps.push_back(ch.steps[pos]);
        }
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

long long cohomology_dim(const RootSystemData& rs, const Weight& mu, int i, int n) {
    if (i < 1 || i > rs.rank) throw ArgumentError("reflection index out of range");
    if (n < 0) throw ArgumentError("cohomological degree must be >= 0");
    long long m = mu[i - 1];
    if (n == 0 && m >= 0) return m + 1;
    if (n == 1 && m < 0) return -m - 1;
    return 0;
}

} // namespace logw
