#pragma once

#include <set>
#include <vector>

#include "logw/root_data.hpp"

namespace logw {

// Parameter of an irreducible module over the rescaled-lattice vertex
// algebra: a rescaling level p, a coset part (hat) chosen among 0 and the
// minuscule fundamental weights, and a box-restricted integer vector s with
// 0 <= s_i <= p-1.
struct LambdaParam {
    int p = 2;
    int hat_index = -1; // -1 = zero, otherwise 0-based index into minuscule
    std::vector<long long> s;

    bool operator==(const LambdaParam& o) const {
        return p == o.p && hat_index == o.hat_index && s == o.s;
    }
};

LambdaParam lambda_zero(const RootSystemData& rs, int p);
LambdaParam lambda_make(const RootSystemData& rs, int p, int hat_index, std::vector<long long> s);
Weight hat_weight(const RootSystemData& rs, const LambdaParam& lam);
std::string lambda_str(const RootSystemData& rs, const LambdaParam& lam);

// all (|minuscule|+1) * p^rank parameters, hat-major, s lexicographic
std::vector<LambdaParam> lambda_enumerate(const RootSystemData& rs, int p, const Caps& caps = Caps{});

// One reflection step of the shifted, rescaled Weyl action. Returns the new
// parameter sigma_i * lambda together with the integral carry weight eps:
// sigma_i(s + rho) - rho = p*eps + s' with s' box-restricted, and the hat
// part moves to the coset representative of [hat - eps].
std::pair<LambdaParam, Weight> star_action(const RootSystemData& rs, const LambdaParam& lam, int i1based);

// carry weight of a full group element, computed directly from its matrix
Weight epsilon_of(const RootSystemData& rs, const LambdaParam& lam, const WeylElement& w);
// same, from a word; rejects non-reduced words
Weight epsilon_of(const RootSystemData& rs, const LambdaParam& lam, const std::vector<int>& word);

// Stepwise carry data along a word (application order). steps[j] is the
// single-reflection carry at the j-th step; cumulative is their sum, which
// equals the direct carry of the full word when condition1 holds.
struct EpsilonChain {
    LambdaParam lambda;
    std::vector<int> word;
    std::vector<Weight> steps;
    std::vector<LambdaParam> lambda_after; // parameter after each step
    Weight cumulative;
    bool condition1 = true;   // (eps(prefix_n), alpha_{i_{n+1}}) = 0 at every step
    int first_violation = -1; // 1-based prefix length of the first failure
    long long violation_pairing = 0;
};

EpsilonChain epsilon_chain(const RootSystemData& rs, const LambdaParam& lam, const std::vector<int>& word);

// (s, theta) + h - 1 <= p
bool check_alcove(const RootSystemData& rs, const LambdaParam& lam);

// for every (i,j) in JxJ: eps_lambda(sigma_j) = -alpha_j or
// (eps_lambda(sigma_j), alpha_i) = -delta_ij
bool check_novel(const RootSystemData& rs, const LambdaParam& lam, const std::set<int>& J);
bool check_novel_full(const RootSystemData& rs, const LambdaParam& lam);

struct CondScanReport {
    std::size_t total = 0;
    std::size_t alcove_count = 0;
    std::vector<LambdaParam> mismatches;            // condition1 != alcove condition
    bool partial_sum_condition_ok = true;           // cumulative-sum pairings vanish for alcove lambdas
    bool nonalcove_positive_violation = true;       // each non-alcove lambda fails with a positive pairing
    std::vector<LambdaParam> novel_not_alcove;      // full novel condition holds, alcove fails
};

// exhaustive equivalence scan of the stepwise-carry condition along the fixed
// longest-element word against the alcove condition, over all of Lambda
CondScanReport condequiv_scan(const RootSystemData& rs, int p, const Caps& caps = Caps{});

struct Table2Block {
    int hi = 0, lo = 0; // block label (hi, lo) = (i+1, i)
    std::vector<int> letters;
    std::vector<Weight> steps;
};

// carry-step sequences along the fixed longest-element word, grouped by the
// table segments; requires an alcove parameter
std::vector<Table2Block> table2_generate(const RootSystemData& rs, const LambdaParam& lam);

// graded dimension of the rank-one parabolic cohomology of the line C_mu
long long cohomology_dim(const RootSystemData& rs, const Weight& mu, int i1based, int n);

} // namespace logw
