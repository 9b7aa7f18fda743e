#pragma once

#include "logw/lambda_calc.hpp"
#include "logw/qz_series.hpp"

namespace logw {

// central charge of the shifted conformal vector: l + h*dim(g)*(2 - p - 1/p)
Rat central_charge(const RootSystemData& rs, int p);

// conformal weight of the vacuum vector of the Fock sector at -sqrt(p)*beta + lambda-bar
Rat delta(const RootSystemData& rs, int p, const Weight& beta, const LambdaParam& lam);
// same for a lattice point -sqrt(p)*beta + (1/sqrt p)*w with an arbitrary integer w
Rat delta_general(const RootSystemData& rs, int p, const Weight& beta, const Weight& w);

// graded trace (including the q^{-c/24} shift) of the free-field block
// attached to a dominant alpha + hat: the signed Weyl sum of the sector
// exponents divided by the l-th eta power
QSeries theta_trace(const RootSystemData& rs, const LambdaParam& lam, const Weight& alpha, const Rat& order,
                    const Caps& caps = Caps{});

struct CharSide {
    enum class Which { euler, rhs } which = Which::euler;
    QZSeries series;
    LambdaParam lambda;
    Rat order = 0;
    std::size_t alpha_terms = 0; // lattice points that contributed
};

// fixed-point (Euler) form: signed sum over the Weyl group and the root
// lattice, divided exactly by the z-denominator per q-power, times eta^{-l}
CharSide euler_character(const RootSystemData& rs, const LambdaParam& lam, const Rat& order,
                         const Caps& caps = Caps{});

// decomposition form: sum over dominant alpha in the root lattice of the Weyl
// character times the theta trace; requires an alcove parameter unless
// allow_nonalcove is set (output is then conjectural)
CharSide rhs_character(const RootSystemData& rs, const LambdaParam& lam, const Rat& order,
                       const Caps& caps = Caps{}, bool allow_nonalcove = false);

struct CompareDiff {
    Rat q;
    Weight z;
    Rat lhs, rhs;
};

struct CompareReport {
    Rat order = 0;
    bool matches = true;
    std::vector<CompareDiff> diffs;
};

CompareReport compare_sides(const CharSide& a, const CharSide& b);
std::string compare_report_json(const CompareReport& rep);

// dominant root-lattice points alpha with |alpha| <= bound-implied radius,
// ordered by ((alpha,alpha), lex); helper shared by rhs and the tests
std::vector<Weight> dominant_q_points(const RootSystemData& rs, const Rat& norm2_bound);

} // namespace logw
