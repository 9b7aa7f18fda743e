#pragma once

#include <map>
#include <vector>

#include "logw/characters.hpp"
#include "logw/lambda_calc.hpp"
#include "logw/quad_scalar.hpp"

namespace logw {

// Basis monomial of a Fock space over the rescaled lattice: creation
// operators applied to the vacuum of the sector at -sqrt(p)*beta + (1/sqrt
// p)*wpart. Creations are a sorted multiset of (direction, mode).
struct FockBasisVector {
    Weight beta;
    Weight wpart;
    std::vector<std::pair<int, int>> creations; // (i 1-based, n >= 1)

    long long depth() const {
        long long d = 0;
        for (auto [i, n] : creations) d += n;
        return d;
    }
    bool operator==(const FockBasisVector& o) const {
        return beta == o.beta && wpart == o.wpart && creations == o.creations;
    }
    bool operator<(const FockBasisVector& o) const {
        if (beta != o.beta) return beta < o.beta;
        if (wpart != o.wpart) return wpart < o.wpart;
        return creations < o.creations;
    }
    std::string str() const;
};

Rat fock_weight(const RootSystemData& rs, int p, const FockBasisVector& v);

struct FockElement {
    std::map<FockBasisVector, QuadScalar> terms;

    bool is_zero() const { return terms.empty(); }
};

void fock_add_term(FockElement& e, const FockBasisVector& v, const QuadScalar& c);
FockElement fock_add(const FockElement& x, const FockElement& y);
FockElement fock_scale(const FockElement& x, const QuadScalar& c, long long p);

// graded basis of the module labelled by lam, every vector of conformal
// weight <= delta_max, grouped by exact weight and deterministically ordered
struct GradedBasis {
    std::map<Rat, std::vector<FockBasisVector>> by_weight;
    std::size_t total = 0;
};
GradedBasis graded_basis(const RootSystemData& rs, const LambdaParam& lam, const Rat& delta_max,
                         const Caps& caps = Caps{});

FockElement heisenberg_act(const RootSystemData& rs, int p, int i1based, long long mode, const FockElement& x);

// zero mode of the sector-shift field attached to sqrt(p)*alpha_i
FockElement screening_f(const RootSystemData& rs, int p, int i1based, const FockElement& x);
// zero mode of the sector-shift field attached to -(1/sqrt p)*alpha_i;
// requires p | wpart_i on every term (single-current case)
FockElement narrow_f(const RootSystemData& rs, int p, int i1based, const FockElement& x);

// Cartan action: diagonal with exact rational sector eigenvalue
FockElement h_action(const RootSystemData& rs, const LambdaParam& lam, int i1based, const Weight& mu,
                     const FockElement& x);
Rat h_eigenvalue(const RootSystemData& rs, const LambdaParam& lam, int i1based, const Weight& mu,
                 const FockBasisVector& v);

// dense matrices over Q(sqrt p)
using QuadMatrix = std::vector<std::vector<QuadScalar>>;
std::size_t quad_matrix_rank(QuadMatrix m, long long p);
std::vector<std::vector<QuadScalar>> quad_matrix_kernel(const QuadMatrix& m, std::size_t cols, long long p);

struct KernelWeightEntry {
    std::size_t ambient = 0, kernel = 0;
};
struct KernelEntry {
    Rat delta;
    std::size_t ambient = 0, kernel = 0;
    std::map<Weight, KernelWeightEntry> by_weight; // filled when refined
};
struct GradedKernelReport {
    LambdaParam lambda;
    std::vector<int> J;
    bool refined = false;
    std::vector<KernelEntry> entries;
};

GradedKernelReport kernel_graded_dims(const RootSystemData& rs, const LambdaParam& lam, const std::vector<int>& J,
                                      const Rat& delta_max, bool refine_by_weight, const Caps& caps = Caps{});
std::string kernel_report_json(const RootSystemData& rs, const GradedKernelReport& rep);

// joint-kernel basis vectors at one conformal weight (used by stability and
// rescaling tests)
std::vector<FockElement> kernel_vectors_at(const RootSystemData& rs, const LambdaParam& lam,
                                           const std::vector<int>& J, const Rat& delta,
                                           const Caps& caps = Caps{});

struct RelationCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};
struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass = true;
};

// exact operator-relation suite on the vacuum-parameter module up to delta_max
RelationReport relation_suite(const RootSystemData& rs, int p, const Rat& delta_max, const Caps& caps = Caps{});
std::string relation_report_json(const RelationReport& rep);

} // namespace logw
