#pragma once

#include <vector>

#include "logw/caps.hpp"
#include "logw/rational.hpp"
#include "logw/weight.hpp"

namespace logw {

using IntMatrix = std::vector<std::vector<long long>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Simple-reflection word together with its matrix realization on
// fundamental-weight coordinates. Words are stored in application order:
// word = (i1, i2, ..., in) represents sigma_{in} ... sigma_{i2} sigma_{i1},
// i.e. sigma_{i1} acts first. Equality of group elements is matrix equality.
struct WeylElement {
    std::vector<int> word; // 1-based reflection indices, application order
    IntMatrix mat;         // acts on fundamental coordinates
    int length = 0;
    int sign = 1;
};

// Immutable root-system package for the simply-laced types A, D, E.
struct RootSystemData {
    char kind = 'A'; // 'A', 'D' or 'E'
    int rank = 0;

    IntMatrix cartan;       // (c_ij), symmetric, diagonal 2
    RatMatrix cartan_inv;   // (c^{ij}), exact
    IntMatrix cartan_adj;   // cartan_det * cartan_inv (integer)
    long long cartan_det = 1;

    std::vector<Weight> positive_roots;          // fundamental coordinates
    std::vector<std::vector<long long>> pos_rc;  // matching root coordinates
    Weight theta;                                // highest root
    std::vector<long long> theta_rc;
    Weight rho;                                  // (1,...,1)
    long long coxeter = 0;
    long long dim_g = 0;
    std::vector<int> minuscule; // 1-based fundamental indices with (omega,theta)=1

    // Fixed reduced word for the longest element, application order, split
    // into the table segments it was assembled from (first-applied first).
    std::vector<int> w0_word;
    std::vector<int> w0_blocks;

    std::string type_name() const { return std::string(1, kind) + std::to_string(rank); }
};

RootSystemData build_root_system(char kind, int rank);
RootSystemData build_root_system(const std::string& type); // e.g. "A2", "D4", "E6"

// mu^T * C^{-1} * nu, exact and symmetric
Rat pairing(const RootSystemData& rs, const Weight& mu, const Weight& nu);

// integer root coordinates scaled by det(C): cartan_adj * mu
std::vector<long long> root_coords_scaled(const RootSystemData& rs, const Weight& mu);

// (mu, alpha) for alpha given by integer root coordinates: exact integer
long long pairing_with_root_rc(const std::vector<long long>& rc, const Weight& mu);

WeylElement weyl_identity(const RootSystemData& rs);
WeylElement simple_reflection(const RootSystemData& rs, int i1based);
// left-multiply: sigma_i * w (i acts after w)
WeylElement weyl_compose_reflection(const RootSystemData& rs, const WeylElement& w, int i1based);
WeylElement weyl_from_word(const RootSystemData& rs, const std::vector<int>& word_application_order);

Weight apply_weyl(const WeylElement& w, const Weight& mu);

// number of positive roots sent to negative ones; equals the reduced length
int weyl_length_from_matrix(const RootSystemData& rs, const WeylElement& w);
bool word_is_reduced(const RootSystemData& rs, const std::vector<int>& word);

std::vector<WeylElement> enumerate_weyl(const RootSystemData& rs, const Caps& caps = Caps{});

Int weyl_dimension(const RootSystemData& rs, const Weight& beta_dominant);

// class of [mu] in P/Q as root coordinates scaled by det(C), reduced mod det(C)
std::vector<long long> pq_class(const RootSystemData& rs, const Weight& mu);

} // namespace logw
