#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "logw/root_data.hpp"

using namespace logw;

namespace {

const std::vector<std::string> kAllTypes = {"A1", "A2", "A3", "A4", "A5", "D3", "D4", "D5", "E6", "E7", "E8"};

Weight simple_root(const RootSystemData& rs, int i) {
    Weight a(rs.rank);
    for (int j = 0; j < rs.rank; ++j) a[j] = rs.cartan[i - 1][j];
    return a;
}

} // namespace

TEST_CASE("structural invariants of every supported root system") {
    for (const auto& type : kAllTypes) {
        CAPTURE(type);
        RootSystemData rs = build_root_system(type);

        for (int i = 0; i < rs.rank; ++i) {
            CHECK(rs.cartan[i][i] == 2);
            for (int j = 0; j < rs.rank; ++j) {
                CHECK(rs.cartan[i][j] == rs.cartan[j][i]);
                if (i != j) CHECK((rs.cartan[i][j] == 0 || rs.cartan[i][j] == -1));
                Rat acc = 0;
                for (int k = 0; k < rs.rank; ++k) acc += to_rat(rs.cartan[i][k]) * rs.cartan_inv[k][j];
                CHECK(acc == (i == j ? 1 : 0));
            }
        }

        CHECK(2 * static_cast<long long>(rs.positive_roots.size()) == rs.rank * rs.coxeter);
        CHECK(rs.w0_word.size() == rs.positive_roots.size());
        CHECK(std::accumulate(rs.w0_blocks.begin(), rs.w0_blocks.end(), 0) ==
              static_cast<int>(rs.w0_word.size()));
        CHECK(rs.dim_g == rs.rank + 2 * static_cast<long long>(rs.positive_roots.size()));
        CHECK(pairing_with_root_rc(rs.theta_rc, rs.rho) == rs.coxeter - 1);

        for (int i = 1; i <= rs.rank; ++i) CHECK(pairing(rs, simple_root(rs, i), simple_root(rs, i)) == 2);
        for (int m : rs.minuscule) CHECK(pairing_with_root_rc(rs.theta_rc, fundamental_weight(rs.rank, m)) == 1);
    }
}

TEST_CASE("the stored longest-element word is reduced and maximal") {
    for (const auto& type : kAllTypes) {
        CAPTURE(type);
        RootSystemData rs = build_root_system(type);
        CHECK(word_is_reduced(rs, rs.w0_word));
        WeylElement w0 = weyl_from_word(rs, rs.w0_word);
        CHECK(w0.length == static_cast<int>(rs.positive_roots.size()));
        // the longest element sends every positive root to a negative one
        for (const auto& alpha : rs.positive_roots) {
            auto rc = root_coords_scaled(rs, apply_weyl(w0, alpha));
            for (auto x : rc) CHECK(x <= 0);
        }
        CHECK(apply_weyl(w0, rs.rho) == -rs.rho);
    }
}

TEST_CASE("specific root-system facts") {
    RootSystemData a1 = build_root_system('A', 1);
    CHECK(a1.cartan == IntMatrix{{2}});
    CHECK(a1.positive_roots.size() == 1);
    CHECK(a1.coxeter == 2);
    CHECK(a1.w0_word == std::vector<int>{1});

    RootSystemData a2 = build_root_system('A', 2);
    CHECK(a2.theta == Weight{1, 1});
    CHECK(a2.positive_roots.size() == 3);
    CHECK(a2.w0_word == std::vector<int>{2, 1, 2});

    RootSystemData d4 = build_root_system('D', 4);
    CHECK(d4.positive_roots.size() == 12);
    CHECK(d4.coxeter == 6);
    CHECK(d4.minuscule == std::vector<int>{1, 3, 4});

    RootSystemData e6 = build_root_system('E', 6);
    CHECK(e6.positive_roots.size() == 36);
    CHECK(e6.coxeter == 12);
    CHECK(e6.minuscule == std::vector<int>{1, 6});
    RootSystemData e7 = build_root_system('E', 7);
    CHECK(e7.positive_roots.size() == 63);
    CHECK(e7.minuscule == std::vector<int>{7});
    RootSystemData e8 = build_root_system('E', 8);
    CHECK(e8.positive_roots.size() == 120);
    CHECK(e8.minuscule.empty());

    CHECK_THROWS_AS(build_root_system('D', 2), ConfigError);
    CHECK_THROWS_AS(build_root_system('E', 9), ConfigError);
    CHECK_THROWS_AS(build_root_system('B', 2), ConfigError);
}

TEST_CASE("pairing values") {
    RootSystemData a2 = build_root_system('A', 2);
    CHECK(pairing(a2, fundamental_weight(2, 1), simple_root(a2, 1)) == 1);
    CHECK(pairing(a2, fundamental_weight(2, 1), fundamental_weight(2, 1)) == Rat(2, 3));
    CHECK(pairing(a2, Weight{1, 2}, Weight{2, 1}) == pairing(a2, Weight{2, 1}, Weight{1, 2}));
    CHECK_THROWS_AS(pairing(a2, Weight{1}, Weight{1, 2}), ArgumentError);
}

TEST_CASE("reflection action") {
    RootSystemData a1 = build_root_system('A', 1);
    CHECK(apply_weyl(simple_reflection(a1, 1), fundamental_weight(1, 1)) == Weight{-1});

    RootSystemData a2 = build_root_system('A', 2);
    CHECK(apply_weyl(simple_reflection(a2, 1), simple_root(a2, 2)) == simple_root(a2, 1) + simple_root(a2, 2));
    // involution and composition against words
    WeylElement s1 = simple_reflection(a2, 1);
    WeylElement s1s1 = weyl_compose_reflection(a2, s1, 1);
    CHECK(s1s1.mat == weyl_identity(a2).mat);
}

TEST_CASE("Weyl enumeration with lengths, signs and invariance of the form") {
    std::mt19937 rng(12345);
    for (const auto& type : {std::string("A1"), std::string("A2"), std::string("A3"), std::string("D4")}) {
        CAPTURE(type);
        RootSystemData rs = build_root_system(type);
        auto weyl = enumerate_weyl(rs);
        std::size_t expected = type == "A1" ? 2 : type == "A2" ? 6 : type == "A3" ? 24 : 192;
        CHECK(weyl.size() == expected);
        int maxlen = 0;
        std::set<IntMatrix> mats;
        for (const auto& w : weyl) {
            mats.insert(w.mat);
            CHECK(w.length == weyl_length_from_matrix(rs, w));
            CHECK(w.sign == ((w.length % 2 == 0) ? 1 : -1));
            maxlen = std::max(maxlen, w.length);
        }
        CHECK(mats.size() == weyl.size());
        CHECK(maxlen == static_cast<int>(rs.positive_roots.size()));

        std::uniform_int_distribution<long long> coord(-3, 3);
        for (int trial = 0; trial < 10; ++trial) {
            Weight mu(rs.rank), nu(rs.rank);
            for (int i = 0; i < rs.rank; ++i) {
                mu[i] = coord(rng);
                nu[i] = coord(rng);
            }
            Rat base = pairing(rs, mu, nu);
            for (const auto& w : weyl) CHECK(pairing(rs, apply_weyl(w, mu), apply_weyl(w, nu)) == base);
        }
    }
}

TEST_CASE("Weyl enumeration respects the cap") {
    RootSystemData d4 = build_root_system('D', 4);
    Caps caps;
    caps.max_weyl = 100;
    CHECK_THROWS_AS(enumerate_weyl(d4, caps), ResourceError);
}

TEST_CASE("dimension formula") {
    RootSystemData a1 = build_root_system('A', 1);
    CHECK(weyl_dimension(a1, Weight{0}) == 1);
    CHECK(weyl_dimension(a1, Weight{2}) == 3);
    RootSystemData a2 = build_root_system('A', 2);
    CHECK(weyl_dimension(a2, Weight{1, 1}) == 8);
    RootSystemData a3 = build_root_system('A', 3);
    CHECK(weyl_dimension(a3, fundamental_weight(3, 2)) == 6);
    CHECK_THROWS_AS(weyl_dimension(a2, Weight{-1, 0}), ArgumentError);
}

TEST_CASE("coset classes: one minuscule representative per nontrivial class") {
    for (const auto& type : {std::string("A1"), std::string("A2"), std::string("A3"), std::string("A4"),
                             std::string("D4"), std::string("E6"), std::string("E7")}) {
        CAPTURE(type);
        RootSystemData rs = build_root_system(type);
        std::set<std::vector<long long>> classes;
        classes.insert(pq_class(rs, Weight(rs.rank)));
        for (int m : rs.minuscule) {
            auto cls = pq_class(rs, fundamental_weight(rs.rank, m));
            CHECK(cls != pq_class(rs, Weight(rs.rank)));
            CHECK(classes.insert(cls).second); // distinct classes
        }
        CHECK(classes.size() == rs.minuscule.size() + 1);
        CHECK(static_cast<long long>(classes.size()) == rs.cartan_det); // |P/Q| = det C
    }
}
