#include "doctest.h"

#include "weylbranch/permact.hpp"
#include "weylbranch/weylchar.hpp"

using namespace weylbranch;

namespace {
const std::string kPermDir = std::string(WEYLBRANCH_DATA_DIR) + "/perm";
}

TEST_CASE("cycle notation parsing") {
    PermGroup g = parse_perm_text("# comment\ndegree 5\n(1,2,3)(4,5)\n(2,4)\n");
    CHECK(g.degree == 5);
    REQUIRE(g.generators.size() == 2);
    CHECK(g.generators[0] == std::vector<int>{1, 2, 0, 4, 3});
    CHECK(g.generators[1] == std::vector<int>{0, 3, 2, 1, 4});
    CHECK_THROWS_AS(parse_perm_text("(1,2)\n"), std::invalid_argument);        // no degree header
    CHECK_THROWS_AS(parse_perm_text("degree 3\n(1,4)\n"), std::invalid_argument);  // out of range
}

TEST_CASE("symmetric groups are fully transitive") {
    PermGroup s6 = symmetric_group(6);
    CHECK(is_t_transitive(s6, 3));
    CHECK(is_t_transitive(s6, 6));
    PermGroup a7 = alternating_group(7);
    CHECK(is_t_transitive(a7, 5));
    CHECK_FALSE(is_t_transitive(a7, 6));  // Alt_n is (n-2)-transitive only
    CHECK_THROWS_AS(is_t_transitive(s6, 7), std::invalid_argument);
}

TEST_CASE("a single cycle is transitive but not doubly transitive") {
    PermGroup z6 = cyclic_group(6);
    CHECK(is_t_transitive(z6, 1));
    CHECK_FALSE(is_t_transitive(z6, 2));
    CHECK(ordered_tuple_orbit_size(z6, 2) == 6);  // not 30
}

TEST_CASE("subset orbits") {
    PermGroup s5 = symmetric_group(5);
    CHECK(orbits_on_k_subsets(s5, 2) == std::vector<u64>{10});
    PermGroup z6 = cyclic_group(6);
    CHECK(orbits_on_k_subsets(z6, 2) == std::vector<u64>{6, 6, 3});
    PermGroup m12 = load_perm_file(kPermDir + "/m12.perm");
    CHECK(orbits_on_k_subsets(m12, 4) == std::vector<u64>{495});
}

TEST_CASE("Mathieu fixture integrity: expected transitivity degrees") {
    // 4, 5, 4, 5 for degrees 11, 12, 23, 24; by the classification these
    // degrees characterize the groups
    PermGroup m11 = load_perm_file(kPermDir + "/m11.perm");
    CHECK(is_t_transitive(m11, 4));
    CHECK_FALSE(is_t_transitive(m11, 5));
    PermGroup m12 = load_perm_file(kPermDir + "/m12.perm");
    CHECK(is_t_transitive(m12, 5));
    CHECK_FALSE(is_t_transitive(m12, 6));
    CHECK(ordered_tuple_orbit_size(m12, 5) == 95040);  // sharply 5-transitive
    PermGroup m23 = load_perm_file(kPermDir + "/m23.perm");
    CHECK(is_t_transitive(m23, 4));
    CHECK_FALSE(is_t_transitive(m23, 5));
}

TEST_CASE("transitivity is monotone on the fixtures") {
    for (const char* name : {"m11", "m12", "m23"}) {
        PermGroup g = load_perm_file(kPermDir + std::string("/") + name + ".perm");
        int top = 0;
        for (int t = 1; t <= 5; ++t)
            if (is_t_transitive(g, t)) top = t;
        for (int t = 1; t <= top; ++t) CHECK(is_t_transitive(g, t));
    }
}

TEST_CASE("t-transitive groups act with one orbit on t-subsets") {
    PermGroup m11 = load_perm_file(kPermDir + "/m11.perm");
    for (int t = 1; t <= 4; ++t) CHECK(orbits_on_k_subsets(m11, t).size() == 1);
    PermGroup z6 = cyclic_group(6);
    CHECK(orbits_on_k_subsets(z6, 1).size() == 1);
}

TEST_CASE("torus criterion examples") {
    CHECK(torus_irreducibility(symmetric_group(6), 5, 2));
    CHECK_FALSE(torus_irreducibility(cyclic_group(6), 5, 2));
    PermGroup m24 = load_perm_file(kPermDir + "/m24.perm");
    CHECK(torus_irreducibility(m24, 23, 19));  // min(19, 5) = 5
    CHECK_THROWS_AS(torus_irreducibility(symmetric_group(6), 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(torus_irreducibility(symmetric_group(6), 7, 2), std::invalid_argument);
}

TEST_CASE("torus criterion agrees with wedge-weight orbit transitivity") {
    // the wedge weights of V_{A_n}(l_k) are exactly the k-subsets, one
    // weight line per subset; check both routes on every fixture-style
    // group up to degree 8
    for (int n = 4; n <= 7; ++n) {
        auto sys = build_root_system(Family::A, n);
        std::vector<PermGroup> groups = {symmetric_group(n + 1), alternating_group(n + 1),
                                         cyclic_group(n + 1)};
        for (const auto& g : groups) {
            for (int k = 2; k < n; ++k) {
                auto weights = fundamental_module_weights(sys, k);
                CHECK(weights.size() == orbits_on_k_subsets(symmetric_group(n + 1), k)[0]);
                bool single_orbit = orbits_on_k_subsets(g, k).size() == 1;
                CHECK(torus_irreducibility(g, n, k) == single_orbit);
            }
        }
    }
}
