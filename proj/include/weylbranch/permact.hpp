/* Permutation machinery for the torus-normalizer criterion: orbits of
   ordered tuples and of k-subsets under a generated group, transitivity
   degrees, and the cycle-notation fixture format. */

#pragma once

#include "numeric.hpp"

#include <string>
#include <vector>

namespace weylbranch {

struct PermGroup {
    int degree = 0;
    std::vector<std::vector<int>> generators;  // images, 0-based

    void validate() const;  // each generator a bijection of {0,..,degree-1}
};

// Fixture format: '#' comments, a "degree N" header line, then one
// generator per line in disjoint cycle notation with 1-based points.
PermGroup parse_perm_text(const std::string& text);
PermGroup load_perm_file(const std::string& path);

PermGroup symmetric_group(int degree);
PermGroup alternating_group(int degree);
PermGroup cyclic_group(int degree);

// Resolve "sym:N" / "alt:N" / "cyclic:N" or a named .perm fixture in dir.
PermGroup resolve_group(const std::string& spec, const std::string& fixture_dir);

// Orbit size of one ordered t-tuple of distinct points under the group,
// by breadth-first closure.
u64 ordered_tuple_orbit_size(const PermGroup& g, int t);
// Falling factorial degree*(degree-1)*...*(degree-t+1).
u64 falling_factorial(int degree, int t);

bool is_t_transitive(const PermGroup& g, int t);

// Partition of binom(degree, k) into orbit sizes, descending.
std::vector<u64> orbits_on_k_subsets(const PermGroup& g, int k);

// The torus-normalizer criterion for V_{A_n}(lambda_k) restricted to T.X:
// irreducible iff X is min(k, n+1-k)-transitive.
bool torus_irreducibility(const PermGroup& g, int n, int k);

}  // namespace weylbranch
