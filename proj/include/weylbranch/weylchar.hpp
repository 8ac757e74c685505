/* Characteristic-zero character data: Weyl dimension formula, Freudenthal
   multiplicities, combinatorial weight enumerators for wedge and spin
   modules, Steinberg decomposition, and the tensor highest-weight fact. */

#pragma once

#include "rootsys.hpp"

#include <map>
#include <utility>

namespace weylbranch {

constexpr u64 kDefaultDimCap = 200000;

struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Finite multiset of weights keyed by coefficient vector; all weights share
// one root system.
using WeightMultiset = std::map<std::vector<i64>, u64>;

struct DominantCharacter {
    RootSystemPtr system;
    std::map<std::vector<i64>, u64> entries;  // dominant weight -> multiplicity

    u64 multiplicity(const Weight& w) const;
    // Total dimension: sum of multiplicity * Weyl orbit size.
    u64 dimension() const;
};

struct SteinbergFactors {
    i64 base_prime;
    std::vector<std::pair<Weight, int>> factors;  // (p-restricted weight, twist exponent)

    Weight reconstruct() const;
};

// Exact dimension of the irreducible characteristic-zero module V(lambda).
BigUint weyl_dim(const Weight& lambda);
// Convenience: dimension as u64, rejecting values above cap.
u64 weyl_dim_checked(const Weight& lambda, u64 cap);

// Full dominant-weight multiplicity table via Freudenthal's recursion.
DominantCharacter dominant_character(const Weight& lambda, u64 dim_cap = kDefaultDimCap);

// |W| / |stabilizer| via the stabilizer parabolic factorization.
BigUint weyl_orbit_size(const Weight& w);

// Complete weight multiset of V(lambda_k) by combinatorial enumeration.
// Supported: all A_n wedges; B_n/D_n wedges k <= n-2; B_n spin and D_n
// half-spins; C_n fundamentals k <= n.
WeightMultiset fundamental_module_weights(const RootSystemPtr& sys, int k);
bool fundamental_enumerator_supported(const RootSystemPtr& sys, int k);

SteinbergFactors steinberg_decompose(const Weight& w, i64 p);

// l1 + l2, which occurs with multiplicity exactly one in V(l1) (x) V(l2);
// every other constituent is strictly under it.
std::pair<Weight, bool> tensor_highest_weight(const Weight& l1, const Weight& l2);

// ---- character expansion helpers ----

// Weyl orbit of a dominant weight, as a multiset of weights (all mult 1).
WeightMultiset weyl_orbit(const Weight& w);
// Weight vectors of the natural module in epsilon coordinates, in
// descending lexicographic order.
std::vector<std::vector<Rational>> natural_module_vectors(const RootSystemPtr& sys);
// Full weight multiset of V(lambda): enumerator when supported, otherwise
// dominant_character expanded orbit by orbit.
WeightMultiset full_character(const Weight& lambda, u64 dim_cap = kDefaultDimCap);

}  // namespace weylbranch
