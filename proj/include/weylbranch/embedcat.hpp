/* Catalog of explicit subgroup embeddings, each compiled down to one exact
   rational matrix from ambient fundamental coordinates to concatenated
   subgroup fundamental coordinates (torus characters appended as integer
   coordinates).  Characteristic-zero branching restricts the full ambient
   character through the matrix and peels maximal dominant weights. */

#pragma once

#include "weylchar.hpp"

#include <map>
#include <string>

namespace weylbranch {

struct SubgroupDescriptor {
    std::vector<RootSystemPtr> factors;
    int central_torus_rank = 0;
    std::string label;

    int coord_count() const;
    std::string str() const;
};

// A weight of the subgroup: fundamental coefficients per simple factor plus
// appended torus characters.
struct SubgroupWeight {
    std::vector<std::vector<i64>> factor_coeffs;
    std::vector<i64> torus;

    bool operator==(const SubgroupWeight& o) const;
    bool operator<(const SubgroupWeight& o) const;
    std::string str() const;                      // e.g. [1,0|0,2|t:2]
    std::string omega_str() const;                // e.g. w{1,1}+2w{2,2}
    static SubgroupWeight parse(const std::string& text, const SubgroupDescriptor& sub);
};

enum class RecipeKind { Torus, Split, Tensor, Module };

struct Embedding {
    RootSystemPtr ambient;
    SubgroupDescriptor subgroup;
    // matrix rows: concatenated subgroup fundamental coords then torus
    // characters; columns: ambient fundamental coordinates.
    std::vector<std::vector<Rational>> matrix;
    std::string provenance;
    int catalog_id = 0;
    std::map<std::string, i64> params;
    RecipeKind kind = RecipeKind::Split;

    // Images of the ambient natural-weight directions in concatenated
    // subgroup epsilon coordinates plus torus characters (the recipe data
    // everything else is derived from).
    std::vector<std::vector<Rational>> eps_images;
};

struct ValidationReport {
    bool ok = true;
    std::string message;  // first differing weight on mismatch
};

struct BranchFactor {
    SubgroupWeight weight;
    u64 multiplicity;
    u64 dim;  // dimension of one copy
};

struct BranchResult {
    std::vector<BranchFactor> factors;
    u64 total_dim = 0;
    u64 kappa = 0;  // composition factor count
};

// Build catalog entry `id` with the given parameters.  Unknown ids or
// inadmissible parameters are rejected with the admissible constraints.
Embedding catalog(int id, const std::map<std::string, i64>& params = {});

// Human-readable parameter schema for every catalog id.
std::string catalog_manifest_json();

SubgroupWeight restrict_weight(const Embedding& e, const Weight& w);

BranchResult branch_char0(const Embedding& e, const Weight& lambda, u64 dim_cap = kDefaultDimCap);

// Re-derive the natural-module restriction and compare it against the
// recipe's prescription; for catalog(7) additionally check the closed
// restriction formula on a basis of the weight lattice, and for catalog(9)
// the defining simple-root images.
ValidationReport validate_embedding(const Embedding& e);

// Builders (also used by test oracles for ad-hoc embeddings).
Embedding make_split_embedding(const std::string& label, RootSystemPtr ambient,
                               std::vector<RootSystemPtr> factors);
Embedding make_tensor_embedding(const std::string& label, RootSystemPtr ambient,
                                std::vector<RootSystemPtr> factors);
Embedding make_module_embedding(const std::string& label, RootSystemPtr ambient,
                                RootSystemPtr factor, const Weight& theta);

// Canonical form under permutations of identical simple factors (the paper
// lists tensor summands up to factor order).
SubgroupWeight canonical_factor_form(const SubgroupWeight& w, const SubgroupDescriptor& sub);
std::vector<std::pair<SubgroupWeight, u64>> canonical_factor_form(
    const std::vector<std::pair<SubgroupWeight, u64>>& factors, const SubgroupDescriptor& sub);

u64 subgroup_weight_dim(const SubgroupDescriptor& sub, const SubgroupWeight& w, u64 dim_cap);

}  // namespace weylbranch
