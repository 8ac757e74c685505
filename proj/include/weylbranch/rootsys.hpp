/* Classical root systems A/B/C/D with exact weight-lattice arithmetic.
 *
 * Conventions (fixed once, here):
 *  - Bourbaki labelling of simple roots.  For B_n the last simple root
 *    alpha_n is short; for C_n it is long.  This is encoded in the Cartan
 *    matrix: cartan[i][j] = <alpha_i, alpha_j^vee>, so row i holds the
 *    fundamental-weight coordinates of alpha_i, and the -2 entry of a
 *    B_n/C_n matrix sits in the long root's row.
 *  - Weights are stored as integer coefficient vectors over the
 *    fundamental dominant weights; epsilon-coordinate realizations are
 *    internal helpers only.
 */

#pragma once

#include "numeric.hpp"

#include <memory>
#include <string>
#include <vector>

namespace weylbranch {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family family_from_char(char c);

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
  public:
    // Public construction enforces A_n (n>=1), B_n/C_n (n>=2), D_n (n>=3).
    static RootSystemPtr build(Family family, int rank);
    // Internal carrier construction additionally admits B_1, C_1 and D_2,
    // which occur as simple factors of catalog subgroups.
    static RootSystemPtr build_factor(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<i64>>& cartan() const { return cartan_; }
    const std::vector<std::vector<Rational>>& inverse_cartan() const { return inverse_cartan_; }

    // Positive roots in fundamental coordinates.
    const std::vector<std::vector<i64>>& positive_roots() const { return positive_roots_; }
    // Positive roots in (scaled, integral) epsilon coordinates.
    const std::vector<std::vector<i64>>& positive_roots_ambient() const { return positive_roots_ambient_; }
    // Ambient dimension of the epsilon realization (n+1 for A_n, n otherwise).
    int ambient_dim() const { return ambient_dim_; }
    // All weight epsilon-coordinates become integral after multiplication
    // by this scale (n+1 for A_n, 2 for B/C/D).
    i64 ambient_scale() const { return ambient_scale_; }

    std::string name() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

    bool same_as(const RootSystem& o) const { return family_ == o.family_ && rank_ == o.rank_; }

  private:
    RootSystem() = default;
    static RootSystemPtr construct(Family family, int rank);

    Family family_;
    int rank_;
    int ambient_dim_;
    i64 ambient_scale_;
    std::vector<std::vector<i64>> cartan_;
    std::vector<std::vector<Rational>> inverse_cartan_;
    std::vector<std::vector<i64>> positive_roots_;
    std::vector<std::vector<i64>> positive_roots_ambient_;
};

struct Weight {
    RootSystemPtr system;
    std::vector<i64> coeffs;

    Weight() = default;
    Weight(RootSystemPtr sys, std::vector<i64> c);

    bool dominant() const;
    bool is_zero() const;
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight scaled(i64 k) const;
    bool operator==(const Weight& o) const;
    std::string str() const;
};

struct RootCoords {
    RootSystemPtr system;
    std::vector<Rational> coeffs;

    bool integral() const;
    bool nonnegative() const;
    std::string str() const;
};

RootSystemPtr build_root_system(Family family, int rank);

RootCoords to_root_coords(const Weight& w);
Weight from_root_coords(const RootCoords& rc);

// mu <= nu in the dominance order: nu - mu is a nonnegative integral
// combination of simple roots.
bool dominance_leq(const Weight& mu, const Weight& nu);

// Diagram symmetry: index reversal for A_n, swap of the last two
// coefficients for D_n.  Rejected for B/C.
Weight graph_automorphism_image(const Weight& w);

// Root coordinates of graph_automorphism_image(w) - w.
RootCoords mu_difference_coeffs(const Weight& w);

// Action of -w_0: index reversal for A_n, swap of the last two
// coefficients for D_n with n odd, identity otherwise.
Weight dual_weight(const Weight& w);

bool is_p_restricted(const Weight& w, i64 p);

// ---- epsilon-coordinate helpers (used by weylchar/embedcat) ----

// Exact epsilon coordinates of a weight (length ambient_dim, sum zero for A).
std::vector<Rational> to_ambient(const Weight& w);
// Scaled-integral variant: ambient_scale * epsilon coordinates.
std::vector<i64> to_ambient_scaled(const Weight& w);
// Fundamental coordinates of an ambient vector, as exact rationals.
std::vector<Rational> fundamental_from_ambient(const RootSystemPtr& sys,
                                               const std::vector<Rational>& eps);
// Inverse of to_ambient; throws if the vector is not in the weight lattice.
Weight weight_from_ambient(const RootSystemPtr& sys, const std::vector<Rational>& eps);

// Simple reflection s_i in fundamental coordinates.
Weight simple_reflection(const Weight& w, int i);
// Dominant Weyl-orbit representative.
Weight dominant_representative(const Weight& w);

}  // namespace weylbranch
