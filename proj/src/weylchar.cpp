#include "weylbranch/weylchar.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace weylbranch {

namespace {

std::vector<i64> rho_scaled(const RootSystemPtr& sys) {
    Weight rho(sys, std::vector<i64>(sys->rank(), 1));
    return to_ambient_scaled(rho);
}

__int128 dot(const std::vector<i64>& a, const std::vector<i64>& b) {
    __int128 acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += static_cast<__int128>(a[i]) * b[i];
    return acc;
}

void require_dominant(const Weight& w, const char* op) {
    if (!w.dominant())
        throw std::invalid_argument(std::string(op) + " requires a dominant weight, got " + w.str());
}

// Connected components of the sub-diagram on `nodes`, with the Weyl group
// order of each component accumulated into `fac`.
void stabilizer_order(const RootSystemPtr& sys, const std::vector<int>& nodes, Factored& fac) {
    const int n = sys->rank();
    const Family f = sys->family();
    auto adjacent = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        if (f == Family::D) {
            if (j == n - 1) return i == n - 3;
            return j == i + 1 && j <= n - 2;
        }
        return j == i + 1;
    };
    std::vector<char> in(n, 0), seen(n, 0);
    for (int v : nodes) in[v] = 1;
    for (int start : nodes) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int w = 0; w < n; ++w)
                if (in[w] && !seen[w] && adjacent(v, w)) { seen[w] = 1; queue.push_back(w); }
        }
        const int k = static_cast<int>(comp.size());
        bool has_last = std::find(comp.begin(), comp.end(), n - 1) != comp.end();
        bool has_fork = f == Family::D &&
                        std::find(comp.begin(), comp.end(), n - 3) != comp.end() &&
                        std::find(comp.begin(), comp.end(), n - 2) != comp.end() && has_last;
        if ((f == Family::B || f == Family::C) && has_last) {
            fac.mul_integer(2, k);       // |W(B_k)| = 2^k k!
            fac.mul_factorial(k);
        } else if (f == Family::D && has_fork) {
            fac.mul_integer(2, k - 1);   // |W(D_k)| = 2^{k-1} k!
            fac.mul_factorial(k);
        } else {
            fac.mul_factorial(k + 1);    // |W(A_k)| = (k+1)!
        }
    }
}

Factored weyl_group_order(const RootSystemPtr& sys) {
    Factored fac;
    std::vector<int> all(sys->rank());
    for (int i = 0; i < sys->rank(); ++i) all[i] = i;
    stabilizer_order(sys, all, fac);
    return fac;
}

// Subsets enumeration shared by the wedge enumerators: accumulate sums of
// k distinct columns of `vectors` into a weight multiset.
void accumulate_k_sums(const RootSystemPtr& sys, const std::vector<std::vector<Rational>>& vectors,
                       int k, WeightMultiset& out, i64 sign) {
    const int m = static_cast<int>(vectors.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<Rational> sum(sys->ambient_dim());
    while (true) {
        for (auto& s : sum) s = Rational(0);
        for (int i : idx)
            for (int j = 0; j < sys->ambient_dim(); ++j) sum[j] += vectors[i][j];
        auto w = weight_from_ambient(sys, sum);
        auto it = out.find(w.coeffs);
        if (sign > 0) {
            out[w.coeffs] += 1;
        } else {
            if (it == out.end() || it->second == 0)
                throw std::logic_error("enumerator cancellation below zero");
            if (--it->second == 0) out.erase(it);
        }
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

std::vector<std::vector<Rational>> natural_weight_vectors(const RootSystemPtr& sys) {
    return natural_module_vectors(sys);
}

}  // namespace

std::vector<std::vector<Rational>> natural_module_vectors(const RootSystemPtr& sys) {
    const int n = sys->rank();
    const int dim = sys->ambient_dim();
    std::vector<std::vector<Rational>> vecs;
    auto unit = [dim](int i, i64 v) {
        std::vector<Rational> e(dim, Rational(0));
        e[i] = Rational(v);
        return e;
    };
    switch (sys->family()) {
        case Family::A:
            for (int i = 0; i <= n; ++i) {
                std::vector<Rational> e(dim, Rational(-1, n + 1));
                e[i] += Rational(1);
                vecs.push_back(std::move(e));
            }
            break;
        case Family::B:
            for (int i = 0; i < n; ++i) vecs.push_back(unit(i, 1));
            vecs.push_back(std::vector<Rational>(dim, Rational(0)));
            for (int i = n - 1; i >= 0; --i) vecs.push_back(unit(i, -1));
            break;
        case Family::C:
        case Family::D:
            for (int i = 0; i < n; ++i) vecs.push_back(unit(i, 1));
            for (int i = n - 1; i >= 0; --i) vecs.push_back(unit(i, -1));
            break;
    }
    return vecs;
}

namespace {

void spin_weights(const RootSystemPtr& sys, int parity, WeightMultiset& out) {
    const int n = sys->rank();
    for (u64 mask = 0; mask < (1ull << n); ++mask) {
        if (parity >= 0 && (__builtin_popcountll(mask) & 1) != parity) continue;
        std::vector<Rational> eps(n);
        for (int i = 0; i < n; ++i) eps[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
        out[weight_from_ambient(sys, eps).coeffs] += 1;
    }
}

}  // namespace

u64 DominantCharacter::multiplicity(const Weight& w) const {
    auto it = entries.find(w.coeffs);
    return it == entries.end() ? 0 : it->second;
}

u64 DominantCharacter::dimension() const {
    u64 total = 0;
    for (const auto& [coeffs, mult] : entries) {
        BigUint orbit = weyl_orbit_size(Weight(system, coeffs));
        total += mult * orbit.to_u64();
    }
    return total;
}

Weight SteinbergFactors::reconstruct() const {
    if (factors.empty()) throw std::logic_error("empty Steinberg factor list");
    Weight acc(factors.front().first.system,
               std::vector<i64>(factors.front().first.system->rank(), 0));
    for (const auto& [w, r] : factors) {
        i64 power = 1;
        for (int i = 0; i < r; ++i) power *= base_prime;
        acc = acc + w.scaled(power);
    }
    return acc;
}

BigUint weyl_dim(const Weight& lambda) {
    require_dominant(lambda, "weyl_dim");
    const auto& sys = lambda.system;
    auto lam = to_ambient_scaled(lambda);
    auto rho = rho_scaled(sys);
    std::vector<i64> lam_rho(lam);
    for (size_t i = 0; i < lam.size(); ++i) lam_rho[i] += rho[i];

    // dim = prod over positive roots of (lambda+rho, a) / (rho, a); each
    // scaled dot is a small integer, so cancel prime by prime.
    Factored fac;
    for (const auto& alpha : sys->positive_roots_ambient()) {
        __int128 num = dot(lam_rho, alpha);
        __int128 den = dot(rho, alpha);
        fac.mul_integer(detail::checked_narrow(num, "weyl_dim numerator"));
        fac.mul_integer(detail::checked_narrow(den, "weyl_dim denominator"), -1);
    }
    return fac.to_biguint();
}

u64 weyl_dim_checked(const Weight& lambda, u64 cap) {
    BigUint d = weyl_dim(lambda);
    if (d > cap)
        throw SizeLimitError("dimension " + d.str() + " of V" + lambda.str() +
                             " exceeds cap " + std::to_string(cap));
    return d.to_u64();
}

BigUint weyl_orbit_size(const Weight& w) {
    require_dominant(w, "weyl_orbit_size");
    std::vector<int> zero_nodes;
    for (int i = 0; i < w.system->rank(); ++i)
        if (w.coeffs[i] == 0) zero_nodes.push_back(i);
    Factored fac = weyl_group_order(w.system);
    Factored stab;
    stabilizer_order(w.system, zero_nodes, stab);
    fac.mul(stab, -1);
    return fac.to_biguint();
}

DominantCharacter dominant_character(const Weight& lambda, u64 dim_cap) {
    require_dominant(lambda, "dominant_character");
    const auto& sys = lambda.system;
    weyl_dim_checked(lambda, dim_cap);

    // Dominant weights under lambda: closed under subtracting positive
    // roots while staying dominant (every dominant mu under lambda is
    // reachable through dominant intermediate steps).
    std::map<std::vector<i64>, int> index_of;
    std::vector<Weight> dominants;
    std::deque<Weight> queue{lambda};
    index_of[lambda.coeffs] = 0;
    dominants.push_back(lambda);
    while (!queue.empty()) {
        Weight cur = queue.front();
        queue.pop_front();
        for (const auto& alpha : sys->positive_roots()) {
            std::vector<i64> c(cur.coeffs);
            bool dom = true;
            for (size_t i = 0; i < c.size(); ++i) {
                c[i] -= alpha[i];
                if (c[i] < 0) dom = false;
            }
            if (!dom || index_of.count(c)) continue;
            index_of[c] = static_cast<int>(dominants.size());
            dominants.emplace_back(sys, c);
            queue.push_back(dominants.back());
        }
    }

    // Height of lambda - mu orders the recursion: higher weights first.
    auto height = [&](const Weight& mu) {
        RootCoords rc = to_root_coords(lambda - mu);
        Rational h(0);
        for (const auto& c : rc.coeffs) h += c;
        if (!h.is_integer()) throw std::logic_error("non-integral height");
        return h.num();
    };
    std::vector<int> order(dominants.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::vector<i64> heights(dominants.size());
    for (size_t i = 0; i < dominants.size(); ++i) heights[i] = height(dominants[i]);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (heights[a] != heights[b]) return heights[a] < heights[b];
        return dominants[a].coeffs < dominants[b].coeffs;
    });

    auto rho = rho_scaled(sys);
    auto lam_s = to_ambient_scaled(lambda);
    std::vector<i64> lam_rho(lam_s);
    for (size_t i = 0; i < lam_rho.size(); ++i) lam_rho[i] += rho[i];
    const __int128 lam_norm = dot(lam_rho, lam_rho);
    const i64 scale = sys->ambient_scale();

    std::map<std::vector<i64>, u64> mult;
    mult[lambda.coeffs] = 1;

    for (int oi : order) {
        const Weight& mu = dominants[oi];
        if (mu == lambda) continue;
        auto mu_s = to_ambient_scaled(mu);
        std::vector<i64> mu_rho(mu_s);
        for (size_t i = 0; i < mu_rho.size(); ++i) mu_rho[i] += rho[i];
        const __int128 denom = lam_norm - dot(mu_rho, mu_rho);
        if (denom == 0) throw std::logic_error("Freudenthal denominator vanished");

        __int128 acc = 0;
        for (const auto& alpha : sys->positive_roots_ambient()) {
            // walk mu + k*alpha while it stays under lambda
            std::vector<i64> cur = mu_s;
            for (i64 k = 1;; ++k) {
                for (size_t i = 0; i < cur.size(); ++i) cur[i] += scale * alpha[i];
                // multiplicity of mu + k*alpha = multiplicity of its dominant rep;
                // the alpha-string through mu leaves the weight set once and
                // for all, so a failed lookup terminates the walk
                std::vector<Rational> eps(cur.size());
                for (size_t i = 0; i < cur.size(); ++i) eps[i] = Rational(cur[i], scale);
                Weight rep = dominant_representative(weight_from_ambient(sys, eps));
                auto it = mult.find(rep.coeffs);
                if (it == mult.end()) break;
                // both sides of the recursion carry scale^2
                acc += static_cast<__int128>(it->second) * dot(cur, alpha) * scale;
            }
        }
        __int128 num = 2 * acc;
        if (num % denom != 0) throw std::logic_error("Freudenthal multiplicity is not integral");
        __int128 m = num / denom;
        // saturation: every dominant weight under lambda occurs
        if (m <= 0) throw std::logic_error("Freudenthal multiplicity vanished unexpectedly");
        mult[mu.coeffs] = static_cast<u64>(m);
    }

    DominantCharacter out;
    out.system = sys;
    out.entries = std::move(mult);
    return out;
}

bool fundamental_enumerator_supported(const RootSystemPtr& sys, int k) {
    const int n = sys->rank();
    if (k < 1) return false;
    switch (sys->family()) {
        case Family::A: return k <= n;
        case Family::C: return k <= n;
        case Family::B: return k <= n - 2 || k == n;
        case Family::D: return k <= n - 2 || k == n - 1 || k == n;
    }
    return false;
}

WeightMultiset fundamental_module_weights(const RootSystemPtr& sys, int k) {
    const int n = sys->rank();
    if (!fundamental_enumerator_supported(sys, k))
        throw std::invalid_argument("no combinatorial enumerator for " + sys->name() + " fundamental " +
                                    std::to_string(k) + "; use dominant_character instead");
    WeightMultiset out;
    switch (sys->family()) {
        case Family::A:
            accumulate_k_sums(sys, natural_weight_vectors(sys), k, out, +1);
            break;
        case Family::B:
            if (k == n) {
                spin_weights(sys, -1, out);
            } else {
                accumulate_k_sums(sys, natural_weight_vectors(sys), k, out, +1);
            }
            break;
        case Family::D:
            if (k == n) {
                spin_weights(sys, 0, out);       // even sign changes
            } else if (k == n - 1) {
                spin_weights(sys, 1, out);       // odd sign changes
            } else {
                accumulate_k_sums(sys, natural_weight_vectors(sys), k, out, +1);
            }
            break;
        case Family::C: {
            // V(lambda_k) = wedge^k(natural) - wedge^{k-2}(natural) in char 0
            auto vecs = natural_weight_vectors(sys);
            accumulate_k_sums(sys, vecs, k, out, +1);
            if (k >= 2) accumulate_k_sums(sys, vecs, k - 2, out, -1);
            break;
        }
    }
    return out;
}

SteinbergFactors steinberg_decompose(const Weight& w, i64 p) {
    require_dominant(w, "steinberg_decompose");
    if (p < 2) throw std::invalid_argument("Steinberg decomposition needs a prime characteristic");
    const int n = w.system->rank();
    std::vector<std::vector<i64>> layers;
    std::vector<i64> rem(w.coeffs);
    bool any = true;
    while (any) {
        any = false;
        std::vector<i64> digit(n, 0);
        for (int i = 0; i < n; ++i) {
            digit[i] = rem[i] % p;
            rem[i] /= p;
            if (rem[i] != 0) any = true;
        }
        layers.push_back(std::move(digit));
    }
    SteinbergFactors out;
    out.base_prime = p;
    for (size_t r = 0; r < layers.size(); ++r)
        out.factors.emplace_back(Weight(w.system, layers[r]), static_cast<int>(r));
    return out;
}

std::pair<Weight, bool> tensor_highest_weight(const Weight& l1, const Weight& l2) {
    if (!l1.system->same_as(*l2.system))
        throw std::invalid_argument("tensor factors live on different root systems");
    require_dominant(l1, "tensor_highest_weight");
    require_dominant(l2, "tensor_highest_weight");
    return {l1 + l2, true};
}

WeightMultiset weyl_orbit(const Weight& w) {
    require_dominant(w, "weyl_orbit");
    WeightMultiset out;
    std::set<std::vector<i64>> seen;
    std::deque<Weight> queue{w};
    seen.insert(w.coeffs);
    while (!queue.empty()) {
        Weight cur = queue.front();
        queue.pop_front();
        out[cur.coeffs] = 1;
        for (int i = 0; i < w.system->rank(); ++i) {
            if (cur.coeffs[i] == 0) continue;
            Weight next = simple_reflection(cur, i);
            if (seen.insert(next.coeffs).second) queue.push_back(next);
        }
    }
    return out;
}

WeightMultiset full_character(const Weight& lambda, u64 dim_cap) {
    require_dominant(lambda, "full_character");
    const auto& sys = lambda.system;
    // Fundamental weights with an enumerator bypass Freudenthal entirely.
    i64 total = 0;
    int k = 0;
    for (int i = 0; i < sys->rank(); ++i) {
        total += lambda.coeffs[i];
        if (lambda.coeffs[i] == 1) k = i + 1;
    }
    if (total == 1 && fundamental_enumerator_supported(sys, k))
        return fundamental_module_weights(sys, k);

    DominantCharacter dc = dominant_character(lambda, dim_cap);
    WeightMultiset out;
    for (const auto& [coeffs, mult] : dc.entries) {
        for (const auto& [orb, one] : weyl_orbit(Weight(sys, coeffs))) {
            (void)one;
            out[orb] += mult;
        }
    }
    return out;
}

}  // namespace weylbranch
