#include "weylbranch/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace weylbranch {

Family family_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        case 'D': case 'd': return Family::D;
        default: throw std::invalid_argument(std::string("unknown family letter '") + c + "'");
    }
}

namespace {

std::vector<std::vector<Rational>> invert_exact(const std::vector<std::vector<i64>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
        a[i][n + i] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("Cartan matrix is singular");
        std::swap(a[col], a[pivot]);
        Rational inv = Rational(1) / a[col][col];
        for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

// Positive roots in epsilon coordinates (integral, unscaled).
std::vector<std::vector<i64>> positive_roots_eps(Family f, int n, int dim) {
    std::vector<std::vector<i64>> out;
    auto vec = [dim](std::initializer_list<std::pair<int, i64>> entries) {
        std::vector<i64> v(dim, 0);
        for (auto& [idx, val] : entries) v[idx] = val;
        return v;
    };
    switch (f) {
        case Family::A:
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j) out.push_back(vec({{i, 1}, {j, -1}}));
            break;
        case Family::B:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    out.push_back(vec({{i, 1}, {j, -1}}));
                    out.push_back(vec({{i, 1}, {j, 1}}));
                }
            for (int i = 0; i < n; ++i) out.push_back(vec({{i, 1}}));
            break;
        case Family::C:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    out.push_back(vec({{i, 1}, {j, -1}}));
                    out.push_back(vec({{i, 1}, {j, 1}}));
                }
            for (int i = 0; i < n; ++i) out.push_back(vec({{i, 2}}));
            break;
        case Family::D:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    out.push_back(vec({{i, 1}, {j, -1}}));
                    out.push_back(vec({{i, 1}, {j, 1}}));
                }
            break;
    }
    return out;
}

std::vector<std::vector<i64>> cartan_matrix(Family f, int n) {
    std::vector<std::vector<i64>> c(n, std::vector<i64>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
    switch (f) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            // alpha_{n-1} long, alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            if (n >= 2) { c[n - 2][n - 1] = -2; c[n - 1][n - 2] = -1; }
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            if (n >= 2) { c[n - 2][n - 1] = -1; c[n - 1][n - 2] = -2; }
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            if (n >= 3) link(n - 3, n - 1);
            break;
    }
    return c;
}

}  // namespace

RootSystemPtr RootSystem::construct(Family family, int rank) {
    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->family_ = family;
    rs->rank_ = rank;
    rs->ambient_dim_ = family == Family::A ? rank + 1 : rank;
    rs->ambient_scale_ = family == Family::A ? rank + 1 : 2;
    rs->cartan_ = cartan_matrix(family, rank);
    rs->inverse_cartan_ = invert_exact(rs->cartan_);
    rs->positive_roots_ambient_ = positive_roots_eps(family, rank, rs->ambient_dim_);

    // Fundamental coordinates of a root with epsilon vector x:
    // a_i = <x, alpha_i^vee>, evaluated per family.
    for (auto& eps : rs->positive_roots_ambient_) {
        std::vector<i64> a(rank, 0);
        switch (family) {
            case Family::A:
                for (int i = 0; i < rank; ++i) a[i] = eps[i] - eps[i + 1];
                break;
            case Family::B:
                for (int i = 0; i + 1 < rank; ++i) a[i] = eps[i] - eps[i + 1];
                a[rank - 1] = 2 * eps[rank - 1];
                break;
            case Family::C:
                for (int i = 0; i + 1 < rank; ++i) a[i] = eps[i] - eps[i + 1];
                a[rank - 1] = eps[rank - 1];
                break;
            case Family::D:
                for (int i = 0; i + 2 <= rank - 1; ++i) a[i] = eps[i] - eps[i + 1];
                if (rank >= 2) {
                    a[rank - 2] = eps[rank - 2] - eps[rank - 1];
                    a[rank - 1] = eps[rank - 2] + eps[rank - 1];
                }
                break;
        }
        rs->positive_roots_.push_back(std::move(a));
    }
    return rs;
}

RootSystemPtr RootSystem::build(Family family, int rank) {
    int min_rank = family == Family::A ? 1 : (family == Family::D ? 3 : 2);
    if (rank < min_rank) {
        std::ostringstream os;
        os << "rank " << rank << " is inadmissible for family "
           << static_cast<char>(family) << " (minimum " << min_rank << ")";
        throw std::invalid_argument(os.str());
    }
    return build_factor(family, rank);
}

RootSystemPtr RootSystem::build_factor(Family family, int rank) {
    if (rank < 1 || (family == Family::D && rank < 2))
        throw std::invalid_argument("inadmissible factor rank");
    // systems are immutable; one shared instance per (family, rank)
    static std::map<std::pair<char, int>, RootSystemPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<char>(family), rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto rs = construct(family, rank);
    cache.emplace(key, rs);
    return rs;
}

RootSystemPtr build_root_system(Family family, int rank) { return RootSystem::build(family, rank); }

Weight::Weight(RootSystemPtr sys, std::vector<i64> c) : system(std::move(sys)), coeffs(std::move(c)) {
    if (!system) throw std::invalid_argument("weight without root system");
    if (coeffs.size() != static_cast<size_t>(system->rank()))
        throw std::invalid_argument("weight coefficient count " + std::to_string(coeffs.size()) +
                                    " does not match rank " + std::to_string(system->rank()));
}

bool Weight::dominant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](i64 a) { return a >= 0; });
}

bool Weight::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](i64 a) { return a == 0; });
}

Weight Weight::operator+(const Weight& o) const {
    if (!system->same_as(*o.system)) throw std::invalid_argument("weights on different root systems");
    std::vector<i64> c(coeffs);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs[i];
    return Weight(system, std::move(c));
}

Weight Weight::operator-(const Weight& o) const {
    if (!system->same_as(*o.system)) throw std::invalid_argument("weights on different root systems");
    std::vector<i64> c(coeffs);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs[i];
    return Weight(system, std::move(c));
}

Weight Weight::scaled(i64 k) const {
    std::vector<i64> c(coeffs);
    for (auto& v : c) v *= k;
    return Weight(system, std::move(c));
}

bool Weight::operator==(const Weight& o) const {
    return system->same_as(*o.system) && coeffs == o.coeffs;
}

std::string Weight::str() const {
    std::string out = "(";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coeffs[i]);
    }
    return out + ")";
}

bool RootCoords::integral() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_integer(); });
}

bool RootCoords::nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.sign() >= 0; });
}

std::string RootCoords::str() const {
    std::string out = "(";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ",";
        out += coeffs[i].str();
    }
    return out + ")";
}

RootCoords to_root_coords(const Weight& w) {
    // a = C^T c, hence c = (C^{-1})^T a.
    const auto& inv = w.system->inverse_cartan();
    const int n = w.system->rank();
    RootCoords rc;
    rc.system = w.system;
    rc.coeffs.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        Rational acc(0);
        for (int j = 0; j < n; ++j) acc += inv[j][i] * Rational(w.coeffs[j]);
        rc.coeffs[i] = acc;
    }
    return rc;
}

Weight from_root_coords(const RootCoords& rc) {
    const auto& cartan = rc.system->cartan();
    const int n = rc.system->rank();
    std::vector<i64> a(n, 0);
    for (int j = 0; j < n; ++j) {
        Rational acc(0);
        for (int i = 0; i < n; ++i) acc += rc.coeffs[i] * Rational(cartan[i][j]);
        if (!acc.is_integer())
            throw std::invalid_argument("root coordinates do not define a lattice weight");
        a[j] = acc.num();
    }
    return Weight(rc.system, std::move(a));
}

bool dominance_leq(const Weight& mu, const Weight& nu) {
    if (!mu.system->same_as(*nu.system))
        throw std::invalid_argument("dominance comparison across different root systems");
    RootCoords diff = to_root_coords(nu - mu);
    return diff.integral() && diff.nonnegative();
}

Weight graph_automorphism_image(const Weight& w) {
    const Family f = w.system->family();
    const int n = w.system->rank();
    if (f == Family::A) {
        std::vector<i64> c(w.coeffs.rbegin(), w.coeffs.rend());
        return Weight(w.system, std::move(c));
    }
    if (f == Family::D) {
        std::vector<i64> c(w.coeffs);
        std::swap(c[n - 2], c[n - 1]);
        return Weight(w.system, std::move(c));
    }
    throw std::invalid_argument("graph automorphism implemented for families A and D only");
}

RootCoords mu_difference_coeffs(const Weight& w) {
    return to_root_coords(graph_automorphism_image(w) - w);
}

Weight dual_weight(const Weight& w) {
    const Family f = w.system->family();
    const int n = w.system->rank();
    if (f == Family::A) return graph_automorphism_image(w);
    if (f == Family::D && n % 2 == 1) return graph_automorphism_image(w);
    return w;
}

bool is_p_restricted(const Weight& w, i64 p) {
    if (!w.dominant()) throw std::invalid_argument("p-restriction is defined for dominant weights");
    if (p == 0) return true;
    if (p < 2) throw std::invalid_argument("characteristic must be 0 or a prime");
    return std::all_of(w.coeffs.begin(), w.coeffs.end(), [p](i64 a) { return a < p; });
}

std::vector<Rational> to_ambient(const Weight& w) {
    auto scaled = to_ambient_scaled(w);
    const Rational s(1, w.system->ambient_scale());
    std::vector<Rational> out;
    out.reserve(scaled.size());
    for (i64 v : scaled) out.push_back(Rational(v) * s);
    return out;
}

std::vector<i64> to_ambient_scaled(const Weight& w) {
    const int n = w.system->rank();
    const auto& a = w.coeffs;
    const i64 s = w.system->ambient_scale();
    std::vector<i64> x;
    switch (w.system->family()) {
        case Family::A: {
            // y_j = sum_{i >= j} a_i, then project off the diagonal.
            std::vector<i64> y(n + 1, 0);
            for (int j = n - 1; j >= 0; --j) y[j] = y[j + 1] + a[j];
            i64 total = 0;
            for (i64 v : y) total += v;
            x.assign(n + 1, 0);
            for (int j = 0; j <= n; ++j) x[j] = y[j] * s - total;  // s = n+1
            break;
        }
        case Family::B: {
            x.assign(n, 0);
            i64 tail = a[n - 1];  // 2*x_n scaled by 2
            x[n - 1] = tail;
            for (int j = n - 2; j >= 0; --j) { tail += 2 * a[j]; x[j] = tail; }
            break;
        }
        case Family::C: {
            x.assign(n, 0);
            i64 tail = 0;
            for (int j = n - 1; j >= 0; --j) { tail += a[j]; x[j] = 2 * tail; }
            break;
        }
        case Family::D: {
            x.assign(n, 0);
            x[n - 1] = a[n - 1] - a[n - 2];
            i64 tail = a[n - 1] + a[n - 2];
            x[n - 2] = tail;
            for (int j = n - 3; j >= 0; --j) { tail += 2 * a[j]; x[j] = tail; }
            break;
        }
    }
    return x;
}

std::vector<Rational> fundamental_from_ambient(const RootSystemPtr& sys,
                                               const std::vector<Rational>& eps) {
    if (eps.size() != static_cast<size_t>(sys->ambient_dim()))
        throw std::invalid_argument("ambient vector has wrong dimension");
    const int n = sys->rank();
    std::vector<Rational> a(n, Rational(0));
    switch (sys->family()) {
        case Family::A:
            for (int i = 0; i < n; ++i) a[i] = eps[i] - eps[i + 1];
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) a[i] = eps[i] - eps[i + 1];
            a[n - 1] = eps[n - 1] * Rational(2);
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) a[i] = eps[i] - eps[i + 1];
            a[n - 1] = eps[n - 1];
            break;
        case Family::D:
            for (int i = 0; i + 2 <= n - 1; ++i) a[i] = eps[i] - eps[i + 1];
            a[n - 2] = eps[n - 2] - eps[n - 1];
            a[n - 1] = eps[n - 2] + eps[n - 1];
            break;
    }
    return a;
}

Weight weight_from_ambient(const RootSystemPtr& sys, const std::vector<Rational>& eps) {
    auto a = fundamental_from_ambient(sys, eps);
    const int n = sys->rank();
    std::vector<i64> out(n, 0);
    for (int i = 0; i < n; ++i) {
        if (!a[i].is_integer())
            throw std::invalid_argument("ambient vector is not in the weight lattice");
        out[i] = a[i].num();
    }
    return Weight(sys, std::move(out));
}

Weight simple_reflection(const Weight& w, int i) {
    const auto& cartan = w.system->cartan();
    std::vector<i64> c(w.coeffs);
    const i64 ai = c[i];
    for (int j = 0; j < w.system->rank(); ++j) c[j] -= ai * cartan[i][j];
    return Weight(w.system, std::move(c));
}

Weight dominant_representative(const Weight& w) {
    Weight cur = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < cur.system->rank(); ++i) {
            if (cur.coeffs[i] < 0) {
                cur = simple_reflection(cur, i);
                moved = true;
            }
        }
    }
    return cur;
}

}  // namespace weylbranch
