#include "weylbranch/permact.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace weylbranch {

void PermGroup::validate() const {
    if (degree < 1) throw std::invalid_argument("permutation group needs positive degree");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            throw std::invalid_argument("generator length does not match degree");
        std::vector<char> hit(degree, 0);
        for (int img : g) {
            if (img < 0 || img >= degree || hit[img])
                throw std::invalid_argument("generator is not a bijection");
            hit[img] = 1;
        }
    }
}

PermGroup parse_perm_text(const std::string& text) {
    PermGroup g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // trim
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        line = line.substr(begin, line.find_last_not_of(" \t\r") - begin + 1);
        if (line.rfind("degree", 0) == 0) {
            g.degree = std::stoi(line.substr(6));
            continue;
        }
        if (g.degree == 0)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": generator before degree header");
        std::vector<int> perm(g.degree);
        for (int i = 0; i < g.degree; ++i) perm[i] = i;
        size_t pos = 0;
        while (pos < line.size()) {
            if (line[pos] != '(')
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected '(' in cycle notation");
            size_t close = line.find(')', pos);
            if (close == std::string::npos)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": unclosed cycle");
            std::string body = line.substr(pos + 1, close - pos - 1);
            for (auto& ch : body)
                if (ch == ',') ch = ' ';
            std::istringstream cyc(body);
            std::vector<int> pts;
            int p;
            while (cyc >> p) {
                if (p < 1 || p > g.degree)
                    throw std::invalid_argument("line " + std::to_string(lineno) + ": point out of range");
                pts.push_back(p - 1);
            }
            for (size_t i = 0; i < pts.size(); ++i) perm[pts[i]] = pts[(i + 1) % pts.size()];
            pos = close + 1;
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        }
        g.generators.push_back(std::move(perm));
    }
    g.validate();
    if (g.generators.empty()) throw std::invalid_argument("fixture declares no generators");
    return g;
}

PermGroup load_perm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open permutation fixture " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_perm_text(buf.str());
}

PermGroup symmetric_group(int degree) {
    PermGroup g;
    g.degree = degree;
    std::vector<int> cycle(degree), swap01(degree);
    for (int i = 0; i < degree; ++i) { cycle[i] = (i + 1) % degree; swap01[i] = i; }
    if (degree >= 2) std::swap(swap01[0], swap01[1]);
    g.generators = {swap01, cycle};
    g.validate();
    return g;
}

PermGroup alternating_group(int degree) {
    if (degree < 3) throw std::invalid_argument("alternating group needs degree >= 3");
    PermGroup g;
    g.degree = degree;
    std::vector<int> three(degree);
    for (int i = 0; i < degree; ++i) three[i] = i;
    three[0] = 1; three[1] = 2; three[2] = 0;
    std::vector<int> big(degree);
    for (int i = 0; i < degree; ++i) big[i] = i;
    if (degree % 2 == 1) {
        for (int i = 0; i < degree; ++i) big[i] = (i + 1) % degree;
    } else {
        for (int i = 1; i < degree; ++i) big[i] = 1 + (i % (degree - 1));
    }
    g.generators = {three, big};
    g.validate();
    return g;
}

PermGroup cyclic_group(int degree) {
    PermGroup g;
    g.degree = degree;
    std::vector<int> cycle(degree);
    for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    g.generators = {cycle};
    g.validate();
    return g;
}

PermGroup resolve_group(const std::string& spec, const std::string& fixture_dir) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        int deg = std::stoi(spec.substr(colon + 1));
        if (kind == "sym") return symmetric_group(deg);
        if (kind == "alt") return alternating_group(deg);
        if (kind == "cyclic") return cyclic_group(deg);
        throw std::invalid_argument("unknown group kind '" + kind + "'");
    }
    return load_perm_file(fixture_dir + "/" + spec + ".perm");
}

u64 falling_factorial(int degree, int t) {
    u64 out = 1;
    for (int i = 0; i < t; ++i) out *= static_cast<u64>(degree - i);
    return out;
}

namespace {

// Pack an ordered tuple of points (degree <= 32) into 5-bit fields.
inline u64 pack_tuple(const int* pts, int t) {
    u64 key = 0;
    for (int i = 0; i < t; ++i) key = (key << 5) | static_cast<u64>(pts[i]);
    return key;
}

}  // namespace

u64 ordered_tuple_orbit_size(const PermGroup& g, int t) {
    if (t < 1 || t > g.degree)
        throw std::invalid_argument("tuple length out of range for degree " + std::to_string(g.degree));
    if (g.degree > 32 || t > 6)
        throw std::invalid_argument("tuple orbit supported for degree <= 32 and t <= 6");

    const u64 space = 1ull << (5 * t);
    std::vector<bool> visited(space, false);
    std::vector<u64> stack;
    stack.reserve(1 << 16);

    int start[12];
    for (int i = 0; i < t; ++i) start[i] = i;
    u64 key0 = pack_tuple(start, t);
    visited[key0] = true;
    stack.push_back(key0);
    u64 count = 0;
    int cur[12], img[12];
    while (!stack.empty()) {
        u64 key = stack.back();
        stack.pop_back();
        ++count;
        for (int i = t - 1; i >= 0; --i) { cur[i] = static_cast<int>(key & 31); key >>= 5; }
        for (const auto& gen : g.generators) {
            for (int i = 0; i < t; ++i) img[i] = gen[cur[i]];
            u64 k = pack_tuple(img, t);
            if (!visited[k]) { visited[k] = true; stack.push_back(k); }
        }
    }
    return count;
}

bool is_t_transitive(const PermGroup& g, int t) {
    if (t > g.degree) throw std::invalid_argument("transitivity degree exceeds point count");
    return ordered_tuple_orbit_size(g, t) == falling_factorial(g.degree, t);
}

std::vector<u64> orbits_on_k_subsets(const PermGroup& g, int k) {
    if (k < 0 || k > g.degree) throw std::invalid_argument("subset size out of range");
    if (g.degree > 32) throw std::invalid_argument("subset orbits supported for degree <= 32");
    std::vector<u64> sizes;
    std::vector<std::uint32_t> subsets;
    // enumerate all k-subsets as bitmasks
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint32_t m = 0;
        for (int i : idx) m |= (1u << i);
        subsets.push_back(m);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == g.degree - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    std::sort(subsets.begin(), subsets.end());
    std::vector<char> seen(subsets.size(), 0);
    auto index_of = [&](std::uint32_t m) {
        return static_cast<size_t>(std::lower_bound(subsets.begin(), subsets.end(), m) - subsets.begin());
    };
    for (size_t s = 0; s < subsets.size(); ++s) {
        if (seen[s]) continue;
        u64 size = 0;
        std::vector<std::uint32_t> stack{subsets[s]};
        seen[s] = 1;
        while (!stack.empty()) {
            std::uint32_t m = stack.back();
            stack.pop_back();
            ++size;
            for (const auto& gen : g.generators) {
                std::uint32_t img = 0;
                for (int p = 0; p < g.degree; ++p)
                    if (m & (1u << p)) img |= (1u << gen[p]);
                size_t j = index_of(img);
                if (!seen[j]) { seen[j] = 1; stack.push_back(img); }
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

bool torus_irreducibility(const PermGroup& g, int n, int k) {
    if (g.degree != n + 1)
        throw std::invalid_argument("group degree must equal n+1");
    if (k <= 1 || k >= n)
        throw std::invalid_argument("torus criterion needs 1 < k < n");
    int ell = std::min(k, n + 1 - k);
    return is_t_transitive(g, ell);
}

}  // namespace weylbranch
