#include "weylbranch/verify.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace weylbranch {

std::string to_string(VerifMode m) {
    switch (m) {
        case VerifMode::Char0Branch: return "char0-branch";
        case VerifMode::Structural: return "structural";
        case VerifMode::Transitivity: return "transitivity";
        case VerifMode::SpinCount: return "spin-count";
        case VerifMode::Flagged: return "flagged";
    }
    return "?";
}

std::string to_string(RowStatus s) {
    switch (s) {
        case RowStatus::Pass: return "pass";
        case RowStatus::Fail: return "fail";
        case RowStatus::Flagged: return "flagged";
    }
    return "?";
}

namespace {

VerifMode mode_from_string(const std::string& s) {
    if (s == "char0-branch") return VerifMode::Char0Branch;
    if (s == "structural") return VerifMode::Structural;
    if (s == "transitivity") return VerifMode::Transitivity;
    if (s == "spin-count") return VerifMode::SpinCount;
    if (s == "flagged") return VerifMode::Flagged;
    throw std::invalid_argument("unknown verification mode '" + s + "'");
}

std::vector<i64> parse_int_list(const std::string& s) {
    std::vector<i64> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) if (!tok.empty()) out.push_back(std::stoll(tok));
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(const std::string& origin, int line, const std::string& what) {
    throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + what);
}

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

i64 mod(i64 v, i64 p) { return ((v % p) + p) % p; }

// "p any" admits p = 0; "p p!=2,3" does; "p p=2" and congruence tags do not.
bool admits_p0(const std::string& cond) {
    return cond == "any" || cond.rfind("p!=", 0) == 0;
}

}  // namespace

TableFixture parse_table_text(const std::string& text, const std::string& origin) {
    TableFixture fx;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    TripleRow row;
    bool in_row = false;
    auto flush_key = [&](const std::string& key, const std::string& val, int line) {
        if (key == "mode") row.mode = mode_from_string(val);
        else if (key == "ambient") {
            std::istringstream a(val);
            std::string fam;
            a >> fam >> row.rank;
            if (fam.size() != 1 || row.rank <= 0) parse_fail(origin, line, "bad ambient '" + val + "'");
            row.family = family_from_char(fam[0]);
        } else if (key == "lambda") row.lambda = parse_int_list(val);
        else if (key == "p") row.p_condition = val;
        else if (key == "embedding") row.embedding_id = std::stoi(val);
        else if (key == "param") {
            std::istringstream a(val);
            std::string name;
            i64 v;
            a >> name >> v;
            row.params[name] = v;
        } else if (key == "group") row.group_spec = val;
        else if (key == "k") row.k = std::stoi(val);
        else if (key == "congruence") {
            std::istringstream a(val);
            std::string tag;
            a >> tag >> row.congruence_p;
            if (tag.size() != 1 || tag[0] < 'a' || tag[0] > 'd')
                parse_fail(origin, line, "bad congruence tag '" + val + "'");
            row.congruence_tag = tag[0];
            std::string name;
            i64 v;
            while (a >> name >> v) row.congruence_params[name] = v;
        } else if (key == "family") row.family = family_from_char(val[0]);
        else if (key == "n") row.rank = std::stoi(val);
        else if (key == "dims") row.dims = parse_int_list(val);
        else if (key == "expect_restriction") row.expect_restriction = val;
        else if (key == "expect_factors") {
            std::istringstream a(val);
            std::string item;
            while (a >> item) {
                auto x = item.find('x');
                if (x == std::string::npos) parse_fail(origin, line, "factor needs multxweight");
                row.expect_factors.emplace_back(item.substr(x + 1), std::stoull(item.substr(0, x)));
            }
        } else if (key == "expect_kappa") row.expect_kappa = std::stoll(val);
        else if (key == "expect_factor_dim") row.expect_factor_dim = std::stoll(val);
        else if (key == "expect_transitive") row.expect_transitive = (val == "true") ? 1 : 0;
        else if (key == "reason") row.reason = val;
        else if (key == "note") row.note = val;
        else parse_fail(origin, line, "unknown key '" + key + "'");
    };
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        auto sp = line.find(' ');
        std::string key = sp == std::string::npos ? line : line.substr(0, sp);
        std::string val = sp == std::string::npos ? "" : trim(line.substr(sp + 1));
        if (key == "table") { fx.name = val; continue; }
        if (key == "flagged_expected") { fx.flagged_expected = std::stoll(val); continue; }
        if (key == "row") {
            if (in_row) parse_fail(origin, lineno, "nested row");
            row = TripleRow{};
            row.row_id = val;
            in_row = true;
            continue;
        }
        if (key == "endrow") {
            if (!in_row) parse_fail(origin, lineno, "endrow without row");
            fx.rows.push_back(row);
            in_row = false;
            continue;
        }
        if (!in_row) parse_fail(origin, lineno, "key '" + key + "' outside a row");
        flush_key(key, val, lineno);
    }
    if (in_row) parse_fail(origin, lineno, "unterminated row");
    return fx;
}

TableFixture load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table fixture " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table_text(buf.str(), path);
}

std::string serialize_table(const TableFixture& fx) {
    std::ostringstream out;
    out << "table " << fx.name << "\n";
    if (fx.flagged_expected >= 0) out << "flagged_expected " << fx.flagged_expected << "\n";
    for (const auto& r : fx.rows) {
        out << "\nrow " << r.row_id << "\n";
        out << "mode " << to_string(r.mode) << "\n";
        if (r.mode == VerifMode::SpinCount) {
            out << "family " << static_cast<char>(r.family) << "\n";
            out << "n " << r.rank << "\n";
            if (!r.dims.empty()) {
                out << "dims ";
                for (size_t i = 0; i < r.dims.size(); ++i) out << (i ? "," : "") << r.dims[i];
                out << "\n";
            }
        } else if (r.rank > 0) {
            out << "ambient " << static_cast<char>(r.family) << " " << r.rank << "\n";
        }
        if (!r.lambda.empty()) {
            out << "lambda ";
            for (size_t i = 0; i < r.lambda.size(); ++i) out << (i ? "," : "") << r.lambda[i];
            out << "\n";
        }
        if (r.p_condition != "any") out << "p " << r.p_condition << "\n";
        if (r.embedding_id) out << "embedding " << r.embedding_id << "\n";
        for (const auto& [k, v] : r.params) out << "param " << k << " " << v << "\n";
        if (!r.group_spec.empty()) out << "group " << r.group_spec << "\n";
        if (r.k) out << "k " << r.k << "\n";
        if (r.congruence_tag) {
            out << "congruence " << r.congruence_tag << " " << r.congruence_p;
            for (const auto& [k, v] : r.congruence_params) out << " " << k << " " << v;
            out << "\n";
        }
        if (!r.expect_restriction.empty()) out << "expect_restriction " << r.expect_restriction << "\n";
        if (!r.expect_factors.empty()) {
            out << "expect_factors";
            for (const auto& [w, m] : r.expect_factors) out << " " << m << "x" << w;
            out << "\n";
        }
        if (r.expect_kappa >= 0) out << "expect_kappa " << r.expect_kappa << "\n";
        if (r.expect_factor_dim >= 0) out << "expect_factor_dim " << r.expect_factor_dim << "\n";
        if (r.expect_transitive >= 0)
            out << "expect_transitive " << (r.expect_transitive ? "true" : "false") << "\n";
        if (!r.reason.empty()) out << "reason " << r.reason << "\n";
        if (!r.note.empty()) out << "note " << r.note << "\n";
        out << "endrow\n";
    }
    return out.str();
}

ChainsFixture parse_chains_text(const std::string& text, const std::string& origin) {
    ChainsFixture out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    ChainSpec chain;
    bool in_chain = false;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        auto sp = line.find(' ');
        std::string key = sp == std::string::npos ? line : line.substr(0, sp);
        std::string val = sp == std::string::npos ? "" : trim(line.substr(sp + 1));
        if (key == "chain") {
            if (in_chain) parse_fail(origin, lineno, "nested chain");
            chain = ChainSpec{};
            chain.id = val;
            in_chain = true;
        } else if (key == "flagged_expected" && !in_chain) {
            out.flagged_expected = std::stoll(val);
        } else if (key == "endchain") {
            out.chains.push_back(chain);
            in_chain = false;
        } else if (!in_chain) {
            parse_fail(origin, lineno, "key outside chain");
        } else if (key == "module") {
            std::istringstream a(val);
            std::string fam;
            a >> fam >> chain.rank;
            chain.family = family_from_char(fam[0]);
        } else if (key == "lambda") {
            chain.lambda = parse_int_list(val);
        } else if (key == "claimed_length") {
            chain.claimed_length = std::stoi(val);
        } else if (key == "link") {
            std::istringstream a(val);
            ChainLink link;
            std::string mode;
            a >> mode;
            if (mode != "torus") parse_fail(origin, lineno, "unsupported link mode '" + mode + "'");
            a >> link.group_spec >> link.k;
            chain.links.push_back(link);
        } else if (key == "flagged") {
            chain.flagged_reason = val;
        } else {
            parse_fail(origin, lineno, "unknown key '" + key + "'");
        }
    }
    if (in_chain) parse_fail(origin, lineno, "unterminated chain");
    return out;
}

ChainsFixture load_chains_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open chains fixture " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_chains_text(buf.str(), path);
}

bool congruence_holds(char tag, const std::vector<i64>& lambda_coeffs,
                      const std::map<std::string, i64>& params) {
    auto need = [&](const std::string& k) {
        auto it = params.find(k);
        if (it == params.end())
            throw std::invalid_argument(std::string("congruence tag ") + tag + " needs parameter " + k);
        return it->second;
    };
    const i64 p = need("p");
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
    switch (tag) {
        case 'a': {
            // a*l_k + b*l_{k+1} for C_m < A_{2m-1}: a+b = p-1, p odd,
            // 1 <= k < m, a != 0 if k = m-1
            i64 a = need("a"), b = need("b"), k = need("k"), m = need("m");
            if (p == 2) return false;
            if (k < 1 || k >= m) return false;
            if (a + b != p - 1) return false;
            if (k == m - 1 && a == 0) return false;
            return true;
        }
        case 'b': {
            // B_n, D_n.2: p odd, a_n = 1, gap condition between consecutive
            // nonzero coefficients, terminal condition on the largest i < n
            i64 n = need("n");
            if (p == 2) return false;
            if (static_cast<i64>(lambda_coeffs.size()) != n)
                throw std::invalid_argument("tag b needs the full coefficient vector");
            if (lambda_coeffs[n - 1] != 1) return false;
            i64 prev = 0;  // previous nonzero index (1-based), 0 if none
            for (i64 i = 1; i < n; ++i) {
                if (lambda_coeffs[i - 1] == 0) continue;
                if (prev != 0) {
                    // a_prev + a_i = prev - i (mod p)
                    if (mod(lambda_coeffs[prev - 1] + lambda_coeffs[i - 1] - (prev - i), p) != 0)
                        return false;
                }
                prev = i;
            }
            if (prev != 0) {
                // 2 a_prev = -2(n-prev)-1 (mod p)
                if (mod(2 * lambda_coeffs[prev - 1] + 2 * (n - prev) + 1, p) != 0) return false;
            }
            return true;
        }
        case 'c': {
            // C_{2m}, C_m^2.2, l_{2m-1}+a*l_{2m}: 0 <= a < p, (m,a) != (1,0),
            // 2a+3 = 0 (mod p)
            i64 a = need("a"), m = need("m");
            if (a < 0 || a >= p) return false;
            if (m == 1 && a == 0) return false;
            return mod(2 * a + 3, p) == 0;
        }
        case 'd': {
            // D_n, B_{n-1}, a*l_k + b*l_{n-i}: 1 <= k <= n-2, i in {0,1},
            // ab != 0, a+b+n-k-1 = 0 (mod p)
            i64 a = need("a"), b = need("b"), n = need("n"), k = need("k"), i = need("i");
            if (k < 1 || k > n - 2) return false;
            if (i != 0 && i != 1) return false;
            if (a == 0 || b == 0) return false;
            return mod(a + b + n - k - 1, p) == 0;
        }
        default:
            throw std::invalid_argument(std::string("unknown congruence tag '") + tag + "'");
    }
}

std::optional<Counterexample> incompatibility_search(i64 bound_p, i64 bound_params) {
    if (bound_p < 1 || bound_params < 2)
        throw std::invalid_argument("incompatibility_search needs positive bounds");
    for (i64 p = 2; p <= bound_p; ++p) {
        if (!is_prime(p)) continue;
        for (i64 n = 2; n <= bound_params; ++n)
            for (i64 k = 1; k < n; ++k)
                for (i64 a = 1; a < p; ++a)
                    if (mod(a + n - k, p) == 0 && mod(2 * a + 2 * (n - k) + 1, p) == 0)
                        return Counterexample{p, n, k, a};
    }
    return std::nullopt;
}

std::pair<u64, u64> spin_decomposition_count(Family family, int n, const std::vector<i64>& dims) {
    if (family != Family::B && family != Family::D)
        throw std::invalid_argument("spin counting applies to orthogonal families B and D");
    if (dims.empty()) throw std::invalid_argument("empty decomposition");
    i64 total = 0;
    for (i64 d : dims) {
        if (d < 3)
            throw std::invalid_argument("every summand must have dimension >= 3, got " +
                                        std::to_string(d));
        total += d;
    }
    const i64 expected = family == Family::B ? 2 * n + 1 : 2 * n;
    if (total != expected)
        throw std::invalid_argument("summand dimensions total " + std::to_string(total) + ", need " +
                                    std::to_string(expected) + " for " +
                                    std::string(1, static_cast<char>(family)) + std::to_string(n));
    if (family == Family::D && (std::count_if(dims.begin(), dims.end(), [](i64 d) { return d % 2; }) % 2))
        throw std::invalid_argument("D_n decomposition needs an even number of odd summands");
    u64 factor_dim = 1;
    for (i64 d : dims) {
        i64 l = d / 2;  // d = 2l+1 or 2l
        int e = d % 2 ? static_cast<int>(l) : static_cast<int>(l - 1);
        factor_dim <<= e;
    }
    const u64 spin_dim = 1ull << (family == Family::B ? n : n - 1);
    if (spin_dim % factor_dim != 0)
        throw std::logic_error("factor dimension does not divide the spin dimension");
    u64 kappa = spin_dim / factor_dim;
    if (kappa & (kappa - 1))
        throw std::logic_error("factor count is not a power of two");
    return {kappa, factor_dim};
}

void Report::add(ReportEntry e) {
    switch (e.status) {
        case RowStatus::Pass: ++pass_count; break;
        case RowStatus::Fail: ++fail_count; break;
        case RowStatus::Flagged: ++flagged_count; break;
    }
    entries.push_back(std::move(e));
}

void Report::merge(const Report& other) {
    for (const auto& e : other.entries) entries.push_back(e);
    pass_count += other.pass_count;
    fail_count += other.fail_count;
    flagged_count += other.flagged_count;
    if (other.declared_flagged >= 0)
        declared_flagged = (declared_flagged < 0 ? 0 : declared_flagged) + other.declared_flagged;
}

std::string Report::to_json(bool include_timing) const {
    using nlohmann::json;
    json rows = json::array();
    for (const auto& e : entries) {
        json computed;
        if (!e.computed_restriction.empty()) computed["restriction"] = e.computed_restriction;
        if (e.computed_kappa >= 0) computed["kappa"] = e.computed_kappa;
        if (!e.computed_dims.empty()) computed["dims"] = e.computed_dims;
        if (e.computed_total) computed["total_dim"] = e.computed_total;
        json row = {{"row_id", e.row_id},
                    {"status", to_string(e.status)},
                    {"mode", e.mode},
                    {"computed", computed},
                    {"expected", e.expected}};
        if (!e.detail.empty()) row["detail"] = e.detail;
        if (include_timing) row["millis"] = e.millis;
        rows.push_back(row);
    }
    json doc = {{"pass_count", pass_count},
                {"fail_count", fail_count},
                {"flagged_count", flagged_count},
                {"rows", rows}};
    if (declared_flagged >= 0) doc["declared_flagged"] = declared_flagged;
    return doc.dump(2) + "\n";
}

std::string Report::to_human() const {
    std::ostringstream out;
    for (const auto& e : entries) {
        out << to_string(e.status) << "  " << e.row_id << " [" << e.mode << "]";
        if (!e.detail.empty()) out << " -- " << e.detail;
        out << "\n";
    }
    out << pass_count << " passed, " << fail_count << " failed, " << flagged_count << " flagged\n";
    return out.str();
}

namespace {

// Canonical text of a subgroup weight up to permutations of equal factors.
std::string canon_restriction(const Embedding& e, const SubgroupWeight& w) {
    return canonical_factor_form(w, e.subgroup).str();
}

ReportEntry verify_branch_or_structural(const TripleRow& row, const VerifyContext& ctx) {
    ReportEntry out;
    out.row_id = row.row_id;
    out.mode = to_string(row.mode);
    Embedding e = catalog(row.embedding_id, row.params);
    auto sys = RootSystem::build(row.family, row.rank);
    if (!sys->same_as(*e.ambient)) {
        out.status = RowStatus::Fail;
        out.detail = "row ambient " + sys->name() + " does not match catalog ambient " + e.ambient->name();
        return out;
    }
    Weight lambda(sys, row.lambda);
    SubgroupWeight restr = restrict_weight(e, lambda);
    out.computed_restriction = canon_restriction(e, restr);
    SubgroupWeight expect = SubgroupWeight::parse(row.expect_restriction, e.subgroup);
    out.expected = canon_restriction(e, expect);
    // structural rows pin the restriction map itself; branch rows compare
    // the table column against the factor list below (the tables record
    // highest weights up to the H-conjugacy twist)
    if (row.mode == VerifMode::Structural && out.computed_restriction != out.expected) {
        out.status = RowStatus::Fail;
        out.detail = "restriction mismatch: computed " + out.computed_restriction + ", expected " +
                     out.expected;
        return out;
    }
    if (row.congruence_tag) {
        std::map<std::string, i64> params = row.congruence_params;
        params["p"] = row.congruence_p;
        if (!congruence_holds(row.congruence_tag, row.lambda, params)) {
            out.status = RowStatus::Fail;
            out.detail = std::string("congruence condition (") + row.congruence_tag +
                         ") fails at the fixture parameters";
            return out;
        }
    }
    if (row.mode == VerifMode::Char0Branch) {
        BranchResult br = branch_char0(e, lambda, ctx.dim_cap);
        out.computed_kappa = static_cast<i64>(br.kappa);
        out.computed_total = br.total_dim;
        for (const auto& f : br.factors)
            for (u64 i = 0; i < f.multiplicity; ++i) out.computed_dims.push_back(f.dim);
        if (row.expect_kappa >= 0 && static_cast<i64>(br.kappa) != row.expect_kappa) {
            out.status = RowStatus::Fail;
            out.detail = "kappa mismatch: computed " + std::to_string(br.kappa) + ", expected " +
                         std::to_string(row.expect_kappa);
            return out;
        }
        // the table's restriction column must appear among the factors
        bool found = false;
        for (const auto& f : br.factors)
            if (canon_restriction(e, f.weight) == out.expected) found = true;
        if (!found) {
            out.status = RowStatus::Fail;
            out.detail = "expected restriction is not a branch factor";
            return out;
        }
        if (!row.expect_factors.empty()) {
            std::vector<std::pair<SubgroupWeight, u64>> got, want;
            for (const auto& f : br.factors) got.emplace_back(f.weight, f.multiplicity);
            for (const auto& [txt, m] : row.expect_factors)
                want.emplace_back(SubgroupWeight::parse(txt, e.subgroup), m);
            auto cg = canonical_factor_form(got, e.subgroup);
            auto cw = canonical_factor_form(want, e.subgroup);
            if (cg != cw) {
                out.status = RowStatus::Fail;
                out.detail = "factor list mismatch";
                return out;
            }
        }
    }
    out.status = RowStatus::Pass;
    return out;
}

ReportEntry verify_transitivity(const TripleRow& row, const VerifyContext& ctx) {
    ReportEntry out;
    out.row_id = row.row_id;
    out.mode = to_string(row.mode);
    if (row.family != Family::A) {
        out.status = RowStatus::Fail;
        out.detail = "torus criterion rows need ambient family A";
        return out;
    }
    PermGroup g = resolve_group(row.group_spec, ctx.data_dir + "/perm");
    bool irr = torus_irreducibility(g, row.rank, row.k);
    out.computed_restriction = irr ? "irreducible" : "reducible";
    out.expected = row.expect_transitive == 1 ? "irreducible" : "reducible";
    if ((row.expect_transitive == 1) != irr) {
        out.status = RowStatus::Fail;
        out.detail = "torus criterion disagrees with the table row";
        return out;
    }
    if (row.expect_kappa >= 0) {
        // kappa column for torus rows = number of weight lines = binom(n+1, k)
        auto weights = fundamental_module_weights(RootSystem::build(Family::A, row.rank), row.k);
        u64 count = 0;
        for (const auto& [w, m] : weights) { (void)w; count += m; }
        out.computed_kappa = static_cast<i64>(count);
        if (static_cast<i64>(count) != row.expect_kappa) {
            out.status = RowStatus::Fail;
            out.detail = "weight-line count " + std::to_string(count) + " differs from kappa " +
                         std::to_string(row.expect_kappa);
            return out;
        }
    }
    out.status = RowStatus::Pass;
    return out;
}

ReportEntry verify_spin_count(const TripleRow& row, const VerifyContext&) {
    ReportEntry out;
    out.row_id = row.row_id;
    out.mode = to_string(row.mode);
    auto [kappa, fdim] = spin_decomposition_count(row.family, row.rank, row.dims);
    out.computed_kappa = static_cast<i64>(kappa);
    out.computed_dims = {fdim};
    out.expected = "kappa=" + std::to_string(row.expect_kappa) +
                   " factor_dim=" + std::to_string(row.expect_factor_dim);
    if (static_cast<i64>(kappa) != row.expect_kappa ||
        static_cast<i64>(fdim) != row.expect_factor_dim) {
        out.status = RowStatus::Fail;
        out.detail = "spin counting mismatch: computed kappa=" + std::to_string(kappa) +
                     " factor_dim=" + std::to_string(fdim);
        return out;
    }
    out.status = RowStatus::Pass;
    return out;
}

}  // namespace

ReportEntry verify_row(const TripleRow& row, const VerifyContext& ctx) {
    auto start = std::chrono::steady_clock::now();
    ReportEntry out;
    try {
        switch (row.mode) {
            case VerifMode::Flagged:
                out.row_id = row.row_id;
                out.mode = to_string(row.mode);
                out.status = RowStatus::Flagged;
                out.detail = row.reason.empty() ? "flagged without reason" : row.reason;
                break;
            case VerifMode::Char0Branch:
            case VerifMode::Structural: {
                // char0-branch asserts factors and kappa; structural only the
                // characteristic-free restriction map (and congruences)
                if (row.mode == VerifMode::Char0Branch && !admits_p0(row.p_condition)) {
                    out.row_id = row.row_id;
                    out.mode = to_string(row.mode);
                    out.status = RowStatus::Fail;
                    out.detail = "char0-branch mode on a row whose conditions exclude p = 0";
                    break;
                }
                out = verify_branch_or_structural(row, ctx);
                break;
            }
            case VerifMode::Transitivity:
                out = verify_transitivity(row, ctx);
                break;
            case VerifMode::SpinCount:
                out = verify_spin_count(row, ctx);
                break;
        }
    } catch (const std::exception& ex) {
        // missing catalog entries and other construction failures flag the
        // row rather than passing silently
        out.row_id = row.row_id;
        out.mode = to_string(row.mode);
        out.status = RowStatus::Flagged;
        out.detail = std::string("not verifiable: ") + ex.what();
    }
    out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return out;
}

Report verify_table(const TableFixture& fixture, const VerifyContext& ctx) {
    Report report;
    report.declared_flagged = fixture.flagged_expected;
    std::vector<ReportEntry> results(fixture.rows.size());
    if (ctx.jobs > 1 && fixture.rows.size() > 1) {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= fixture.rows.size()) break;
                results[i] = verify_row(fixture.rows[i], ctx);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < ctx.jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    } else {
        for (size_t i = 0; i < fixture.rows.size(); ++i) results[i] = verify_row(fixture.rows[i], ctx);
    }
    for (auto& r : results) report.add(std::move(r));
    if (report.entries.size() != fixture.rows.size())
        throw std::logic_error("row count mismatch in report");
    return report;
}

Report verify_table_file(const std::string& path, const VerifyContext& ctx) {
    return verify_table(load_table_file(path), ctx);
}

ReportEntry verify_chain(const ChainSpec& chain, const VerifyContext& ctx) {
    auto start = std::chrono::steady_clock::now();
    ReportEntry out;
    out.row_id = chain.id;
    out.mode = "chain";
    try {
        if (!chain.flagged_reason.empty()) {
            out.status = RowStatus::Flagged;
            out.detail = chain.flagged_reason;
        } else {
            bool all_irreducible = true;
            for (const auto& link : chain.links) {
                PermGroup g = resolve_group(link.group_spec, ctx.data_dir + "/perm");
                if (!torus_irreducibility(g, chain.rank, link.k)) {
                    all_irreducible = false;
                    out.detail = "link " + link.group_spec + " acts reducibly";
                    break;
                }
            }
            int length = static_cast<int>(chain.links.size()) + 1;  // ambient group included
            out.computed_kappa = length;
            out.expected = "length " + std::to_string(chain.claimed_length);
            if (!all_irreducible) {
                out.status = RowStatus::Fail;
            } else if (length != chain.claimed_length) {
                out.status = RowStatus::Fail;
                out.detail = "chain length " + std::to_string(length) + " differs from claimed " +
                             std::to_string(chain.claimed_length);
            } else {
                out.status = RowStatus::Pass;
            }
        }
    } catch (const std::exception& ex) {
        out.status = RowStatus::Flagged;
        out.detail = std::string("not verifiable: ") + ex.what();
    }
    out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return out;
}

Report verify_chains_file(const std::string& path, const VerifyContext& ctx) {
    Report report;
    ChainsFixture fx = load_chains_file(path);
    report.declared_flagged = fx.flagged_expected;
    for (const auto& chain : fx.chains) report.add(verify_chain(chain, ctx));
    return report;
}

Report verify_all(const VerifyContext& ctx) {
    Report report;
    report.merge(verify_table_file(ctx.data_dir + "/tables/tab_main.tbl", ctx));
    report.merge(verify_table_file(ctx.data_dir + "/tables/t_maint3.tbl", ctx));
    report.merge(verify_table_file(ctx.data_dir + "/tables/spin.tbl", ctx));
    report.merge(verify_chains_file(ctx.data_dir + "/chains/chains.tbl", ctx));
    return report;
}

}  // namespace weylbranch
