/* Table-driven verification: fixture rows replayed through the catalog,
   congruence predicates, spin-decomposition counting, chain checks, and
   deterministic JSON reports. */

#pragma once

#include "embedcat.hpp"
#include "permact.hpp"

#include <optional>

namespace weylbranch {

enum class VerifMode { Char0Branch, Structural, Transitivity, SpinCount, Flagged };
enum class RowStatus { Pass, Fail, Flagged };

std::string to_string(VerifMode m);
std::string to_string(RowStatus s);

// One row of a table fixture; field names mirror the fixture grammar.
struct TripleRow {
    std::string row_id;
    VerifMode mode = VerifMode::Flagged;
    Family family = Family::A;
    int rank = 0;
    std::vector<i64> lambda;
    std::string p_condition = "any";
    int embedding_id = 0;
    std::map<std::string, i64> params;
    std::string group_spec;  // transitivity rows
    int k = 0;               // transitivity rows
    char congruence_tag = 0; // 'a'..'d', 0 if none
    i64 congruence_p = 0;
    std::map<std::string, i64> congruence_params;
    std::vector<i64> dims;   // spin-count rows
    std::string expect_restriction;
    std::vector<std::pair<std::string, u64>> expect_factors;  // (weight text, multiplicity)
    i64 expect_kappa = -1;
    i64 expect_factor_dim = -1;
    int expect_transitive = -1;  // -1 unset, 0 false, 1 true
    std::string reason;          // flagged rows
    std::string note;
};

struct TableFixture {
    std::string name;
    i64 flagged_expected = -1;
    std::vector<TripleRow> rows;
};

struct ChainLink {
    std::string group_spec;
    int k = 0;
};

struct ChainSpec {
    std::string id;
    Family family = Family::A;
    int rank = 0;
    std::vector<i64> lambda;
    int claimed_length = 0;
    std::vector<ChainLink> links;
    std::string flagged_reason;
};

struct ReportEntry {
    std::string row_id;
    RowStatus status = RowStatus::Fail;
    std::string mode;
    std::string computed_restriction;
    i64 computed_kappa = -1;
    std::vector<u64> computed_dims;
    u64 computed_total = 0;
    std::string expected;
    std::string detail;
    i64 millis = 0;
};

struct Report {
    std::vector<ReportEntry> entries;
    int pass_count = 0;
    int fail_count = 0;
    int flagged_count = 0;
    i64 declared_flagged = -1;

    void add(ReportEntry e);
    void merge(const Report& other);
    std::string to_json(bool include_timing = true) const;
    std::string to_human() const;
};

struct VerifyContext {
    std::string data_dir;      // root of the fixture tree
    u64 dim_cap = kDefaultDimCap;
    int jobs = 1;
};

TableFixture parse_table_text(const std::string& text, const std::string& origin = "fixture");
TableFixture load_table_file(const std::string& path);
std::string serialize_table(const TableFixture& fixture);

struct ChainsFixture {
    i64 flagged_expected = -1;
    std::vector<ChainSpec> chains;
};

ChainsFixture parse_chains_text(const std::string& text, const std::string& origin = "fixture");
ChainsFixture load_chains_file(const std::string& path);

ReportEntry verify_row(const TripleRow& row, const VerifyContext& ctx);
Report verify_table(const TableFixture& fixture, const VerifyContext& ctx);
Report verify_table_file(const std::string& path, const VerifyContext& ctx);

ReportEntry verify_chain(const ChainSpec& chain, const VerifyContext& ctx);
Report verify_chains_file(const std::string& path, const VerifyContext& ctx);

// Everything shipped under data_dir: tables plus chains, in a fixed order.
Report verify_all(const VerifyContext& ctx);

// Remark r:main4(v) congruence conditions, exact modular arithmetic.
// Tag 'b' reads the full coefficient vector; the other tags use params:
//   a: {a, b, k, m, p}   c: {a, m, p}   d: {a, b, n, k, i, p}
bool congruence_holds(char tag, const std::vector<i64>& lambda_coeffs,
                      const std::map<std::string, i64>& params);

struct Counterexample {
    i64 p, n, k, a;
};
// Brute-force search for simultaneous solutions of a+n-k = 0 (mod p) and
// 2a = -2(n-k)-1 (mod p); the source argument shows there are none.
std::optional<Counterexample> incompatibility_search(i64 bound_p, i64 bound_params);

// Spin module factor counting for an orthogonal decomposition with part
// dimensions `dims` (each >= 3): returns (kappa, factor_dim).
std::pair<u64, u64> spin_decomposition_count(Family family, int n, const std::vector<i64>& dims);

}  // namespace weylbranch
