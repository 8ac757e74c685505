#include "weylbranch/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>

using namespace weylbranch;
using nlohmann::json;

#ifndef WEYLBRANCH_BUNDLED_DATA_DIR
#define WEYLBRANCH_BUNDLED_DATA_DIR "data"
#endif

namespace {

struct GlobalOpts {
    std::string data_dir;
    std::string output = "human";
    u64 dim_cap = kDefaultDimCap;
    int jobs = 1;

    VerifyContext ctx() const { return VerifyContext{data_dir, dim_cap, jobs}; }
    bool json_out() const { return output == "json"; }
};

std::vector<i64> parse_coeffs(const std::string& s) {
    std::vector<i64> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) if (!tok.empty()) out.push_back(std::stoll(tok));
    return out;
}

std::map<std::string, i64> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, i64> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param", "expected name=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    }
    return out;
}

json branch_to_json(const Embedding& e, const BranchResult& br) {
    json factors = json::array();
    for (const auto& f : br.factors)
        factors.push_back({{"weight", f.weight.str()},
                           {"omega", f.weight.omega_str()},
                           {"multiplicity", f.multiplicity},
                           {"dim", f.dim}});
    return {{"subgroup", e.subgroup.str()},
            {"factors", factors},
            {"kappa", br.kappa},
            {"total_dim", br.total_dim}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for classical root systems, branching, and table verification"};
    app.require_subcommand(1);

    GlobalOpts opts;
    const char* env_dir = std::getenv("WEYLBRANCH_DATA_DIR");
    opts.data_dir = env_dir ? env_dir : WEYLBRANCH_BUNDLED_DATA_DIR;
    app.add_option("--data-dir", opts.data_dir, "fixture directory (default: bundled)");
    app.add_option("--output", opts.output, "output format: human or json")
        ->check(CLI::IsMember({"human", "json"}));
    app.add_option("--dim-cap", opts.dim_cap, "character dimension cap");
    app.add_option("--jobs", opts.jobs, "parallel rows for verify");

    // dim FAMILY RANK COEFFS
    std::string dim_family, dim_coeffs;
    int dim_rank = 0;
    auto* cmd_dim = app.add_subcommand("dim", "Weyl dimension of V(lambda)");
    cmd_dim->add_option("family", dim_family)->required();
    cmd_dim->add_option("rank", dim_rank)->required();
    cmd_dim->add_option("coeffs", dim_coeffs)->required();

    // restrict ID COEFFS [--param k=v]
    int cat_id = 0;
    std::string cat_coeffs;
    std::vector<std::string> cat_params;
    auto* cmd_restrict = app.add_subcommand("restrict", "restrict a weight through a catalog embedding");
    cmd_restrict->add_option("id", cat_id)->required();
    cmd_restrict->add_option("coeffs", cat_coeffs)->required();
    cmd_restrict->add_option("--param,-P", cat_params, "embedding parameter name=value");

    // branch ID COEFFS [--param k=v]
    int br_id = 0;
    std::string br_coeffs;
    std::vector<std::string> br_params;
    auto* cmd_branch = app.add_subcommand("branch", "characteristic-zero branching through a catalog embedding");
    cmd_branch->add_option("id", br_id)->required();
    cmd_branch->add_option("coeffs", br_coeffs)->required();
    cmd_branch->add_option("--param,-P", br_params, "embedding parameter name=value");

    // verify TARGET
    std::string verify_target;
    auto* cmd_verify = app.add_subcommand("verify", "replay table fixtures (all|tables|chains|spin|<path>)");
    cmd_verify->add_option("target", verify_target)->required();

    // transitivity GROUP T
    std::string trans_group;
    int trans_t = 0;
    auto* cmd_trans = app.add_subcommand("transitivity", "ordered-tuple transitivity test");
    cmd_trans->add_option("group", trans_group, "fixture name or sym:N/alt:N/cyclic:N")->required();
    cmd_trans->add_option("t", trans_t)->required();

    // spincount FAMILY N DIMS
    std::string spin_family, spin_dims;
    int spin_n = 0;
    auto* cmd_spin = app.add_subcommand("spincount", "spin-module factor counting for an orthogonal decomposition");
    cmd_spin->add_option("family", spin_family)->required();
    cmd_spin->add_option("n", spin_n)->required();
    cmd_spin->add_option("dims", spin_dims)->required();

    auto* cmd_manifest = app.add_subcommand("manifest", "print the embedding catalog manifest");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (*cmd_dim) {
            auto sys = build_root_system(family_from_char(dim_family.at(0)), dim_rank);
            BigUint d = weyl_dim(Weight(sys, parse_coeffs(dim_coeffs)));
            if (opts.json_out())
                std::cout << json{{"system", sys->name()}, {"dim", d.str()}}.dump() << "\n";
            else
                std::cout << d.str() << "\n";
        } else if (*cmd_restrict) {
            Embedding e = catalog(cat_id, parse_params(cat_params));
            Weight w(e.ambient, parse_coeffs(cat_coeffs));
            SubgroupWeight r = restrict_weight(e, w);
            if (opts.json_out())
                std::cout << json{{"subgroup", e.subgroup.str()},
                                  {"weight", r.str()},
                                  {"omega", r.omega_str()}}
                                 .dump()
                          << "\n";
            else
                std::cout << r.str() << "  " << r.omega_str() << "\n";
        } else if (*cmd_branch) {
            Embedding e = catalog(br_id, parse_params(br_params));
            Weight w(e.ambient, parse_coeffs(br_coeffs));
            BranchResult br = branch_char0(e, w, opts.dim_cap);
            if (opts.json_out()) {
                std::cout << branch_to_json(e, br).dump(2) << "\n";
            } else {
                for (const auto& f : br.factors)
                    std::cout << f.multiplicity << " x " << f.weight.str() << "  dim " << f.dim
                              << "  (" << f.weight.omega_str() << ")\n";
                std::cout << "kappa " << br.kappa << ", total dim " << br.total_dim << "\n";
            }
        } else if (*cmd_verify) {
            VerifyContext ctx = opts.ctx();
            Report report;
            if (verify_target == "all") {
                report = verify_all(ctx);
            } else if (verify_target == "tables") {
                report.merge(verify_table_file(ctx.data_dir + "/tables/tab_main.tbl", ctx));
                report.merge(verify_table_file(ctx.data_dir + "/tables/t_maint3.tbl", ctx));
            } else if (verify_target == "spin") {
                report = verify_table_file(ctx.data_dir + "/tables/spin.tbl", ctx);
            } else if (verify_target == "chains") {
                report = verify_chains_file(ctx.data_dir + "/chains/chains.tbl", ctx);
            } else {
                report = verify_table_file(verify_target, ctx);
            }
            std::cout << (opts.json_out() ? report.to_json() : report.to_human());
            return report.fail_count > 0 ? 1 : 0;
        } else if (*cmd_trans) {
            PermGroup g = resolve_group(trans_group, opts.data_dir + "/perm");
            u64 orbit = ordered_tuple_orbit_size(g, trans_t);
            bool ok = orbit == falling_factorial(g.degree, trans_t);
            if (opts.json_out())
                std::cout << json{{"degree", g.degree},
                                  {"t", trans_t},
                                  {"orbit", orbit},
                                  {"transitive", ok}}
                                 .dump()
                          << "\n";
            else
                std::cout << (ok ? "true" : "false") << "  orbit " << orbit << "\n";
        } else if (*cmd_spin) {
            auto [kappa, fdim] =
                spin_decomposition_count(family_from_char(spin_family.at(0)), spin_n, parse_coeffs(spin_dims));
            if (opts.json_out())
                std::cout << json{{"kappa", kappa}, {"factor_dim", fdim}}.dump() << "\n";
            else
                std::cout << "kappa " << kappa << ", factor dim " << fdim << "\n";
        } else if (*cmd_manifest) {
            std::cout << catalog_manifest_json();
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
