#include "weylbranch/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdlib>

namespace py = pybind11;
using namespace weylbranch;

#ifndef WEYLBRANCH_BUNDLED_DATA_DIR
#define WEYLBRANCH_BUNDLED_DATA_DIR "data"
#endif

namespace {

RootSystemPtr make_system(const std::string& family, int rank) {
    return build_root_system(family_from_char(family.at(0)), rank);
}

Weight make_weight(const std::string& family, int rank, const std::vector<i64>& coeffs) {
    return Weight(make_system(family, rank), coeffs);
}

std::string default_data_dir() {
    const char* env = std::getenv("WEYLBRANCH_DATA_DIR");
    return env ? env : WEYLBRANCH_BUNDLED_DATA_DIR;
}

}  // namespace

PYBIND11_MODULE(_weylbranch, m) {
    m.doc() = "exact root-system arithmetic, branching, and table verification";

    py::class_<Weight>(m, "Weight")
        .def(py::init(&make_weight), py::arg("family"), py::arg("rank"), py::arg("coeffs"))
        .def_property_readonly("coeffs", [](const Weight& w) { return w.coeffs; })
        .def_property_readonly("system", [](const Weight& w) { return w.system->name(); })
        .def("dominant", &Weight::dominant)
        .def("__repr__", [](const Weight& w) { return w.system->name() + w.str(); })
        .def("__eq__", [](const Weight& a, const Weight& b) { return a == b; });

    py::class_<SubgroupWeight>(m, "SubgroupWeight")
        .def_property_readonly("factors", [](const SubgroupWeight& w) { return w.factor_coeffs; })
        .def_property_readonly("torus", [](const SubgroupWeight& w) { return w.torus; })
        .def("__repr__", &SubgroupWeight::str)
        .def("omega", &SubgroupWeight::omega_str)
        .def("__eq__", [](const SubgroupWeight& a, const SubgroupWeight& b) { return a == b; });

    py::class_<BranchFactor>(m, "BranchFactor")
        .def_readonly("weight", &BranchFactor::weight)
        .def_readonly("multiplicity", &BranchFactor::multiplicity)
        .def_readonly("dim", &BranchFactor::dim);

    py::class_<BranchResult>(m, "BranchResult")
        .def_readonly("factors", &BranchResult::factors)
        .def_readonly("total_dim", &BranchResult::total_dim)
        .def_readonly("kappa", &BranchResult::kappa);

    py::class_<Embedding>(m, "Embedding")
        .def_property_readonly("ambient", [](const Embedding& e) { return e.ambient->name(); })
        .def_property_readonly("subgroup", [](const Embedding& e) { return e.subgroup.str(); })
        .def_property_readonly("provenance", [](const Embedding& e) { return e.provenance; });

    py::class_<PermGroup>(m, "PermGroup")
        .def_readonly("degree", &PermGroup::degree)
        .def_property_readonly("generators", [](const PermGroup& g) { return g.generators; });

    m.def("cartan_matrix", [](const std::string& family, int rank) {
        return make_system(family, rank)->cartan();
    });
    m.def("inverse_cartan", [](const std::string& family, int rank) {
        auto sys = make_system(family, rank);
        std::vector<std::vector<std::pair<i64, i64>>> out;
        for (const auto& row : sys->inverse_cartan()) {
            std::vector<std::pair<i64, i64>> r;
            for (const auto& c : row) r.emplace_back(c.num(), c.den());
            out.push_back(std::move(r));
        }
        return out;
    });
    m.def("to_root_coords", [](const Weight& w) {
        std::vector<std::pair<i64, i64>> out;
        for (const auto& c : to_root_coords(w).coeffs) out.emplace_back(c.num(), c.den());
        return out;
    });
    m.def("dominance_leq", &dominance_leq, py::arg("mu"), py::arg("nu"));
    m.def("graph_automorphism_image", &graph_automorphism_image);
    m.def("dual_weight", &dual_weight);
    m.def("is_p_restricted", &is_p_restricted, py::arg("w"), py::arg("p"));

    m.def("weyl_dim", [](const Weight& w) { return py::int_(py::str(weyl_dim(w).str())); });
    m.def("weyl_orbit_size", [](const Weight& w) { return py::int_(py::str(weyl_orbit_size(w).str())); });
    m.def("dominant_character", [](const Weight& w, u64 cap) {
        py::dict out;
        for (const auto& [coeffs, mult] : dominant_character(w, cap).entries)
            out[py::tuple(py::cast(coeffs))] = mult;
        return out;
    }, py::arg("w"), py::arg("dim_cap") = kDefaultDimCap);
    m.def("fundamental_module_weights", [](const std::string& family, int rank, int k) {
        py::dict out;
        for (const auto& [coeffs, mult] : fundamental_module_weights(make_system(family, rank), k))
            out[py::tuple(py::cast(coeffs))] = mult;
        return out;
    });
    m.def("steinberg_decompose", [](const Weight& w, i64 p) {
        std::vector<std::pair<std::vector<i64>, int>> out;
        for (const auto& [f, r] : steinberg_decompose(w, p).factors) out.emplace_back(f.coeffs, r);
        return out;
    });
    m.def("tensor_highest_weight", [](const Weight& a, const Weight& b) {
        auto [w, flag] = tensor_highest_weight(a, b);
        return std::make_pair(w, flag);
    });

    m.def("catalog", [](int id, const std::map<std::string, i64>& params) { return catalog(id, params); },
          py::arg("id"), py::arg("params") = std::map<std::string, i64>{});
    m.def("restrict_weight", &restrict_weight);
    m.def("branch_char0", &branch_char0, py::arg("embedding"), py::arg("lambda_"),
          py::arg("dim_cap") = kDefaultDimCap);
    m.def("validate_embedding", [](const Embedding& e) {
        auto rep = validate_embedding(e);
        return std::make_pair(rep.ok, rep.message);
    });

    m.def("load_perm_file", &load_perm_file);
    m.def("group", [](const std::string& spec, const std::string& dir) {
        return resolve_group(spec, dir.empty() ? default_data_dir() + "/perm" : dir);
    }, py::arg("spec"), py::arg("dir") = std::string());
    m.def("is_t_transitive", &is_t_transitive);
    m.def("orbits_on_k_subsets", &orbits_on_k_subsets);
    m.def("torus_irreducibility", &torus_irreducibility);

    m.def("congruence_holds", &congruence_holds, py::arg("tag"), py::arg("lambda_coeffs"),
          py::arg("params"));
    m.def("incompatibility_search", [](i64 bound_p, i64 bound_params) -> py::object {
        auto c = incompatibility_search(bound_p, bound_params);
        if (!c) return py::none();
        return py::make_tuple(c->p, c->n, c->k, c->a);
    });
    m.def("spin_decomposition_count", [](const std::string& family, int n, const std::vector<i64>& dims) {
        return spin_decomposition_count(family_from_char(family.at(0)), n, dims);
    });

    m.def("verify_all", [](const std::string& data_dir, u64 dim_cap, int jobs) {
        VerifyContext ctx{data_dir.empty() ? default_data_dir() : data_dir, dim_cap, jobs};
        Report r = verify_all(ctx);
        return std::make_tuple(r.pass_count, r.fail_count, r.flagged_count, r.to_json());
    }, py::arg("data_dir") = std::string(), py::arg("dim_cap") = kDefaultDimCap, py::arg("jobs") = 1);
    m.def("verify_table_json", [](const std::string& path, const std::string& data_dir) {
        VerifyContext ctx{data_dir.empty() ? default_data_dir() : data_dir, kDefaultDimCap, 1};
        return verify_table_file(path, ctx).to_json();
    }, py::arg("path"), py::arg("data_dir") = std::string());

    m.def("data_dir", &default_data_dir);
    m.def("catalog_manifest_json", &catalog_manifest_json);
}
