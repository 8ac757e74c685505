import json

import weylbranch as wb


def test_dimensions():
    assert wb.weyl_dim(wb.Weight("B", 4, [0, 0, 0, 1])) == 16
    assert wb.weyl_dim(wb.Weight("C", 4, [0, 1, 0, 0])) == 27
    assert wb.weyl_dim(wb.Weight("A", 5, [1, 0, 0, 0, 0])) == 6


def test_root_coords_and_dominance():
    w = wb.Weight("A", 3, [1, 0, 0])
    assert wb.to_root_coords(w) == [(3, 4), (1, 2), (1, 4)]
    a2 = wb.Weight("A", 2, [0, 1])
    assert wb.dominance_leq(a2, wb.Weight("A", 2, [2, 0]))
    assert wb.graph_automorphism_image(w).coeffs == [0, 0, 1]


def test_branch_tensor():
    e = wb.catalog(12)
    br = wb.branch_char0(e, wb.Weight("C", 4, [0, 1, 0, 0]))
    assert br.kappa == 3
    assert br.total_dim == 27
    assert sorted(f.dim for f in br.factors) == [9, 9, 9]
    ok, msg = wb.validate_embedding(e)
    assert ok, msg


def test_restriction():
    e = wb.catalog(7, {"n": 5, "l": 2})
    r = wb.restrict_weight(e, wb.Weight("D", 5, [0, 0, 0, 1, 1]))
    assert r.factors == [[0, 2], [0, 1, 1]]


def test_steinberg():
    factors = wb.steinberg_decompose(wb.Weight("B", 2, [5, 7]), 3)
    assert factors == [([2, 1], 0), ([1, 2], 1)]


def test_spin_count_and_congruence():
    assert wb.spin_decomposition_count("D", 6, [4, 4, 4]) == (4, 8)
    assert wb.congruence_holds("d", [], {"a": 2, "b": 1, "n": 5, "k": 2, "i": 0, "p": 5})
    assert wb.incompatibility_search(23, 12) is None


def test_permutations():
    z6 = wb.group("cyclic:6")
    assert wb.is_t_transitive(z6, 1)
    assert not wb.is_t_transitive(z6, 2)
    assert wb.orbits_on_k_subsets(z6, 2) == [6, 6, 3]
    m11 = wb.group("m11")
    assert wb.is_t_transitive(m11, 4)


def test_verify_spin_table():
    report = json.loads(wb.verify_table_json(wb.data_dir() + "/tables/spin.tbl"))
    assert report["fail_count"] == 0
    assert report["pass_count"] == len(report["rows"])


def test_manifest():
    manifest = json.loads(wb.catalog_manifest_json())
    assert len(manifest["entries"]) == 21
