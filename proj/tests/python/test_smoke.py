import json

import pytest

import pathres as pr


def test_generators():
    g = pr.gens(4, 2)
    assert len(g) == 6
    assert [1, 1, 1, 1] in g
    assert pr.lcm_of([[1, 2, 0], [0, 2, 1]]) == [1, 2, 1]


def test_complex_surface():
    X = pr.complex_ydn(4, 2)
    assert X.n == 4
    assert X.d == 2
    assert X.size() == 17
    assert X.top_dim() == 2
    assert X.f_vector() == [6, 8, 3]
    assert pr.count_cells(4, 2) == 17

    cid = X.cell_id([[1, 2], [3, 4]])
    assert cid >= 0
    assert X.rows(cid) == [[1, 2], [3, 4]]
    assert X.dim_of(cid) == 2
    assert X.label(cid) == [1, 2, 2, 1]
    assert all(X.dim_of(f) == 1 for f, _ in X.boundary(cid))

    sub = X.subcomplex_leq([1, 2, 2, 1])
    assert cid in sub

    doc = json.loads(X.to_json())
    assert doc["version"] == "ydn-v1"
    assert len(doc["cells"]) == 17


def test_labels_and_strings():
    assert pr.covered_vertices([1, 2, 3], 1) == [1, 2, 3, 4]
    assert pr.cell_label([[1], [2]], 3) == [2, 2, 0]
    assert pr.vertex_realization([[1], [4]], 4) == [1, 1, 1, 1]
    assert pr.encode_string([[1, 2], [3, 4]], 4) == "110011"
    assert pr.decode_string("110011", 4, 2) == [[1, 2], [3, 4]]
    stats = pr.cell_stats([[1, 2], [3, 4]])
    assert stats == {
        "A": 4,
        "N": 2,
        "N2": 0,
        "critical_inducing": True,
        "B": 2,
        "C": 6,
        "D": -1,
    }


def test_matchings():
    ind = pr.ind_path_matching(5)
    assert len(ind["faces"]) == 13
    assert ind["critical"] == [ind["faces"].index([2, 5])]

    cov = pr.cov_path_matching(5)
    assert cov["faces"] == [[], [2], [3]]

    X = pr.complex_ydn(4, 2)
    groups = pr.fiber_groups(X)
    assert len(groups) == 15
    m = pr.assemble_matching(X)
    assert len(m.pairs) == 2
    assert len(m.critical) == 13
    mb = pr.morse_boundary(X, m)
    assert sorted(mb.keys()) == m.critical
    doc = json.loads(pr.matching_to_json(m))
    assert doc["version"] == "morse-v1"


def test_betti_tables():
    expect = {(1, 4): 6, (2, 5): 6, (3, 6): 1}
    for method in ("closed-form", "strings", "morse", "oracle"):
        assert pr.betti_table(4, 2, method) == expect
    assert pr.closed_form_betti(4, 2, 2, 5) == 6
    assert pr.count_by_BC(4, 2, 2, 4) == 6
    assert pr.count_strings(4, 2, 2, 2, 5) == 6

    tb = pr.taylor_betti_path(4, 1)
    assert tb[(1, (1, 1, 0, 0))] == 1
    assert tb[(2, (0, 1, 1, 1))] == 1

    doc = json.loads(pr.format_betti_table(4, 2, "closed-form", "json"))
    assert doc["version"] == "betti-v1"
    assert doc["entries"][0] == {"i": 1, "j": 4, "beta": 6}


def test_verification():
    assert pr.verify_lattice_path(4, 2) == (True, 6, 6)
    assert pr.verify_lattice_cycle(4, 2) == (True, 9, 9)
    ok, alphas, failures = pr.verify_supports(4, 2)
    assert ok and alphas == 20 and failures == []
    assert pr.hull_membership([1, 1, 1, 1], [[2, 2, 0, 0], [0, 0, 2, 2]])


def test_errors_map_to_python_exceptions():
    with pytest.raises(pr.InputError):
        pr.decode_string("10", 3, 2)
    assert issubclass(pr.InputError, ValueError)
    with pytest.raises(pr.GuardError):
        pr.complex_ydn(20, 10)
    assert issubclass(pr.GuardError, RuntimeError)
    with pytest.raises(ValueError):
        pr.cell_label([[1], [1]], 3)
