import echelonps as ep


def test_q_values():
    assert ep.gabrielov_q(2, 2) == "1/12"
    assert ep.gabrielov_q(6, 6) == "1/10059033600"


def test_divide_s_combination():
    ech = ep.gabrielov_echelon(10)
    g2 = ep.gabrielov_gk(2, 10)
    res = ep.member(ech, g2, 6)
    assert res["member"] is True

    z = {"vars": ["x", "y", "z"], "prec": 10, "terms": [{"e": [0, 0, 1], "c": "1"}]}
    assert ep.member(ech, z, 4)["member"] is False
    assert ep.member(ech, z, 4, oracle=True)["member"] is False


def test_divide_result_shape():
    ech = ep.gabrielov_echelon(10)
    g2 = ep.gabrielov_gk(2, 10)
    res = ep.divide(ech, g2)
    assert len(res["quotients"]) == 3
    assert res["remainder"]["terms"]  # g2's support lies in the complement
    assert res["min_witness"] is None


def test_enlarge_covers_target():
    ech = ep.gabrielov_echelon(10)
    st = ep.enlarge(ech, {"monomial": [2, 0, 2]}, reduce=True, max_rounds=100)
    assert st["status"] == "covered"
    assert len(st["basis"]) == 4


def test_gk_closed_vs_algorithmic():
    assert ep.gabrielov_gk(3, 12) == ep.gabrielov_gk(3, 12, algorithmic=True)


def test_relations_census():
    ech = ep.gabrielov_echelon(10)
    rep = ep.relations(ech, 5)
    assert rep["artifact_threshold"] == 4
    if rep["min_order"] is not None:
        assert rep["min_order"] >= rep["artifact_threshold"]


def test_e_series():
    e = ep.gabrielov_e(6, 12)
    coeffs = {tuple(t["e"]): t["c"] for t in e["terms"]}
    assert coeffs[(2, 0, 2)] == "1"
    assert coeffs[(5, 0, 7)] == "3/22"


def test_schema_error():
    import pytest

    with pytest.raises(ValueError):
        ep.divide({"vars": ["x"]}, {"vars": ["x"]})
