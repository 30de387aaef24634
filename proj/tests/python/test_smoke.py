"""Smoke tests for the python bindings."""

import pytest

import newton_ehrhart as ne


def test_partition_roundtrip():
    assert ne.make_partition([2, 1], 3) == [2, 1, 0]
    with pytest.raises(ValueError):
        ne.make_partition([1, 2], 3)


def test_dominance_and_sequence():
    assert ne.dominates([2, 2, 0], [2, 1, 1])
    assert not ne.dominates([2, 1, 1], [2, 2, 0])
    seq = ne.dominating_sequence(1, [2, 1], 3)
    assert seq["seq"] == [[2, 1, 0], [2, 2, 0], [2, 2, 1], [2, 2, 2]]
    assert seq["N"] == 3
    assert seq["b"] == [0, 1, 3]


def test_expansions():
    s = ne.schur_expansion([2, 1], 3)
    assert s[(1, 1, 1)] == 2
    assert len(s) == 7
    g = ne.grothendieck_expansion(1, [2, 1], 3)
    assert g[(2, 2, 2)] == -1
    assert ne.skew_strict_fillings_count(2, [2, 1], [2, 2, 2], 3) == 11


def test_polytope_queries():
    assert ne.count_lattice_points("schur", [2, 1], 3) == 7
    assert ne.count_lattice_points("grothendieck", [2, 1], 3, h=1) == 17
    assert ne.contains("schur", [2, 1], 3, [1, 1, 1])
    assert not ne.contains("schur", [2, 1], 3, [3, 0, 0])
    vs = ne.vertices("grothendieck", [3, 0], 2, h=2)
    assert sorted(map(tuple, vs)) == [(0, 3), (2, 3), (3, 0), (3, 2)]
    fs = ne.facets("schur", [2, 1, 0], 3)
    assert len(fs) == 6


def test_hstar_and_tables():
    h = ne.hstar("schur", [2, 1], 3)
    assert h["hstar"] == [1, 4, 1]
    assert h["palindromic"] and h["unimodal"]
    assert h["gorenstein_index"] == 1
    assert ne.hstar("grothendieck", [2, 0, 0], 3, h=1)["hstar"] == [1, 12, 12, 1]
    assert ne.hstar_two_row_family(5) == [1, 46, 136, 46, 1]
    assert ne.hstar_single_row(4) == [1, 31, 31, 1]
    assert ne.bounded_compositions(4, 1) == 19


def test_ehrhart_polynomial():
    coeffs = ne.ehrhart_polynomial("schur", [3], 3)
    assert coeffs == [(1, 1), (9, 2), (9, 2)]


def test_reflexivity():
    rep = ne.is_reflexive("grothendieck", [4, 4, 0], 3, h=1)
    assert rep["verdict"] == "true"
    assert rep["interior_points"] == [[3, 3, 3]]
    ok, form = ne.schur_reflexive([2, 1, 1], 4)
    assert ok and form == "(2,1,...,1,0)"
    ok, _ = ne.grothendieck_reflexive(1, [3, 0], 2)
    assert not ok
    ok, _ = ne.grothendieck_reflexive(2, [3, 0], 2)
    assert ok
    assert ne.schur_gorenstein([1, 1], 4)[0]


def test_idp_and_snp():
    assert ne.idp_brute("schur", [2, 1], 3, tmax=3)["ok"]
    parts = ne.decompose_schur([2, 1], 3, 3, [2, 4, 3])
    assert len(parts) == 3
    assert [sum(c) for c in zip(*parts)] == [2, 4, 3]
    for part in parts:
        assert ne.contains("schur", [2, 1], 3, part)
    assert ne.decompose_grothendieck(1, [1, 0], 2, 2, [2, 2]) == [[1, 1], [1, 1]]
    assert ne.snp_check("grothendieck", [2, 1], 3, h=2)


def test_degenerate_raises():
    with pytest.raises(ValueError):
        ne.hstar("schur", [2, 2], 2)
