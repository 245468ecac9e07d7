"""Smoke tests for the python bindings: the main operations end to end."""

import json

import pytest

import latcode as lc


def test_field_arithmetic():
    f4 = lc.Field(4)
    assert f4.p == 2 and f4.e == 2
    assert f4.mul(2, 2) == 3  # x * x = x + 1 mod x^2+x+1
    f3 = lc.Field(3)
    assert f3.mul(2, 2) == 1
    with pytest.raises(ValueError):
        f3.inv(0)


def test_subspaces_and_enumeration():
    f2 = lc.Field(2)
    s = lc.rref(f2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]], 3)
    assert s.dim == 2
    assert s.rows == [[1, 0, 1], [0, 1, 1]]
    everything = lc.enumerate_subspaces(f2, 3)
    assert len(everything) == 16
    lines = lc.enumerate_subspaces(f2, 3, k=1)
    assert len(lines) == 7
    x, y = lines[0], lines[1]
    assert lc.subspace_distance(f2, x, y) == 2
    assert lc.subspace_sum(f2, x, x) == x
    with pytest.raises(lc.ResourceError):
        lc.enumerate_subspaces(f2, 3, budget=5)


def test_projective_lattice_and_properties():
    f2 = lc.Field(2)
    P = lc.build_projective_lattice(f2, 2)
    assert P.size == 5
    L = P.lattice
    assert lc.atoms(L) == [1, 2, 3]
    assert lc.is_modular(L).holds
    report = lc.is_distributive(L)
    assert not report.holds
    assert report.witness.kind == "M3"
    assert lc.verify_witness(L, report)
    assert lc.is_geometric(L).holds
    assert not lc.is_uniquely_atomistic(L).holds
    assert json.loads(report.to_json())["property"] == "distributive"


def test_lattice_json_round_trip():
    L = lc.boolean_lattice(3)
    text = L.to_json()
    R = lc.FiniteLattice.from_json(text)
    assert R.to_json() == text
    assert lc.whitney_numbers(R) == [1, 3, 3, 1]
    assert "digraph" in lc.hasse_export(R)


def test_partition_code_pipeline():
    f2 = lc.Field(2)
    basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    code = lc.build_partition_code(f2, 3, basis, [[0], [1], [2]])
    assert code.size == 8
    assert lc.verify_linear(code).all_pass()
    assert lc.verify_closed_under_intersection(code).all_pass()
    withf = lc.canonical_complement(code)
    assert lc.verify_complement(withf).all_pass()
    bound = lc.one_dim_bound_check(withf)
    assert bound.count_dim1 == 3 and bound.ok
    round_trip = lc.SubspaceCode.from_json(withf.to_json())
    assert round_trip.size == 8

    small = lc.build_partition_code(f2, 3, basis[:2], [[0, 1]])
    with pytest.raises(lc.PreconditionError):
        lc.canonical_complement(small)


def test_complement_search():
    f2 = lc.Field(2)
    result = lc.search_complement(f2, 2, lc.enumerate_subspaces(f2, 2))
    assert result.complement is None


def test_survey_and_theorems():
    P = lc.build_projective_lattice(lc.Field(2), 2)
    survey = lc.enumerate_sublattices(P.lattice, "exhaustive")
    assert survey.max_distributive_size == 4
    t2 = lc.verify_T2(P.lattice, survey)
    assert t2.ok() and t2.bound == 4

    rep = lc.run_theorem_suite("TL1", samples=30)
    assert rep.ok()
    assert rep.instances > 23
    parsed = json.loads(rep.to_json())
    assert parsed["suite"] == "TL1" and parsed["failures"] == []

    with pytest.raises(ValueError):
        lc.run_theorem_suite("BOGUS")


def test_unique_decomposition():
    b3 = lc.boolean_lattice(3)
    dec = lc.unique_decomposition(b3)
    assert dec.atom_index == [1, 2, 4]
    assert dec.decomposition[5] == [0, 2]
    with pytest.raises(lc.PreconditionError):
        lc.unique_decomposition(lc.m3())
