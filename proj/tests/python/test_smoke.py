"""Smoke tests for the python bindings."""

import json

import pytest

import seshadri as ss


def test_surface_table():
    s = ss.surface_params(6)
    assert s.group_name == "Z3xZ3"
    assert s.gamma == 9
    assert s.mu == 3
    assert s.sing_mults == [3, 3, 3]
    assert ss.surface_params(7).sing_mults == [2, 3, 6]
    with pytest.raises(Exception):
        ss.surface_params(8)


def test_lattice_ops():
    L = ss.DivisorClass(5, 11)
    assert ss.self_intersection(L) == 110
    assert ss.is_ample(L)
    assert not ss.is_ample(ss.DivisorClass(0, 1))
    psi, phi = ss.fibre_classes(ss.surface_params(6))
    assert (psi.a, psi.b) == (3, 0)
    assert (phi.a, phi.b) == (0, 3)
    assert ss.intersect(L, psi) == 33
    assert ss.is_effective_vertical(2, ss.surface_params(2))
    assert not ss.is_effective_vertical(1, ss.surface_params(2))


def test_exact_values():
    root110 = ss.ExactValue.surd(1, 110)
    assert root110.to_decimal(2) == "10.49"
    assert ss.ExactValue.surd("93/100", 110).to_decimal(2) == "9.75"
    assert ss.ExactValue.rational(220, 21).to_decimal(2) == "10.48"
    assert ss.ExactValue.rational(220, 21) > ss.ExactValue.surd("93/100", 110)
    assert ss.ExactValue.rational(220, 21) < root110
    assert ss.ExactValue.parse("sqrt(110)") == root110
    assert ss.ExactValue.surd(1, 4).is_rational


def test_closed_form():
    e = ss.epsilon_one(6, 5, 11)
    assert e.kind == ss.EstimateKind.BoundedBelow
    assert e.branch == "type6(2)"
    assert e.lower.to_decimal(2) == "9.75"
    assert e.upper.to_decimal(0) == "15"

    assert ss.epsilon_one(6, 5, 27).value == "15"
    assert ss.epsilon_one(1, 3, 1).value == "2"
    assert ss.epsilon_min(7, 4, 9).value == "4"
    gap = ss.epsilon_min(6, 5, 11)
    assert gap.kind == ss.EstimateKind.UnknownWithBound

    with pytest.raises(Exception):
        ss.epsilon_min(1, 0, 3)

    feasible, violations = ss.delta_feasibility("93/100", "vg")
    assert feasible and violations == []
    feasible, violations = ss.delta_feasibility("94/100", "vg")
    assert not feasible and violations == [4, 5]
    sup, m = ss.max_feasible_delta("vg")
    assert (sup, m) == ("7/8", 4)


def test_point_classes():
    e = ss.epsilon_at_point(7, 4, 9, 6)
    assert e.value == "4"
    e = ss.epsilon_at_point(2, 1, 5, "arbitrary")
    assert e.value == "2"
    e = ss.epsilon_at_point(6, 5, 11, "very-general")
    assert e.kind == ss.EstimateKind.BoundedBelow


def test_oracle():
    rep = ss.certify_point(7, 4, 9, 6, 100)
    assert rep.lower == rep.upper == ss.ExactValue.rational(4)
    rows = ss.cross_check_region(1, 4, 4, 60)
    assert rows and all(r.passed for r in rows)
    parsed = json.loads(rows[0].to_json())
    assert parsed["verdict"] == "PASS"


def test_pell():
    assert ss.pell_fundamental(110) == (2, 21)
    assert ss.fsst_lower_bound(110) == ss.ExactValue.rational(220, 21)
    assert ss.exc_membership(110, 2, 21, 10, 1)
    assert not ss.exc_membership(110, 2, 21, 21, 2)
    cmp = ss.compare_bounds(6, 5, 11)
    assert cmp["pell_applicable"]
    assert cmp["which_larger"] == ss.Ordering.LT
    assert not ss.compare_bounds(6, 1, 2)["pell_applicable"]
