from __future__ import annotations

from dataclasses import replace

import pytest

from evacshuffle import PuncturedTableau, Rectangle
from evacshuffle.enumeration import enumerate_box_first, enumerate_genomic, many_components_family, staircase_family
from evacshuffle.local import PIERI, local_esh
from evacshuffle.monodromy import (
    InvariantViolation,
    OrbitVerdict,
    check_conjecture,
    curve_invariants,
    genomic_from_move,
    is_fixed_point,
    omega,
    omega_i,
    omega_i_orbits,
    orbit_decomposition,
    phi1,
    phi2,
)
from evacshuffle.sweep import iter_rectangles, iter_triples
from evacshuffle.tableau import Partition

VERTICAL_PIERI = ["..1", ".2", ".3", "X", "4"]
WORKED_INPUT = ["......111", "...X1122", "...1223", "...334", "..44", "235"]
FIG_SMALL = ((2, 2, 1), (3, 1, 1), (3, 2), Rectangle(4, 4))


def triples(max_n: int, rows: int = 99, cols: int = 99):
    for rect in iter_rectangles(max_n):
        if rect.rows <= rows and rect.cols <= cols:
            for alpha, beta, gamma in iter_triples(rect):
                yield alpha, beta, gamma, rect


def test_vertical_pieri_orbit():
    start = PuncturedTableau.parse(VERTICAL_PIERI)
    orbit = [start]
    while True:
        nxt = omega(orbit[-1])
        if nxt == start:
            break
        orbit.append(nxt)
    assert [pt.rows() for pt in orbit] == [
        ["..1", ".2", ".3", "X", "4"],
        ["..1", ".X", ".2", "3", "4"],
        ["..X", ".1", ".2", "3", "4"],
    ]
    flags = is_fixed_point(start)
    assert flags == (False, False, False) and flags.consistent


def test_pieri_case_is_a_single_cycle():
    rect = Rectangle(3, 4)
    alpha, beta, gamma = Partition((3, 1)), Partition((3,)), Partition((3, 1))
    report = orbit_decomposition(alpha, beta, gamma, rect)
    assert report.sizes == [3]
    # rows counted from the top: the box moves from the left end of row i to the left end of row i+1 mod r
    rows = sorted(pt.box_cell for pt in report.ordering)
    for pt in report.ordering:
        k = rows.index(pt.box_cell)
        assert omega(pt).box_cell == rows[(k + 1) % len(rows)]
    assert omega_i(1, report.ordering[0]) == omega(report.ordering[0])


def test_fixed_points_of_many_components_family():
    alpha, beta, gamma, rect = many_components_family(3)
    for pt in enumerate_box_first(alpha, beta, gamma, rect):
        assert omega(pt) == pt
        assert is_fixed_point(pt) == (True, True, True)


def test_fixed_point_flags_agree_exhaustively():
    for alpha, beta, gamma, rect in triples(7):
        for pt in enumerate_box_first(alpha, beta, gamma, rect):
            assert is_fixed_point(pt).consistent


def test_worked_example_pieri_move_generates_genomic_tableau():
    pt = PuncturedTableau.parse(WORKED_INPUT)
    (move,) = [m for m in local_esh(pt)[1].moves if m.kind == PIERI]
    g = genomic_from_move(move)
    assert g.family == 2
    assert g.marked == {(3, 4), (6, 1)}
    assert g.base[(3, 4)] == 2 and g.base[(6, 1)] == 2
    assert g.is_valid()
    assert phi1(pt) == [g]
    assert len(phi2(pt)) == 2


def test_genomic_from_adjacent_move_is_rejected():
    pt = PuncturedTableau.parse(WORKED_INPUT)
    vert = local_esh(pt)[1].moves[0]
    with pytest.raises(ValueError):
        genomic_from_move(vert)


def test_phi_maps_are_bijections_exhaustively():
    for alpha, beta, gamma, rect in triples(7):
        ordering = enumerate_box_first(alpha, beta, gamma, rect)
        want = sorted(g.key() for gs in enumerate_genomic(alpha, beta, gamma, rect).values() for g in gs)
        assert sorted(g.key() for pt in ordering for g in phi1(pt)) == want
        assert sorted(g.key() for pt in ordering for g in phi2(pt)) == want


def test_omega_i_factorization_and_orbit_counts():
    for alpha, beta, gamma, rect in triples(7):
        ordering = enumerate_box_first(alpha, beta, gamma, rect)
        genomic = enumerate_genomic(alpha, beta, gamma, rect)
        for pt in ordering:
            x = pt
            for i in range(1, len(beta) + 1):
                x = omega_i(i, x)
            assert x == omega(pt)
        for i in range(1, len(beta) + 1):
            excess = sum(len(c) - 1 for c in omega_i_orbits(i, ordering))
            assert excess == len(genomic[i])


def test_omega_i_rejects_bad_index():
    pt = PuncturedTableau.parse(WORKED_INPUT)
    with pytest.raises(ValueError):
        omega_i(0, pt)
    with pytest.raises(ValueError):
        omega_i(len(pt.beta) + 1, pt)


def test_figure_small_triple():
    report = orbit_decomposition(*FIG_SMALL)
    assert report.table() == [(1, 0, 0), (1, 0, 0)]
    assert report.fixed_points == (0, 1)
    verdicts = check_conjecture(*FIG_SMALL, report=report)
    assert all(v.passes and v.sum_strict_ok for v in verdicts)


def test_staircase_three_invariants():
    inv = curve_invariants(*staircase_family(3))
    assert (inv.lr_count, inv.k_count, inv.chi, inv.eta, inv.genus) == (12, 13, -1, 1, 2)
    assert inv.k_by_family == (6, 4, 3)
    assert inv.half_ramification == 13
    assert inv.to_json()["half_ramification_note"] == "conditional on smoothness"


def test_many_components_invariants():
    inv = curve_invariants(*many_components_family(3))
    assert (inv.lr_count, inv.eta, inv.k_count, inv.chi, inv.rlength) == (2, 2, 0, 2, 0)
    assert inv.genus is None and "genus" not in inv.to_json()


def test_invariant_relations_exhaustively():
    for alpha, beta, gamma, rect in triples(7):
        inv = curve_invariants(alpha, beta, gamma, rect)
        assert inv.chi == inv.lr_count - inv.k_count
        assert inv.rlength == inv.lr_count - inv.eta
        assert inv.k_count >= inv.rlength
        assert inv.k_count % 2 == inv.sign
        if inv.rlength == 0:
            assert inv.k_count == 0
        assert (inv.genus is not None) == (inv.eta == 1)


def test_two_row_bound_up_to_four_by_five():
    checked = 0
    for alpha, beta, gamma, rect in triples(9, rows=4, cols=5):
        if len(beta) != 2:
            continue
        inv = curve_invariants(alpha, beta, gamma, rect)
        assert inv.two_row_checked
        checked += 1
    assert checked > 100


def test_checker_emits_counterexample_structure():
    report = orbit_decomposition(*staircase_family(3))
    (orbit,) = report.orbits
    starved = replace(report, orbits=(replace(orbit, k1=orbit.k1[:3]),))
    (verdict,) = check_conjecture(*staircase_family(3), report=starved)
    assert not verdict.k1_ok and not verdict.passes
    data = verdict.to_json()
    assert data["size"] == 12 and data["k1"] == 3 and data["k1_ok"] is False
    assert len(data["members"]) == 12 and all(isinstance(r, list) for r in data["members"])
    two_row = ((1,), (4, 3), (3,), Rectangle(3, 4))
    rep = orbit_decomposition(*two_row)
    assert rep.sizes == [2]
    bad = replace(rep, orbits=tuple(replace(o, k1=()) for o in rep.orbits))
    with pytest.raises(InvariantViolation):
        curve_invariants(*two_row, report=bad)


def test_verdict_arithmetic():
    assert OrbitVerdict(1, 0, 0).passes and OrbitVerdict(1, 0, 0).sum_strict_ok
    v = OrbitVerdict(4, 3, 2)
    assert v.k1_ok and not v.k2_ok and v.sum_ok and v.sum_strict_ok
