from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ratcurves.lattice import PairAE
from ratcurves.oracle import (
    BoundaryCurves, VerificationReport, check_identities, cross_check_region,
    region_r_geometric, verify_cell, verify_grid, verify_paper_fixtures,
)


def pairs(*items):
    return {PairAE(a, e) for a, e in items}


def test_region_6_15():
    assert region_r_geometric(6, 15) == pairs((8, 7), (9, 1), (9, 2), (10, 1), (15, 0))


@pytest.mark.parametrize("k", range(2, 40))
def test_region_genus_3(k):
    want = pairs((k, 0))
    if k % 2:
        want |= pairs(((k + 1) // 2, (k - 1) // 2))
    assert region_r_geometric(3, k) == want


def test_region_4_6_uses_vertical_line():
    assert region_r_geometric(4, 6) == pairs((4, 1), (6, 0))


@pytest.mark.parametrize("g, k, size", [(6, 15, 5), (2, 9, 2), (7, 61, 10), (10, 33, 8)])
def test_cross_check(g, k, size):
    report = cross_check_region(g, k)
    assert report.passed and not report.mismatches
    assert len(region_r_geometric(g, k)) == size


def test_region_2_9():
    assert region_r_geometric(2, 9) == pairs((5, 4), (9, 0))


def test_curve_a_passes_through_nice_point():
    c = BoundaryCurves(6, 15)
    assert c.curve_a(8) == 7
    assert c.curve_a(Fraction(15, 2)) is None


def test_curve_b_values():
    c = BoundaryCurves(6, 15)
    assert c.curve_b(9) == 2
    assert c.curve_b(Fraction(17, 2)) is None
    assert c.curve_b(c.b_axis_point) == 0
    assert c.intersections == ((Fraction(9), Fraction(2)), (Fraction(8), Fraction(7)))


def test_curve_b_degenerates_for_k_2g_minus_2():
    c = BoundaryCurves(4, 6)
    assert c.degenerate_b
    assert {c.curve_b(a) for a in (5, 6, 7, Fraction(11, 2))} == {Fraction(5, 2)}
    assert check_identities(4, 6).passed


def test_floor_b_is_exact_floor():
    for g in range(2, 12):
        for k in range(1, 60):
            c = BoundaryCurves(g, k)
            for a in range((k + 4) // 2, k + 1):
                fb = c.floor_b(a)
                assert fb <= c.curve_b(a) < fb + 1


def test_identity_fixture_9_2():
    c = BoundaryCurves(6, 15)
    assert c.on_b(9, 2)
    assert check_identities(6, 15).passed


def test_report_passed_reflects_contents():
    r = VerificationReport()
    assert r.passed
    r.mismatches.append({"cell": (2, 1), "pair": (1, 0), "direct_verdict": True,
                         "geometric_verdict": False})
    assert not r.passed
    r2 = VerificationReport(fixtures=[{"name": "x", "passed": False, "detail": ""}])
    assert not r2.passed


def test_grid_report_canonical_order():
    serial = verify_grid(range(2, 6), range(1, 30))
    parallel = verify_grid(range(2, 6), range(1, 30), workers=2)
    assert serial.grid == parallel.grid == sorted(serial.grid)
    assert serial.passed and parallel.passed


def test_verify_grid_rejects_empty():
    with pytest.raises(ValueError):
        verify_grid([], range(1, 3))


@settings(max_examples=200)
@given(st.integers(2, 200), st.integers(1, 400))
def test_oracle_equivalence_beyond_default_grid(g, k):
    assert verify_cell((g, k)).passed


def test_paper_fixture_suite_passes():
    report = verify_paper_fixtures()
    assert report.fixtures and report.passed, [f for f in report.fixtures if not f["passed"]]
