"""Published worked examples, re-run as executable fixtures.

Every fixture is a zero-argument function returning True/False; the
``examples`` CLI command and ``oracle.verify_paper_fixtures`` run them all.
"""

from __future__ import annotations

from .classifier import (
    ALMOST_NICE, MAE, MAX_DIM, ME, NICE, almost_nice_component, classify, covers_flag,
    is_component, nice_component, unobstructed_flag,
)
from .dimension import dim_excess, dim_mae, expected_dim
from .lattice import ParamError, PairAE, delta, enumerate_range, in_range, validate_params
from .mrc import MrcTarget, mrc_quotient
from .oracle import BoundaryCurves, VerificationReport, cross_check_region, region_r_geometric
from .plot import render_region
from .report import emit_inventory

FIXTURES = []


def fixture(name):
    def register(fn):
        FIXTURES.append((name, fn))
        return fn

    return register


def _dims(inv):
    return {(r.pair.a, r.pair.e) if r.pair else "ME": r.dim for r in inv.components}


# Lines, conics, cubics


@fixture("lines: one component of dimension 3g-1")
def _lines():
    return all(_dims(classify(g, 1)) == {(1, 0): 3 * g - 1} for g in range(2, 21)) and (
        enumerate_range(1) == [PairAE(1, 0)] and expected_dim(2, 1) == 5
    )


@fixture("conics: M_E of dim 3g+1 and M(2,0) of dim 4g-1")
def _conics():
    return enumerate_range(2) == [PairAE(2, 0)] and all(
        _dims(classify(g, 2)) == {"ME": 3 * g + 1, (2, 0): 4 * g - 1} for g in range(2, 21)
    )


@fixture("cubics: M(2,1) of dim 3g+3 and M(3,0) of dim 5g-1")
def _cubics():
    return enumerate_range(3) == [PairAE(2, 1), PairAE(3, 0)] and all(
        _dims(classify(g, 3)) == {(2, 1): 3 * g + 3, (3, 0): 5 * g - 1} for g in range(2, 21)
    )


# Low genus


@fixture("genus 2: two components, both of dimension 2k+3")
def _genus2():
    for k in range(2, 61):
        dims = _dims(classify(2, k))
        if len(dims) != 2 or set(dims.values()) != {2 * k + 3}:
            return False
    return True


@fixture("genus 2: M(k,0) is the almost nice component")
def _genus2_almost():
    return all(almost_nice_component(2, k) == PairAE(k, 0) for k in range(1, 61))


@fixture("genus 3: two components of dimensions 2k+6 and 3k+5, no almost nice one")
def _genus3():
    for k in range(2, 61):
        inv = classify(3, k)
        if sorted(r.dim for r in inv.components) != sorted([2 * k + 6, 3 * k + 5]):
            return False
        if almost_nice_component(3, k) is not None:
            return False
        nice = PairAE((k + 1) // 2, (k - 1) // 2)
        expected_region = {nice, PairAE(k, 0)} if k % 2 else {PairAE(k, 0)}
        if region_r_geometric(3, k) != expected_region:
            return False
    return almost_nice_component(3, 9) is None


@fixture("genus 4, 3 does not divide k: two components of dimensions 2k+9 and 4k+7")
def _genus4():
    for k in range(2, 61):
        if k % 3 == 0:
            continue
        inv = classify(4, k)
        if sorted(r.dim for r in inv.components) != sorted([2 * k + 9, 4 * k + 7]):
            return False
    return True


@fixture("genus 4, 3 divides k (k >= 6): extra almost nice component at (2k/3, 1)")
def _genus4_extra():
    for k in range(6, 61, 3):
        inv = classify(4, k)
        rec = inv.find(2 * k // 3, 1)
        if len(inv.components) != 3 or rec is None:
            return False
        if rec.dim != 2 * k + 9 or ALMOST_NICE not in rec.labels:
            return False
    return almost_nice_component(4, 6) == PairAE(4, 1)


@fixture("g even, k = g-1: nice and almost nice components coincide")
def _coincide():
    for g in range(2, 21, 2):
        k = g - 1
        inv = classify(g, k)
        both = [r for r in inv.components if {NICE, ALMOST_NICE} <= r.labels]
        if len(both) != 1:
            return False
    return almost_nice_component(4, 3) == PairAE(2, 1)


# Example g=6, k=15


@fixture("g=6, k=15: five components with dimensions 45, 45, 46, 53, 101")
def _ex1_components():
    inv = classify(6, 15)
    return (
        _dims(inv) == {(8, 7): 45, (9, 2): 45, (9, 1): 46, (10, 1): 53, (15, 0): 101}
        and inv.expected == 45
        and validate_params(6, 15).k == 15
        and in_range(15, 9, 2)
        and in_range(15, 15, 0)
        and dim_mae(6, 15, 10, 1) == 53
        and dim_mae(6, 15, 15, 0) == 101
        and dim_mae(6, 15, 9, 1) == 46
        and dim_excess(6, 15, 9, 2) == 0
        and is_component(6, 15, 9, 1)
        and {PairAE(8, 7), PairAE(9, 1), PairAE(9, 2), PairAE(10, 1), PairAE(15, 0)}
        <= set(enumerate_range(15))
        and region_r_geometric(6, 15) == set(inv.pairs)
    )


@fixture("g=6, k=15: nice M(8,7), almost nice M(9,2)")
def _ex1_labels():
    inv = classify(6, 15)
    return (
        nice_component(6, 15) == MAE(PairAE(8, 7))
        and almost_nice_component(6, 15) == PairAE(9, 2)
        and NICE in inv.find(8, 7).labels
        and ALMOST_NICE in inv.find(9, 2).labels
        and MAX_DIM in inv.find(15, 0).labels
        and unobstructed_flag(6, 15, MAE(PairAE(9, 2)))
        and covers_flag(6, 15, inv.find(8, 7))
        and not covers_flag(6, 15, inv.find(15, 0))
    )


@fixture("g=6, k=15: MRC of M(9,1) is J x A with A the image of Sym^3(C); others J")
def _ex1_mrc():
    inv = classify(6, 15)
    m = inv.find(9, 1).mrc
    if not (delta(15, 9, 1) == 3 and m.delta == 3 and m.target is MrcTarget.JAC_X_JAC):
        return False
    if m.surjective_or_dominant or "Sym^3" not in (m.image_note or ""):
        return False
    others = [r for r in inv.components if r.pair != PairAE(9, 1)]
    return all(r.mrc.target is MrcTarget.JAC and r.delta == 0 for r in others)


@fixture("g=6, k=15: reports and pictures show five components")
def _ex1_outputs():
    csv_rows = emit_inventory(classify(6, 15), "csv").splitlines()[1:]
    svg = render_region(6, 15, "svg")
    return len(csv_rows) == 5 and svg.count('class="point component') == 5


# Example g=7, k=61


@fixture("g=7, k=61: ten components")
def _ex2_components():
    inv = classify(7, 61)
    want = {(31, 30), (35, 2), (36, 2), (61, 0)} | {(a, 1) for a in range(35, 41)}
    return (
        {(p.a, p.e) for p in inv.pairs} == want
        and len(inv.components) == 10
        and is_component(7, 61, 36, 2)
        and len(region_r_geometric(7, 61)) == 10
        and cross_check_region(7, 61).passed
        and NICE in inv.find(31, 30).labels
    )


@fixture("g=7, k=61: MRC dominant onto J x J exactly for M(35,2), M(35..38,1)")
def _ex2_mrc():
    inv = classify(7, 61)
    dominant = {(35, 2)} | {(a, 1) for a in range(35, 39)}
    for r in inv.components:
        p = (r.pair.a, r.pair.e)
        if p in {(31, 30), (61, 0)}:
            if r.mrc.target is not MrcTarget.JAC:
                return False
        elif r.mrc.target is not MrcTarget.JAC_X_JAC:
            return False
        if (r.mrc.target is MrcTarget.JAC_X_JAC and r.mrc.surjective_or_dominant) != (
            p in dominant
        ):
            return False
    return mrc_quotient(7, 61, 35, 2).delta == 8


# Obstructed components


@fixture("g=10, k=33: M(18,1) has expected dimension 93, obstructed, non-reduced")
def _nonreduced():
    r = classify(10, 33).find(18, 1)
    return (
        r is not None
        and r.dim == r.expected == 93
        and not r.unobstructed_general_point
        and r.nonreduced_along
        and not unobstructed_flag(10, 33, MAE(PairAE(18, 1)))
    )


@fixture("curves of M_E cover M for every even k >= 2")
def _me_covers():
    return all(classify(g, k).find(me=True).covers_M for g in range(2, 11) for k in range(2, 41, 2))


@fixture("M(k,0) has dimension (k+2)g-1 and is the largest component")
def _max_dim():
    for g in range(2, 11):
        for k in range(1, 41):
            inv = classify(g, k)
            top = inv.find(k, 0)
            if top.dim != (k + 2) * g - 1 or any(r.dim > top.dim for r in inv.components):
                return False
    return True


@fixture("k = 2g-2: curve B is the horizontal line e = (2g-3)/2")
def _b_line():
    from fractions import Fraction

    for g in range(2, 12):
        curves = BoundaryCurves(g, 2 * g - 2)
        vals = {curves.curve_b(a) for a in range(g + 1, 2 * g - 1)}
        if vals and vals != {Fraction(2 * g - 3, 2)}:
            return False
    return True


@fixture("pictures: unique cell for k=1, two component cells for g=3, k=9")
def _pictures():
    def marked(text):
        rows = [ln.split("|", 1)[1] for ln in text.splitlines() if "|" in ln]
        return sum(sum(ch in "#NA*" for ch in row) for row in rows)

    return marked(render_region(2, 1, "ascii")) == 1 and marked(render_region(3, 9, "ascii")) == 2


@fixture("g < 2 is rejected")
def _reject():
    try:
        validate_params(1, 5)
    except ParamError as exc:
        return "g must be ≥ 2" in str(exc)
    return False


@fixture("even k: nice component is M_E")
def _even_nice():
    return nice_component(4, 6) == ME() and nice_component(2, 1) == MAE(PairAE(1, 0))


def run_fixtures() -> VerificationReport:
    report = VerificationReport()
    for name, fn in FIXTURES:
        try:
            ok = bool(fn())
            detail = ""
        except Exception as exc:  # a crashing fixture is a failing fixture
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        report.fixtures.append({"name": name, "passed": ok, "detail": detail})
    return report
