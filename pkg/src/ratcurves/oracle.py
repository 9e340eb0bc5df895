"""Second route to the component locus, via the boundary curves A and B.

The classifier tests dim M(a, e) >= 2k + 3g - 3 pointwise.  Here the region R
is rebuilt from its geometric description instead:

* the odd-degree nice point ((k+1)/2, (k-1)/2),
* the vertical line a = k/2 + 1 (even k <= 2g - 2),
* for 2a >= k + 3, the lattice points under both A (delta >= 0) and B
  (dimension >= expected), found as integer floors of the two curves,
* the point (k, 0).

Curve values are exact fractions; membership uses floor division only.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .dimension import dim_mae_raw, expected_dim
from .lattice import PairAE, delta, enumerate_range, in_range, validate_params


@dataclass(frozen=True)
class BoundaryCurves:
    g: int
    k: int

    def curve_a(self, a) -> Optional[Fraction]:
        """e = (k - a)/(2a - k), defined for 2a > k."""
        den = 2 * Fraction(a) - self.k
        if den <= 0:
            return None
        return (self.k - Fraction(a)) / den

    def curve_b(self, a) -> Optional[Fraction]:
        """e = (2g-3)/2 + (2g-2-k)/(2(2a-k-2)); None on the asymptote 2a = k+2."""
        g, k = self.g, self.k
        den = 2 * (2 * Fraction(a) - k - 2)
        if den == 0:
            return None
        return Fraction(2 * g - 3, 2) + Fraction(2 * g - 2 - k) / den

    @property
    def degenerate_b(self) -> bool:
        """For k = 2g - 2 the hyperbola B collapses to the line e = (2g-3)/2."""
        return self.k == 2 * self.g - 2

    def floor_a(self, a: int) -> int:
        return (self.k - a) // (2 * a - self.k)

    def floor_b(self, a: int) -> int:
        # exact floor of curve B for 2a - k - 2 > 0
        g, k = self.g, self.k
        d = 2 * a - k - 2
        return (d * (2 * g - 3) + (2 * g - 2 - k)) // (2 * d)

    def on_b(self, a: int, e: int) -> bool:
        d = 2 * a - self.k - 2
        return 2 * e * d == (2 * self.g - 3) * d + (2 * self.g - 2 - self.k)

    @property
    def intersections(self) -> tuple:
        g, k = self.g, self.k
        return (
            (Fraction(k * g, 2 * (g - 1)), Fraction(g, 2) - 1),
            (Fraction(k + 1, 2), Fraction(k - 1, 2)),
        )

    @property
    def b_axis_point(self) -> Fraction:
        g, k = self.g, self.k
        return Fraction((k + 1) * (g - 1) - 1, 2 * g - 3)


@dataclass
class VerificationReport:
    grid: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)
    identity_failures: list = field(default_factory=list)
    fixtures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            not self.mismatches
            and not self.identity_failures
            and all(f["passed"] for f in self.fixtures)
        )

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.grid.extend(other.grid)
        self.mismatches.extend(other.mismatches)
        self.identity_failures.extend(other.identity_failures)
        self.fixtures.extend(other.fixtures)
        return self

    def sort(self):
        self.grid.sort()
        self.mismatches.sort(key=lambda m: (m["cell"], m["pair"]))
        self.identity_failures.sort(key=lambda f: (f["cell"], f["identity"], f["detail"]))
        return self


def region_r_geometric(g: int, k: int) -> set[PairAE]:
    validate_params(g, k)
    curves = BoundaryCurves(g, k)
    region = {PairAE(k, 0)}
    if k % 2:
        region.add(PairAE((k + 1) // 2, (k - 1) // 2))
    elif k <= 2 * g - 2:
        a = k // 2 + 1
        if a <= k:
            # on this line the dimension does not depend on e
            region.update(PairAE(a, e) for e in range(1, curves.floor_a(a) + 1))
    for a in range((k + 3 + 1) // 2, k + 1):
        top = min(curves.floor_a(a), curves.floor_b(a))
        region.update(PairAE(a, e) for e in range(1, top + 1))
    return region


def _direct_region(g, k):
    expected = expected_dim(g, k)
    return {p for p in enumerate_range(k) if dim_mae_raw(g, k, p.a, p.e) >= expected}


def cross_check_region(g: int, k: int) -> VerificationReport:
    geometric = region_r_geometric(g, k)
    direct = _direct_region(g, k)
    mismatches = [
        {
            "cell": (g, k),
            "pair": (p.a, p.e),
            "direct_verdict": p in direct,
            "geometric_verdict": p in geometric,
        }
        for p in sorted(geometric ^ direct)
    ]
    return VerificationReport(grid=[(g, k)], mismatches=mismatches)


def check_identities(g: int, k: int) -> VerificationReport:
    validate_params(g, k)
    failures = []

    def fail(identity, detail):
        failures.append({"cell": (g, k), "identity": identity, "detail": detail})

    pairs = enumerate_range(k)
    expected = expected_dim(g, k)
    curves = BoundaryCurves(g, k)

    def dim(a, e):
        return dim_mae_raw(g, k, a, e)

    for p, q in combinations(pairs, 2):
        if p.a == q.a and dim(p.a, q.e) - dim(p.a, p.e) != (2 * p.a - k - 2) * (p.e - q.e):
            fail("fixed_a_difference", f"{p} vs {q}")
        if p.e == q.e and dim(q.a, p.e) - dim(p.a, p.e) != (2 * g - 2 * p.e - 3) * (q.a - p.a):
            fail("fixed_e_difference", f"{p} vs {q}")

    for p in pairs:
        if 2 * p.a == k + 2:
            continue
        if (dim(p.a, p.e) == expected) != curves.on_b(p.a, p.e):
            fail("b_level_set", f"{p}")

    for a, e in curves.intersections:
        if delta(k, a, e) != 0:
            fail("intersection_on_a", f"({a},{e})")
        if dim_mae_raw(g, k, a, e) != expected:
            fail("intersection_on_b", f"({a},{e})")
        if not curves.degenerate_b and curves.curve_b(a) not in (None, e):
            fail("intersection_curve_b", f"({a},{e})")
        if curves.curve_a(a) is not None and curves.curve_a(a) != e:
            fail("intersection_curve_a", f"({a},{e})")

    a0 = curves.b_axis_point
    if curves.curve_b(a0) is not None and curves.curve_b(a0) != 0:
        fail("b_axis_point", f"a={a0}")

    if dim(k, 0) != (k + 2) * g - 1:
        fail("max_component_dim", f"dim(k,0)={dim(k, 0)}")

    if not in_range(k, k, 0):
        fail("range_contains_k0", "")

    return VerificationReport(grid=[], identity_failures=failures)


def verify_cell(cell) -> VerificationReport:
    g, k = cell
    return cross_check_region(g, k).merge(check_identities(g, k))


def verify_grid(g_values, k_values, workers: int = 1) -> VerificationReport:
    """Run both checks over every (g, k); the report order is by (g, k) regardless of workers."""
    cells = [(g, k) for g in g_values for k in k_values]
    if not cells:
        raise ValueError("empty verification grid")
    for g, k in cells:
        validate_params(g, k)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(verify_cell, cells, chunksize=64))
    else:
        parts = [verify_cell(c) for c in cells]
    report = VerificationReport()
    for part in parts:
        report.merge(part)
    return report.sort()


def verify_paper_fixtures() -> VerificationReport:
    """Re-run every published worked example; one entry per fixture in ``fixtures``."""
    from .worked_examples import run_fixtures

    return run_fixtures()
