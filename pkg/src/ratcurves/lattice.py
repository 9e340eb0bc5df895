"""Integer lattice of (a, e) pairs indexing the loci M(a, e).

A degree-k rational curve on M corresponds to a rank-2 bundle on P^1 x C
whose canonical sub-line-bundle has type (a, -e).  The admissible pairs are

    {(a, e) : k >= a > k/2,  (k - a)/(2a - k) >= e > 0}  U  {(k, 0)}

All comparisons against the rational bound are done by cross-multiplication
(2a - k > 0 on that branch), so nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass


class ParamError(ValueError):
    """Raised for a (g, k) outside the admissible domain."""


class RangeError(ValueError):
    """Raised when an (a, e) pair is outside the admissible range."""


@dataclass(frozen=True, order=True)
class Params:
    g: int
    k: int

    def __post_init__(self):
        _check_params(self.g, self.k)


@dataclass(frozen=True, order=True)
class PairAE:
    a: int
    e: int

    def __iter__(self):
        return iter((self.a, self.e))

    def __str__(self):
        return f"({self.a},{self.e})"


def _check_params(g, k):
    if isinstance(g, bool) or not isinstance(g, int):
        raise ParamError(f"g must be an integer, got {g!r}")
    if isinstance(k, bool) or not isinstance(k, int):
        raise ParamError(f"k must be an integer, got {k!r}")
    if g < 2:
        raise ParamError(f"g must be ≥ 2 (got g={g})")
    if k < 1:
        raise ParamError(f"k must be ≥ 1 (got k={k})")


def validate_params(g: int, k: int) -> Params:
    return Params(g, k)


def in_range(k: int, a: int, e: int) -> bool:
    """True iff (a, e) is an admissible pair for degree k."""
    if a == k and e == 0:
        return True
    width = 2 * a - k
    return a <= k and width > 0 and e >= 1 and (k - a) >= e * width


def delta(k: int, a: int, e: int) -> int:
    """Length of the 0-cycle Z: (k - a) - e(2a - k).

    Total on purpose; out-of-range pairs may give negative values.
    """
    return (k - a) - e * (2 * a - k)


def max_e(k: int, a: int) -> int:
    """Largest e with (a, e) admissible, or 0 if only e = 0 (or nothing) fits."""
    width = 2 * a - k
    if width <= 0 or a > k:
        return 0
    return (k - a) // width


def enumerate_range(k: int) -> list[PairAE]:
    """All admissible pairs for degree k, sorted by (a, e)."""
    if k < 1:
        raise ParamError(f"k must be ≥ 1 (got k={k})")
    pairs = []
    for a in range(k // 2 + 1, k + 1):
        if a == k:
            pairs.append(PairAE(k, 0))
        pairs.extend(PairAE(a, e) for e in range(1, max_e(k, a) + 1))
    return pairs


def require_in_range(k, a, e):
    if not in_range(k, a, e):
        raise RangeError(f"(a,e)=({a},{e}) is outside the admissible range for k={k}")
