"""Irreducible components of Hom_k(P^1, M).

The closure of M(a, e) is a component exactly when (a, e) is admissible and
dim M(a, e) is at least the expected dimension.  Together with the nice
component (closure of M_E when k is even) these are all the components.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional, Union

from . import dimension as dims
from .lattice import PairAE, Params, enumerate_range, in_range, validate_params
from .mrc import MrcResult, mrc_quotient

NICE = "nice"
ALMOST_NICE = "almost_nice"
MAX_DIM = "max_dim"
LABELS = (ALMOST_NICE, MAX_DIM, NICE)


@dataclass(frozen=True)
class ME:
    """Closure of the equal-splitting locus M_E (even k)."""

    def __str__(self):
        return "ME"


@dataclass(frozen=True)
class MAE:
    pair: PairAE

    @property
    def a(self):
        return self.pair.a

    @property
    def e(self):
        return self.pair.e

    def __str__(self):
        return f"MAE{self.pair}"


ComponentKind = Union[ME, MAE]


@dataclass(frozen=True)
class ComponentRecord:
    kind: ComponentKind
    dim: int
    expected: int
    delta: Optional[int]
    labels: frozenset
    unobstructed_general_point: bool
    nonreduced_along: bool
    covers_M: bool
    mrc: Optional[MrcResult]

    def __post_init__(self):
        if self.dim < self.expected:
            raise ValueError(f"{self.kind}: dim {self.dim} below expected {self.expected}")
        if isinstance(self.kind, ME):
            if self.dim != self.expected:
                raise ValueError("M_E must have the expected dimension")
            if self.delta is not None or self.mrc is not None:
                raise ValueError("M_E carries no delta or MRC data")
        unknown = set(self.labels) - set(LABELS)
        if unknown:
            raise ValueError(f"unknown labels {sorted(unknown)}")

    @property
    def excess(self) -> int:
        return self.dim - self.expected

    @property
    def pair(self) -> Optional[PairAE]:
        return self.kind.pair if isinstance(self.kind, MAE) else None

    def sort_key(self):
        if isinstance(self.kind, ME):
            return (0, 0, 0)
        return (1, self.kind.a, self.kind.e)


@dataclass(frozen=True)
class Inventory:
    params: Params
    components: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not self.components:
            raise ValueError("an inventory has at least one component")
        for label in (NICE, ALMOST_NICE):
            n = sum(label in r.labels for r in self.components)
            if n > 1:
                raise ValueError(f"{n} records labelled {label}")

    @property
    def g(self):
        return self.params.g

    @property
    def k(self):
        return self.params.k

    @property
    def expected(self):
        return dims.expected_dim(self.g, self.k)

    @property
    def pairs(self) -> list[PairAE]:
        return [r.pair for r in self.components if r.pair is not None]

    @property
    def warnings(self) -> tuple:
        g, k = self.g, self.k
        if k % 2 and k < g - 1:
            return (
                f"k={k} is odd and below g-1={g - 1}: the nice component is reported "
                "unobstructed, although the obstruction criterion for M(a,e) "
                "components is only stated for k ≥ g-1",
            )
        return ()

    def find(self, a=None, e=None, *, me=False) -> Optional[ComponentRecord]:
        for r in self.components:
            if me and isinstance(r.kind, ME):
                return r
            if not me and r.pair == PairAE(a, e):
                return r
        return None


def nice_component(g: int, k: int) -> ComponentKind:
    validate_params(g, k)
    if k % 2:
        return MAE(PairAE((k + 1) // 2, (k - 1) // 2))
    return ME()


def almost_nice_component(g: int, k: int) -> Optional[PairAE]:
    validate_params(g, k)
    if g % 2 or k % (g - 1):
        return None
    # g even and (g-1) | k: 2(g-1) | kg since g/2 is an integer
    return PairAE(k * g // (2 * (g - 1)), g // 2 - 1)


def is_component(g: int, k: int, a: int, e: int) -> bool:
    validate_params(g, k)
    if not in_range(k, a, e):
        return False
    return dims.dim_mae(g, k, a, e) >= dims.expected_dim(g, k)


def _is_special(g, k, kind):
    return kind == nice_component(g, k) or (
        isinstance(kind, MAE) and kind.pair == almost_nice_component(g, k)
    )


def unobstructed_flag(g: int, k: int, kind: ComponentKind) -> bool:
    # The nice component is unobstructed for every k, including odd k < g-1.
    return _is_special(g, k, kind)


def nonreduced_flag(g: int, k: int, record: ComponentRecord) -> bool:
    return (
        isinstance(record.kind, MAE)
        and record.dim == record.expected
        and not _is_special(g, k, record.kind)
    )


def covers_flag(g: int, k: int, record: ComponentRecord) -> bool:
    kind = record.kind
    if isinstance(kind, ME):
        return True
    if k % 2 and k >= g - 1 and kind == nice_component(g, k):
        return True
    return kind.pair == almost_nice_component(g, k)


def _labels(g, k, kind):
    labels = set()
    if kind == nice_component(g, k):
        labels.add(NICE)
    if isinstance(kind, MAE):
        if kind.pair == almost_nice_component(g, k):
            labels.add(ALMOST_NICE)
        if kind.pair == PairAE(k, 0):
            labels.add(MAX_DIM)
    return frozenset(labels)


def _record(g, k, kind):
    expected = dims.expected_dim(g, k)
    if isinstance(kind, ME):
        dim, d, mrc = dims.dim_me(g, k), None, None
    else:
        dim = dims.dim_mae(g, k, kind.a, kind.e)
        mrc = mrc_quotient(g, k, kind.a, kind.e)
        d = mrc.delta
    draft = ComponentRecord(
        kind=kind,
        dim=dim,
        expected=expected,
        delta=d,
        labels=_labels(g, k, kind),
        unobstructed_general_point=unobstructed_flag(g, k, kind),
        nonreduced_along=False,
        covers_M=False,
        mrc=mrc,
    )
    return replace(
        draft,
        nonreduced_along=nonreduced_flag(g, k, draft),
        covers_M=covers_flag(g, k, draft),
    )


def classify(g: int, k: int) -> Inventory:
    """Full component inventory of Hom_k(P^1, M): M_E first, then M(a,e) by (a,e)."""
    params = validate_params(g, k)
    expected = dims.expected_dim(g, k)
    kinds: list[ComponentKind] = [ME()] if k % 2 == 0 else []
    kinds += [
        MAE(p)
        for p in enumerate_range(k)
        if dims.dim_mae(g, k, p.a, p.e) >= expected
    ]
    return Inventory(params, tuple(_record(g, k, kind) for kind in kinds))
