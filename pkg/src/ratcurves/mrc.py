"""MRC fibration of M(a, e), read off from the length of the 0-cycle.

The locus M(a, e) fibres, with rational fibres, over Pic^{-e}(C) when
delta = 0, and maps to Pic^{-e}(C) x Pic^{delta}(C) otherwise; the second
factor is reached through Sym^delta(C) -> Pic^delta(C), which is onto only
when delta >= g.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .lattice import delta as _delta
from .lattice import require_in_range


class MrcTarget(str, Enum):
    JAC = "JAC"
    JAC_X_JAC = "JAC_X_JAC"


@dataclass(frozen=True)
class MrcResult:
    delta: int
    target: MrcTarget
    surjective_or_dominant: bool
    pic_degrees: tuple
    image_note: Optional[str] = None

    def __post_init__(self):
        if self.delta < 0:
            raise ValueError(f"delta must be non-negative, got {self.delta}")
        if (self.target is MrcTarget.JAC) != (self.delta == 0):
            raise ValueError(f"target {self.target.value} inconsistent with delta={self.delta}")

    @property
    def label(self) -> str:
        e, d = self.pic_degrees
        if self.target is MrcTarget.JAC:
            return f"Pic^{e}(C)"
        return f"Pic^{e}(C) x Pic^{d}(C)"


def image_note(d: int) -> str:
    return f"J x A_{d}, A_{d} = image of Sym^{d}(C) in Pic^{d}(C)"


def mrc_quotient(g: int, k: int, a: int, e: int) -> MrcResult:
    require_in_range(k, a, e)
    d = _delta(k, a, e)
    if d == 0:
        return MrcResult(0, MrcTarget.JAC, True, (-e, 0))
    dominant = d >= g
    return MrcResult(
        d,
        MrcTarget.JAC_X_JAC,
        dominant,
        (-e, d),
        None if dominant else image_note(d),
    )
