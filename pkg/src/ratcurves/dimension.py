"""Dimension formulas for the loci M(a, e), M_E and Hom_k(P^1, M)."""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import ParamError, require_in_range


@dataclass(frozen=True)
class DimensionReport:
    dim: int
    expected: int
    excess: int

    def __post_init__(self):
        if self.excess != self.dim - self.expected:
            raise ValueError(
                f"excess {self.excess} != dim {self.dim} - expected {self.expected}"
            )

    @classmethod
    def of(cls, dim, expected):
        return cls(dim, expected, dim - expected)


def expected_dim(g: int, k: int) -> int:
    """Expected dimension 2k + 3g - 3 of Hom_k(P^1, M)."""
    return 2 * k + 3 * g - 3


def dim_mae_raw(g: int, k: int, a: int, e: int) -> int:
    """The dimension polynomial evaluated without any range check."""
    return (2 * a - k + 2) * g + (3 * k - 3 * a - 1) - e * (2 * a - k - 2)


def dim_mae(g: int, k: int, a: int, e: int) -> int:
    require_in_range(k, a, e)
    return dim_mae_raw(g, k, a, e)


def dim_me(g: int, k: int) -> int:
    """Dimension of the equal-splitting locus M_E (even k only)."""
    if k < 2 or k % 2:
        raise ParamError(f"M_E exists only for even k ≥ 2 (got k={k})")
    return 2 * k + 3 * g - 3


def dim_excess(g: int, k: int, a: int, e: int) -> int:
    return dim_mae(g, k, a, e) - expected_dim(g, k)


def report_mae(g, k, a, e) -> DimensionReport:
    return DimensionReport.of(dim_mae(g, k, a, e), expected_dim(g, k))
