"""Components of the space of rational curves on the moduli space of rank-2 bundles."""

__version__ = "0.1.0"

from .classifier import (
    ME,
    MAE,
    ComponentRecord,
    Inventory,
    almost_nice_component,
    classify,
    covers_flag,
    is_component,
    nice_component,
    nonreduced_flag,
    unobstructed_flag,
)
from .dimension import DimensionReport, dim_excess, dim_mae, dim_me, expected_dim
from .lattice import (
    PairAE,
    ParamError,
    Params,
    RangeError,
    delta,
    enumerate_range,
    in_range,
    validate_params,
)
from .mrc import MrcResult, MrcTarget, mrc_quotient
from .oracle import (
    BoundaryCurves,
    VerificationReport,
    check_identities,
    cross_check_region,
    region_r_geometric,
    verify_grid,
    verify_paper_fixtures,
)
from .plot import render_region
from .report import emit_inventory, emit_sweep, parse_inventory
