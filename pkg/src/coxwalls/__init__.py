"""Walls, edge paths and geodesic tracking in Coxeter groups."""

__version__ = "0.1.0"

from .core import INFINITY, Caps, CoxeterSystem, Element
from .errors import (
    CapExceededError,
    CoxwallsError,
    InfeasibleError,
    InvalidInputError,
    PrecisionError,
    UndeterminedCrossingError,
)
from .formats import bundled_system, load_system, parse_path, parse_system, serialize_path, serialize_system
from .paths import (
    EdgePath,
    QuasiGeodesicParams,
    bracket_report,
    defect,
    delete_pair,
    geodesic,
    is_geodesic,
    is_quasi_geodesic,
    path,
    quasi_geodesic_constants,
    tracking_distance,
    wall_sequence,
)
from .systems import a1_a2, a2, affine_a2, b2, dihedral, grid, infinite_dihedral
from .tracking import (
    double_tracking_bound,
    geodesic_approximation,
    periodic_path,
    project_vertex,
    spiral_path,
    straighten,
    tracking_correspondence,
)
from .walls import (
    Crossing,
    Side,
    Wall,
    crosses,
    dilworth_partition,
    estimate_parallel_wall_constant,
    max_antichain,
    side_of,
    wall,
    walls_separating,
)
