"""Exact lozenge-tiling counts of dented hexagons and the shuffling ratio identities."""

from .errors import DomainError, InexactDivisionError, RegionError, ShuffleError
from .exact import QLaurentRatio, QPolynomial, evaluate, q_int
from .regions import (
    CellGrid,
    DentedHexagon,
    DentSet,
    Tiling,
    Trapezoid,
    build_cells,
    is_centrally_symmetric,
    is_k_symmetric,
    reflect_set,
    split_along_diagonal,
    validate_hexagon,
)

__version__ = "0.1.0"
