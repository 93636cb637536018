"""Colored HOMFLY polynomials of torus links, exactly."""

from .combinatorics import Partition, PartitionTuple
from .errors import TorusHomflyError
from .hecke_oracle import BraidWord, braid_pipeline, colored_homfly_braid
from .lmv import extract_g, g_table, run_lmv
from .polyring import ExactLaurent, RationalFunction
from .torus import ColoredInvariant, TorusLinkSpec, colored_homfly_torus, homfly

__all__ = [
    "BraidWord",
    "ColoredInvariant",
    "ExactLaurent",
    "Partition",
    "PartitionTuple",
    "RationalFunction",
    "TorusHomflyError",
    "TorusLinkSpec",
    "braid_pipeline",
    "colored_homfly_braid",
    "colored_homfly_torus",
    "extract_g",
    "g_table",
    "homfly",
    "run_lmv",
]
