"""Exact canonical Tutte polynomials over minors systems."""

from .delta_matroid import DeltaMatroid, br2, br3, penrose2, penrose_poly
from .embedded import PartitionedRibbon, SurfaceGraph
from .errors import (
    CapExceeded,
    HopfTutteError,
    NonUniformSelector,
    ParseError,
    SelectorIncompatible,
    UnknownSuite,
)
from .graph import Multigraph, VertexPartition, cycle_matroid, tutte_graph
from .harness import SuiteReport, run_suite, suite_names
from .matroid import Matroid, MatroidPerspective, lv_tutte, tutte_matroid
from .minor_system import (
    MinorObject,
    Selector,
    alpha_bruteforce,
    alpha_compute,
    alpha_delcon,
    alpha_statesum,
    canonical_selectors,
    check_uniform,
    get_system,
    system_tags,
)
from .poly import Polynomial, const, var, variables
from .records import load, parse_record
from .ribbon import RibbonGraph
from .ribbon_polys import krushkal, partitioned_br, ribbon_br2, ribbon_br3

__all__ = [
    "CapExceeded",
    "HopfTutteError",
    "NonUniformSelector",
    "ParseError",
    "SelectorIncompatible",
    "UnknownSuite",
    "MinorObject",
    "Selector",
    "alpha_bruteforce",
    "alpha_compute",
    "alpha_delcon",
    "alpha_statesum",
    "canonical_selectors",
    "check_uniform",
    "get_system",
    "system_tags",
    "DeltaMatroid",
    "br2",
    "br3",
    "penrose2",
    "penrose_poly",
    "PartitionedRibbon",
    "SurfaceGraph",
    "Multigraph",
    "VertexPartition",
    "cycle_matroid",
    "tutte_graph",
    "SuiteReport",
    "run_suite",
    "suite_names",
    "Matroid",
    "MatroidPerspective",
    "lv_tutte",
    "tutte_matroid",
    "Polynomial",
    "const",
    "var",
    "variables",
    "load",
    "parse_record",
    "RibbonGraph",
    "krushkal",
    "partitioned_br",
    "ribbon_br2",
    "ribbon_br3",
]
