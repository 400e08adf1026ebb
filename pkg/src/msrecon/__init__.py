"""Reconfiguration of minimum s-t separators under token sliding and token jumping."""

from .canonical import CanonicalPaths, Configuration, canonical_paths, locate_tokens, windows
from .errors import InstanceError, ResourceLimit
from .generators import (
    PlainGraph,
    brute_vc,
    gen_cross_composition,
    gen_random_instance,
    gen_random_layered,
    gen_vc_gadget,
)
from .graph_core import (
    DisjointPaths,
    Graph,
    Instance,
    format_instance,
    is_separator,
    max_disjoint_paths,
    min_separator_size,
    parse_instance,
)
from .kernel_ell import KernelOutcome, kernelize
from .preprocess import ReducedInstance, preprocess_tj
from .separator_check import CrossingEdgeIndex, is_config_separator, unskippable_edges, unskippable_vertices
from .solvers import (
    Move,
    PathDecomposition,
    ReconfigSequence,
    oracle_bfs,
    pathdecomp_from_solution,
    solve_tj_feasible,
    solve_tj_shortest,
    solve_ts_shortest,
)
from .verify import Verdict, verify_sequence

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
