"""Shortest token sliding between independent sets of a spider graph."""

from __future__ import annotations

from .assignment import LegPartition, TargetAssignment, leg_partition, mstar, relabel_legs, target_assignment
from .errors import (
    InfiniteCost,
    InvalidGraph,
    InvalidSequence,
    InvalidTokenSet,
    NonTermination,
    NotANeighbor,
    NotASpider,
    NotATree,
    NotAnEdge,
    NotIndependent,
    ParseError,
    PreconditionViolated,
    ResourceExceeded,
    SizeMismatch,
    SpiderSlideError,
    TokenMissing,
)
from .feasibility import (
    INFINITY,
    CostTable,
    Reconfigurability,
    cost,
    cost_table,
    extract_move_sequence,
    is_reconfigurable,
    rigid_tokens,
)
from .graph import (
    EMPTY,
    AuxiliaryGraph,
    DetourCount,
    Move,
    SequenceCheck,
    SlideSequence,
    SpiderGraph,
    Tree,
    auxiliary_graph,
    build_spider,
    build_tree,
    concat,
    detour_count,
    dist,
    is_independent,
    is_valid_sequence,
    path,
    replay,
    reverse,
    spider_from_legs,
    subtree_token_count,
    token_set,
)
from .io import Instance, format_instance, format_sequence, parse_instance, parse_sequence
from .oracle import (
    OracleResult,
    ShapeSpec,
    brute_force_mstar,
    enumerate_instances,
    independent_sets,
    leg_scaling_instance,
    oracle_distances,
    oracle_shortest,
    oracle_token_move,
)
from .ordering import BlockingSets, blocking_sets, token_ordering
from .planner import (
    CASE_TAGS,
    SolveReport,
    construct_balanced,
    construct_case1,
    construct_case2,
    construct_case3,
    solve,
)

__version__ = "0.1.0"
