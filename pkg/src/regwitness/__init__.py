"""Exact regularity of binomial edge ideals of small graphs, with bound checking."""

from .graph import Graph, GraphError, from_graph6, parse_edges, to_graph6
from .families import CompositionSpec, FanSpec, fixture, generate
from .poly import BudgetExceeded, DEFAULT_FIELD, buchberger, build_bei, build_gbei, initial_ideal
from .invariants import clique_report, eta, gamma, invariant_report, iv, lip
from .oracle import RegularityResult, betti_table, regularity
from .theorems import REGISTRY, THEOREM_IDS, BoundCheck, check, check_all, compatible_map_verify, decomposition_check
from .enumeration import canonical_form, enumerate_connected
from .harness import SweepConfig, SweepReport, run_sweep

__version__ = "0.1.0"
