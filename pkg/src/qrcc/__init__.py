"""Densest k-subgraph heuristics by q-random coordinate constrained descent."""

from .graph import (Graph, GeneratorSpec, GraphFormatError, from_edges, generate, induced_edge_count,
                    load_edge_list, load_kcluster, validate)
from .objective import ObjectiveCache, apply_update, full_evaluate, is_feasible, partial_gradient
from .oracle import OracleResult, OracleTooLarge, exhaustive_dks, greedy_peel
from .solver import (RunReport, SolverConfig, initial_point, percent_deviation, round_to_integer, run,
                     run_single, sample_coordinates)
from .subproblem import (SubproblemInfeasible, SubproblemResult, project_capped_simplex, proximal_weights,
                         solve_linear, solve_quadratic)

__version__ = "0.1.0"
