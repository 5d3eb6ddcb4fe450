"""q-random coordinate constrained descent for the densest k-subgraph relaxation.

Two variants share one loop. ``rcc1`` solves a proximal quadratic model on
the sampled coordinates, ``rcc2`` a linear one whose solutions are vertices
of the slice (at most one fractional coordinate), which drives iterates to
integer points.
"""

from __future__ import annotations

import logging
from collections import deque
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .graph import DENSE_PAIR_LIMIT, Graph, induced_edge_count
from .objective import ObjectiveCache, RECOMPUTE_EVERY, apply_update, full_evaluate, partial_gradient
from .subproblem import proximal_weights, solve_linear, solve_quadratic, project_capped_simplex

log = logging.getLogger(__name__)

ALGORITHMS = ("rcc1", "rcc2")
INITS = ("random_simplex", "uniform_k_over_n")

MAX_ITERS = "max_iters"
INTEGER_POINT = "integer_point_found"
STALLED = "objective_stalled"


@dataclass(frozen=True)
class SolverConfig:
    algorithm: str = "rcc2"
    k: int = 10
    q: int = 2
    max_iters: int = 1000
    max_restarts: int = 1
    obj_tol: float = 1e-7
    stall_window: int | None = None  # None: ceil(n / q) iterations
    int_tol: float = 1e-6
    seed: int = 0
    init: str | None = None  # None: random_simplex up to 2^13 vertices, uniform above
    weight_mode: str = "degree"
    weight_value: float = 1.0
    weight_floor: float = 1e-6
    recompute_every: int = RECOMPUTE_EVERY
    stop_on_integer: bool = True
    stop_on_certificate: bool = True

    def validate(self, n: int) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {self.algorithm!r}")
        if not 3 <= self.k <= n - 2:
            raise ValueError(f"k must satisfy 3 <= k <= n-2 = {n - 2}, got k={self.k}")
        if not 2 <= self.q <= n:
            raise ValueError(f"q must satisfy 2 <= q <= n = {n}, got q={self.q}")
        if self.init is not None and self.init not in INITS:
            raise ValueError(f"init must be one of {INITS}, got {self.init!r}")
        if self.max_iters < 0 or self.max_restarts < 1:
            raise ValueError("need max_iters >= 0 and max_restarts >= 1")

    def resolved_stall_window(self, n: int) -> int:
        if self.stall_window is not None:
            return max(1, self.stall_window)
        return -(-n // self.q)

    def resolved_init(self, n: int) -> str:
        if self.init is not None:
            return self.init
        return "random_simplex" if n <= DENSE_PAIR_LIMIT else "uniform_k_over_n"


@dataclass
class RunReport:
    best_bound: float
    best_integer_value: float | None
    best_vertex_set: list[int] | None
    iterations_total: int
    restarts_used: int
    wall_time_seconds: float
    termination: list[str] = field(default_factory=list)
    is_clique_certified: bool = False
    best_restart: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def initial_point(n: int, k: int, init: str, rng: np.random.Generator) -> np.ndarray:
    if init == "uniform_k_over_n":
        return np.full(n, k / n)
    if init == "random_simplex":
        return project_capped_simplex(rng.random(n), k)
    raise ValueError(f"unknown init {init!r}")


class CoordinateSampler:
    """Uniform q-subsets of range(n) by partial Fisher-Yates shuffles.

    The permutation buffer is kept between draws, which is fine because each
    draw re-randomizes its first q slots from the whole range.
    """

    def __init__(self, n: int, q: int, rng: np.random.Generator):
        if not 1 <= q <= n:
            raise ValueError("need 1 <= q <= n")
        self.n, self.q, self.rng = n, q, rng
        self.perm = np.arange(n)
        self._low = np.arange(q)

    def draw(self) -> np.ndarray:
        perm = self.perm
        picks = self.rng.integers(self._low, self.n).tolist()
        for i, j in enumerate(picks):
            perm[i], perm[j] = perm[j], perm[i]
        return perm[:self.q].copy()


def sample_coordinates(n: int, q: int, rng: np.random.Generator) -> np.ndarray:
    return CoordinateSampler(n, q, rng).draw()


def is_integer_point(x: np.ndarray, k: int, tol: float) -> bool:
    rx = np.rint(x)
    return bool(np.max(np.abs(x - rx)) <= tol and int(rx.sum()) == k)


def round_to_integer(g: Graph, x: np.ndarray, k: int) -> np.ndarray:
    """The k largest coordinates; ties by larger degree, then smaller index."""
    order = np.lexsort((np.arange(g.n), -g.degrees, -np.asarray(x)))
    return np.sort(order[:k])


def percent_deviation(best_value: float, found_value: float) -> float:
    if best_value <= 0:
        raise ValueError("best value must be positive")
    return (best_value - found_value) / best_value * 100.0


@dataclass
class SingleRun:
    x: np.ndarray
    termination: str
    iterations: int
    best_bound: float
    f: float


def run_single(g: Graph, cfg: SolverConfig, x0, rng: np.random.Generator | None = None,
               weights: np.ndarray | None = None,
               callback: Callable[[int, ObjectiveCache], None] | None = None) -> SingleRun:
    """One descent from ``x0`` until an iteration budget or stopping rule.

    ``callback(t, cache)`` is invoked after every iteration ``t`` (1-based).
    """
    cfg.validate(g.n)
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    rcc1 = cfg.algorithm == "rcc1"
    if rcc1 and weights is None:
        weights = proximal_weights(g, cfg.weight_mode, cfg.weight_floor, cfg.weight_value)

    cache = full_evaluate(g, x0, cfg.recompute_every)
    sampler = CoordinateSampler(g.n, cfg.q, rng)
    best = cache.f
    if cfg.stop_on_integer and is_integer_point(cache.x, cfg.k, cfg.int_tol):
        return SingleRun(cache.x, INTEGER_POINT, 0, best, cache.f)

    window = cfg.resolved_stall_window(g.n)
    history = deque([cache.f], maxlen=window + 1)
    reason = MAX_ITERS
    t = 0
    while t < cfg.max_iters:
        t += 1
        J = sampler.draw()
        xJ = cache.x[J]
        c = partial_gradient(cache, J)
        r = float(xJ.sum())
        if rcc1:
            u = solve_quadratic(c, weights[J], xJ, r).u
        else:
            u = solve_linear(c, r).u
        apply_update(cache, J, u)
        best = max(best, cache.f)
        if callback is not None:
            callback(t, cache)
        if cfg.stop_on_integer and is_integer_point(cache.x, cfg.k, cfg.int_tol):
            reason = INTEGER_POINT
            break
        if rcc1:
            # compare against the objective one window (about an epoch) back
            history.append(cache.f)
            if len(history) == window + 1 and abs(history[-1] - history[0]) < cfg.obj_tol:
                reason = STALLED
                break
    return SingleRun(cache.x, reason, t, best, cache.f)


def restart_rng(seed: int, restart: int) -> np.random.Generator:
    return np.random.default_rng([seed, restart])


def run(g: Graph, cfg: SolverConfig) -> RunReport:
    """Restarted descent with best-bound and best-integer tracking.

    Stops early once an integer solution reaches k(k-1), which certifies a
    k-clique and hence optimality.
    """
    cfg.validate(g.n)
    t0 = time.perf_counter()
    init = cfg.resolved_init(g.n)
    weights = None
    if cfg.algorithm == "rcc1":
        weights = proximal_weights(g, cfg.weight_mode, cfg.weight_floor, cfg.weight_value)
    clique_value = cfg.k * (cfg.k - 1)

    best_bound = -np.inf
    best_int, best_set, best_restart = None, None, None
    terminations = []
    iters = 0
    restarts = 0
    certified = False
    for restart in range(cfg.max_restarts):
        rng = restart_rng(cfg.seed, restart)
        x0 = initial_point(g.n, cfg.k, init, rng)
        res = run_single(g, cfg, x0, rng, weights)
        restarts += 1
        iters += res.iterations
        terminations.append(res.termination)
        best_bound = max(best_bound, res.best_bound)

        if res.termination == INTEGER_POINT:
            S = np.sort(np.flatnonzero(np.rint(res.x) == 1))
        else:
            S = round_to_integer(g, res.x, cfg.k)
        value = 2 * induced_edge_count(g, S)
        if best_int is None or value > best_int:
            best_int, best_set, best_restart = value, [int(v) for v in S], restart
        log.debug("restart %d: %s after %d iterations, bound %.4f, integer %d",
                  restart, res.termination, res.iterations, res.best_bound, value)
        if best_int == clique_value:
            certified = True
            if cfg.stop_on_certificate:
                break

    return RunReport(
        best_bound=float(best_bound),
        best_integer_value=None if best_int is None else float(best_int),
        best_vertex_set=best_set,
        iterations_total=iters,
        restarts_used=restarts,
        wall_time_seconds=time.perf_counter() - t0,
        termination=terminations,
        is_clique_certified=certified,
        best_restart=best_restart,
    )
