"""Evaluation and incremental maintenance of f(x) = x^T A x."""

from __future__ import annotations

import numpy as np

from .graph import Graph

FEAS_TOL = 1e-9
RECOMPUTE_EVERY = 1024


def is_feasible(x: np.ndarray, k: float, tol: float = FEAS_TOL) -> bool:
    """Membership in the capped simplex {sum x = k, 0 <= x <= 1}."""
    x = np.asarray(x)
    return bool(x.min(initial=0.0) >= -tol and x.max(initial=0.0) <= 1 + tol and abs(x.sum() - k) <= tol)


class ObjectiveCache:
    """Current point x with cached y = A x and f = x^T A x.

    Updates are pushed along the adjacency lists of the changed coordinates
    and every ``recompute_every`` updates the cache is rebuilt from scratch to
    bound floating point drift.
    """

    def __init__(self, g: Graph, x, recompute_every: int = RECOMPUTE_EVERY):
        x = np.array(x, dtype=np.float64)
        if x.shape != (g.n,):
            raise ValueError(f"point has length {x.size}, graph has {g.n} vertices")
        self.g = g
        self.x = x
        self.recompute_every = recompute_every
        self.refresh()

    def refresh(self):
        self.y = self.g.adjacency @ self.x
        self.f = float(self.x @ self.y)
        self.stale_counter = 0
        return self

    def copy(self) -> ObjectiveCache:
        new = object.__new__(ObjectiveCache)
        new.g, new.recompute_every, new.stale_counter = self.g, self.recompute_every, self.stale_counter
        new.x, new.y, new.f = self.x.copy(), self.y.copy(), self.f
        return new


def full_evaluate(g: Graph, x, recompute_every: int = RECOMPUTE_EVERY) -> ObjectiveCache:
    return ObjectiveCache(g, x, recompute_every)


def _check_coords(n: int, J: np.ndarray):
    if J.size and (J.min() < 0 or J.max() >= n):
        raise IndexError("coordinate out of range")


def apply_update(cache: ObjectiveCache, J, new_values) -> ObjectiveCache:
    """Set x[J] = new_values and update y and f in place.

    With d = new - old on J, y gains A d and
    f gains 2 y_old[J].d + d^T A d, where (A d)[J] supplies the last term.
    """
    J = np.asarray(J, dtype=np.int64)
    u = np.asarray(new_values, dtype=np.float64)
    if J.shape != u.shape:
        raise ValueError("coordinate set and values differ in length")
    _check_coords(cache.g.n, J)

    d = u - cache.x[J]
    moved = d != 0
    cache.stale_counter += 1
    if moved.any():
        Jm, dm = J[moved], d[moved]
        push = cache.g.adjacency[Jm].T @ dm
        cache.f += 2.0 * float(cache.y[Jm] @ dm) + float(dm @ push[Jm])
        cache.y += push
        cache.x[Jm] = u[moved]
    if cache.stale_counter >= cache.recompute_every:
        cache.refresh()
    return cache


def partial_gradient(cache: ObjectiveCache, J) -> np.ndarray:
    """Components of grad f = 2 A x on the coordinates J."""
    J = np.asarray(J, dtype=np.int64)
    _check_coords(cache.g.n, J)
    return 2.0 * cache.y[J]
