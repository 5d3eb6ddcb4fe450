"""Restricted subproblems solved at every iteration.

Both problems maximize over u in [0, 1]^q with sum(u) = r:

* linear:    sum c_j (u_j - x_j)                                (continuous knapsack)
* quadratic: sum c_j (u_j - x_j) - sum L_j / 2 (u_j - x_j)^2    (water-filling)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

SUM_TOL = 1e-9
WEIGHT_MODES = ("degree", "sqrt_degree", "constant")


class SubproblemInfeasible(ValueError):
    """The budget r lies outside [0, q]."""


@dataclass
class SubproblemResult:
    u: np.ndarray
    dual: float = float("nan")
    n_lower: int = 0
    n_upper: int = 0


def _budget(r: float, q: int) -> float:
    if r < -SUM_TOL or r > q + SUM_TOL:
        raise SubproblemInfeasible(f"budget {r!r} outside [0, {q}]")
    r = min(max(r, 0.0), float(q))
    # integer budgets keep integer iterates integer
    rr = round(r)
    if abs(r - rr) <= 1e-12:
        r = float(rr)
    return r


def solve_linear(c, r: float, x=None) -> SubproblemResult:
    """Greedy continuous knapsack.

    Coordinates are filled to 1 in order of decreasing ``c`` (ties by
    position), the next one receives the fractional remainder. ``x`` only
    shifts the objective by a constant and is accepted for symmetry.
    """
    c = np.asarray(c, dtype=np.float64)
    q = c.size
    r = _budget(r, q)
    order = np.lexsort((np.arange(q), -c))
    u = np.empty(q)
    u[order] = np.clip(r - np.arange(q), 0.0, 1.0)
    return SubproblemResult(u, n_lower=int(np.count_nonzero(u == 0)), n_upper=int(np.count_nonzero(u == 1)))


def _clip_at(lam, c, L, x):
    return np.clip(x + (c - lam) / L, 0.0, 1.0)


def solve_quadratic(c, L, x, r: float, sum_tol: float = 1e-10) -> SubproblemResult:
    """Separable concave QP over the capped simplex slice by dual bisection.

    u(lam) = clip(x + (c - lam) / L, 0, 1) is non-increasing in lam; the
    multiplier is bracketed and bisected until sum(u) hits r, then solved in
    closed form on the detected active set.
    """
    c = np.asarray(c, dtype=np.float64)
    L = np.asarray(L, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    q = c.size
    if np.any(L <= 0):
        raise ValueError("proximal weights must be positive")
    r = _budget(r, q)

    lo = float(np.min(c - L * (2.0 - x)))  # every u_j = 1
    hi = float(np.max(c + L * (x + 1.0)))  # every u_j = 0
    lam = 0.5 * (lo + hi)
    u = _clip_at(lam, c, L, x)
    gap = u.sum() - r
    while abs(gap) > sum_tol and hi - lo > 1e-14 * (1.0 + abs(lam)):
        if gap > 0:
            lo = lam
        else:
            hi = lam
        lam = 0.5 * (lo + hi)
        u = _clip_at(lam, c, L, x)
        gap = u.sum() - r

    # closed form multiplier on the active set found by bisection
    free = (u > 0) & (u < 1)
    if free.any():
        n_up = np.count_nonzero(u >= 1)
        inv = 1.0 / L[free]
        lam_exact = (float(np.sum(x[free] + c[free] * inv)) + n_up - r) / float(inv.sum())
        trial = _clip_at(lam_exact, c, L, x)
        if np.array_equal(trial > 0, u > 0) and np.array_equal(trial < 1, u < 1):
            lam, u = lam_exact, trial
        # remove the last rounding residual with a common shift on the interior
        free = (u > 0) & (u < 1)
        shift = (r - u.sum()) / np.count_nonzero(free)
        u[free] = np.clip(u[free] + shift, 0.0, 1.0)
    if abs(u.sum() - r) > SUM_TOL:
        raise SubproblemInfeasible(f"water-filling failed: sum {u.sum()!r} vs budget {r!r}")
    return SubproblemResult(u, dual=float(lam), n_lower=int(np.count_nonzero(u <= 0)),
                            n_upper=int(np.count_nonzero(u >= 1)))


def project_capped_simplex(v, k: float) -> np.ndarray:
    """Euclidean projection of ``v`` onto {sum x = k, 0 <= x <= 1}."""
    v = np.asarray(v, dtype=np.float64)
    return solve_quadratic(v, np.ones_like(v), np.zeros_like(v), k).u


def proximal_weights(g: Graph, mode: str = "degree", floor: float = 1e-6, value: float = 1.0) -> np.ndarray:
    """Per-vertex proximal weights L_j.

    The coordinatewise Lipschitz constant of x^T A x is 2 A_jj = 0, so a
    positive surrogate is used: ``degree`` gives 2 deg(j), ``sqrt_degree``
    2 sqrt(deg(j)), ``constant`` the given ``value``. All are floored.
    """
    if floor <= 0:
        raise ValueError("floor must be positive")
    deg = g.degrees.astype(np.float64)
    if mode == "degree":
        L = 2.0 * deg
    elif mode == "sqrt_degree":
        L = 2.0 * np.sqrt(deg)
    elif mode == "constant":
        L = np.full(g.n, float(value))
    else:
        raise ValueError(f"unknown weight mode {mode!r}; expected one of {WEIGHT_MODES}")
    return np.maximum(L, floor)
