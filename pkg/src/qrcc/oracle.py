"""Exact and baseline reference solvers for small instances."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import comb


from .graph import Graph, induced_edge_count

MAX_SUBSETS = 10**8


class OracleTooLarge(ValueError):
    """C(n, k) exceeds the enumeration guard."""


@dataclass
class OracleResult:
    optimum: int
    argmax_set: list[int]
    subsets_examined: int


def revolving_door(n: int, k: int):
    """Enumerate k-subsets of range(n) in revolving-door (Gray) order.

    Yields ``(subset, out, in)`` where consecutive subsets differ by removing
    ``out`` and adding ``in`` (both None for the first subset). ``subset`` is
    a live list; copy it if you keep it. Knuth, TAOCP 7.2.1.3, Algorithm R.
    """
    if not 0 <= k <= n:
        return
    if k == 0 or k == n:
        yield list(range(k)), None, None
        return
    # c[1..k] hold the subset, c[k+1] = n is a sentinel
    c = [None] + list(range(k)) + [n]
    yield c[1:k + 1], None, None
    while True:
        if k % 2 == 1:
            if c[1] + 1 < c[2]:
                c[1] += 1
                yield c[1:k + 1], c[1] - 1, c[1]
                continue
            j = 2
            step = "R4"
        else:
            if c[1] > 0:
                c[1] -= 1
                yield c[1:k + 1], c[1] + 1, c[1]
                continue
            j = 2
            step = "R5"
        while True:
            if j > k:
                return
            if step == "R4":
                # c[j] == c[j-1] + 1 here
                if c[j] >= j:
                    out, new = c[j], j - 2
                    c[j], c[j - 1] = c[j - 1], j - 2
                    yield c[1:k + 1], out, new
                    break
                j += 1
                step = "R5"
            else:
                # c[j-1] == j - 2 here
                if c[j] + 1 < c[j + 1]:
                    out, new = j - 2, c[j] + 1
                    c[j - 1], c[j] = c[j], c[j] + 1
                    yield c[1:k + 1], out, new
                    break
                j += 1
                step = "R4"


def exhaustive_dks(g: Graph, k: int, max_subsets: int = MAX_SUBSETS) -> OracleResult:
    """Maximum induced edge count over all k-subsets.

    Walks the subsets in revolving-door order; each swap updates the edge
    count through per-vertex counts of neighbors inside the current subset.
    """
    n = g.n
    total = comb(n, k)
    if total > max_subsets:
        raise OracleTooLarge(f"C({n}, {k}) = {total} subsets exceeds the guard of {max_subsets}; "
                             "use the heuristic solver instead")
    if k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    nbrs = [g.neighbors(v).tolist() for v in range(n)]
    inside = [0] * n  # neighbors of v inside the current subset
    count = 0
    best, best_set, seen = -1, [], 0
    for subset, out, new in revolving_door(n, k):
        if out is None:
            for v in subset:
                for w in nbrs[v]:
                    inside[w] += 1
            count = sum(inside[v] for v in subset) // 2
        else:
            for w in nbrs[out]:
                inside[w] -= 1
            count -= inside[out]
            count += inside[new]
            for w in nbrs[new]:
                inside[w] += 1
        seen += 1
        if count > best:
            best, best_set = count, sorted(subset)
    return OracleResult(best, best_set, seen)


def greedy_peel(g: Graph, k: int) -> list[int]:
    """Drop a minimum-degree vertex (lowest index on ties) until k remain."""
    if not 0 <= k <= g.n:
        raise ValueError("need 0 <= k <= n")
    deg = g.degrees.tolist()
    alive = [True] * g.n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    remaining = g.n
    while remaining > k:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != deg[v]:
            continue
        alive[v] = False
        remaining -= 1
        for w in g.neighbors(v).tolist():
            if alive[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return [v for v in range(g.n) if alive[v]]


def subset_value(g: Graph, S) -> int:
    return induced_edge_count(g, S)
