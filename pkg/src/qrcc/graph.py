"""Immutable sparse graphs, instance loaders and seeded random generators."""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, TextIO

import numpy as np
import scipy.sparse as sp

log = logging.getLogger(__name__)

# Above this many vertices Erdos-Renyi sampling switches to geometric skipping.
DENSE_PAIR_LIMIT = 2**13


class GraphFormatError(ValueError):
    """Raised when an instance file cannot be parsed."""


@dataclass(frozen=True)
class LoadStats:
    lines: int = 0
    edges_read: int = 0
    self_loops: int = 0
    duplicates: int = 0
    header: tuple[int, int] | None = None


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph in CSR layout.

    ``indices[indptr[v]:indptr[v + 1]]`` are the neighbors of ``v`` in
    ascending order. ``labels`` maps dense vertex ids back to the ids used in
    the source file (identity for generated graphs).
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: np.ndarray | None = None
    planted: tuple[int, ...] | None = None
    stats: LoadStats | None = None
    name: str = "graph"

    def __post_init__(self):
        for arr in (self.indptr, self.indices):
            arr.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.indptr) - 1

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.diff(self.indptr)
        deg.setflags(write=False)
        return deg

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    @cached_property
    def adjacency(self) -> sp.csr_array:
        """Adjacency matrix A as a scipy CSR array (shares the index buffers)."""
        data = np.ones(len(self.indices), dtype=np.float64)
        return sp.csr_array((data, self.indices, self.indptr), shape=(self.n, self.n))

    def original_label(self, v: int) -> int:
        return int(v if self.labels is None else self.labels[v])

    def edges(self) -> np.ndarray:
        """(m, 2) array of edges with u < v, sorted lexicographically."""
        src = np.repeat(np.arange(self.n), self.degrees)
        keep = src < self.indices
        return np.column_stack([src[keep], self.indices[keep]])

    def __repr__(self):
        return f"Graph(name={self.name!r}, n={self.n}, m={self.m})"


def from_edges(n: int, edges, **kwargs) -> Graph:
    """Build a Graph from an iterable/array of vertex pairs.

    Self-loops and duplicate pairs are dropped.
    """
    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if n < 0:
        raise ValueError("n must be non-negative")
    if e.size and (e.min() < 0 or e.max() >= n):
        raise ValueError("edge endpoint out of range")
    e = e[e[:, 0] != e[:, 1]]
    e = np.sort(e, axis=1)
    e = np.unique(e, axis=0)
    src = np.concatenate([e[:, 0], e[:, 1]])
    dst = np.concatenate([e[:, 1], e[:, 0]])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(indptr, dst.astype(np.int64), **kwargs)


def validate(g: Graph) -> None:
    """Check the structural invariants of ``g``; raises AssertionError."""
    n = g.n
    assert g.indptr[0] == 0 and g.indptr[-1] == len(g.indices)
    assert np.all(np.diff(g.indptr) >= 0)
    assert g.degrees.sum() == 2 * g.m
    if len(g.indices) == 0:
        return
    assert g.indices.min() >= 0 and g.indices.max() < n
    src = np.repeat(np.arange(n), g.degrees)
    assert not np.any(src == g.indices), "self-loop"
    # strictly ascending within each row => sorted and duplicate free
    same_row = src[1:] == src[:-1]
    assert np.all(g.indices[1:][same_row] > g.indices[:-1][same_row]), "unsorted or duplicate neighbors"
    fwd = src * n + g.indices
    bwd = g.indices * n + src
    assert np.array_equal(np.sort(fwd), np.sort(bwd)), "asymmetric adjacency"


# ---------------------------------------------------------------- loaders

def _data_lines(stream: Iterable[str]):
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        yield lineno, line.split()


def _parse_int(tok: str, lineno: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected a non-negative integer, got {tok!r}") from None
    if val < 0:
        raise GraphFormatError(f"line {lineno}: negative vertex id {val}")
    return val


def load_edge_list(stream: TextIO | Iterable[str], name: str = "graph") -> Graph:
    """Read a whitespace separated edge list.

    Lines starting with ``#`` or ``%`` are comments. A first data line
    ``n m`` is treated as a header when exactly ``m`` data lines follow it.
    Vertex ids are relabeled densely in order of first appearance. Extra
    columns (edge weights) are ignored with a warning.
    """
    rows = [(lineno, toks) for lineno, toks in _data_lines(stream)]
    if not rows:
        raise GraphFormatError("empty input: no edges found")

    header = None
    lineno, toks = rows[0]
    if len(toks) == 2 and len(rows) > 1:
        hn, hm = _parse_int(toks[0], lineno), _parse_int(toks[1], lineno)
        if hm == len(rows) - 1:
            header = (hn, hm)
            rows = rows[1:]

    # vertices that only occur in self-loops are not part of the graph
    relabel: dict[int, int] = {}
    pairs = []
    weighted = False
    loops = 0
    for lineno, toks in rows:
        if len(toks) < 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex ids")
        if len(toks) > 2:
            weighted = True
        a, b = _parse_int(toks[0], lineno), _parse_int(toks[1], lineno)
        if a == b:
            loops += 1
            continue
        pairs.append((relabel.setdefault(a, len(relabel)), relabel.setdefault(b, len(relabel))))
    if weighted:
        warnings.warn("edge weights ignored; graph loaded as unweighted", stacklevel=2)

    n = len(relabel)
    g = from_edges(n, pairs, name=name)
    dupes = len(pairs) - g.m
    labels = np.fromiter(relabel.keys(), dtype=np.int64, count=n)
    stats = LoadStats(lines=len(rows), edges_read=len(rows), self_loops=loops, duplicates=dupes, header=header)
    if loops or dupes:
        log.info("%s: dropped %d self-loops and %d duplicate edges", name, loops, dupes)
    return Graph(g.indptr, g.indices, labels=labels, stats=stats, name=name)


def load_kcluster(stream: TextIO | Iterable[str], name: str = "kcluster") -> Graph:
    """Best-effort reader for dense k-cluster matrix instances.

    Expects an ``n d`` header followed by the adjacency matrix given either
    as full rows (n*n entries), strictly lower triangle (n(n-1)/2 entries) or
    lower triangle with diagonal (n(n+1)/2 entries). Nonzero entries are
    edges; non-binary values are treated as weights and ignored.
    """
    toks = []
    first = None
    for lineno, line_toks in _data_lines(stream):
        if first is None:
            first = (lineno, line_toks)
            continue
        toks.extend(line_toks)
    if first is None:
        raise GraphFormatError("empty input")
    lineno, head = first
    n = _parse_int(head[0], lineno)
    try:
        vals = np.asarray(toks, dtype=np.float64)
    except ValueError as exc:
        raise GraphFormatError(f"non-numeric matrix entry: {exc}") from None

    rows, cols = [], []
    if len(vals) == n * n:
        mat = vals.reshape(n, n)
        rows, cols = np.nonzero(np.tril(mat, -1))
    elif len(vals) in (n * (n - 1) // 2, n * (n + 1) // 2):
        diag = 0 if len(vals) == n * (n - 1) // 2 else 1
        r, c = np.tril_indices(n, -1 + diag)
        nz = vals != 0
        rows, cols = r[nz], c[nz]
    else:
        raise GraphFormatError(f"expected a {n}x{n} matrix or its lower triangle, got {len(vals)} entries")
    if np.any((vals != 0) & (vals != 1)):
        warnings.warn("non-binary matrix entries treated as unweighted edges", stacklevel=2)
    return from_edges(n, np.column_stack([rows, cols]), name=name)


# ------------------------------------------------------------- generators

@dataclass(frozen=True)
class GeneratorSpec:
    kind: str = "erdos_renyi"
    n: int = 100
    p: float = 0.5
    planted_k: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("erdos_renyi", "planted"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.n < 2:
            raise ValueError("generator needs n >= 2")
        if not 0 < self.p <= 1:
            raise ValueError("edge probability must lie in (0, 1]")
        if self.kind == "planted":
            if self.planted_k is None or not 3 <= self.planted_k <= self.n:
                raise ValueError("planted graphs need 3 <= planted_k <= n")

    @property
    def label(self) -> str:
        if self.kind == "planted":
            return f"P_{self.p:g}^{self.planted_k}({self.n})"
        return f"G_{self.p:g}({self.n})"


def _pair_from_linear(idx: np.ndarray, n: int):
    # row-major enumeration of pairs (i, j), i < j
    rows = np.arange(n - 1, dtype=np.int64)
    starts = rows * (2 * n - rows - 1) // 2
    i = np.searchsorted(starts, idx, side="right") - 1
    j = idx - starts[i] + i + 1
    return i, j


def erdos_renyi_edges(n: int, p: float, rng: np.random.Generator) -> np.ndarray:
    if p >= 1.0:
        i, j = np.triu_indices(n, 1)
        return np.column_stack([i, j])
    if n <= DENSE_PAIR_LIMIT:
        chunks = []
        for i in range(n - 1):
            hit = np.flatnonzero(rng.random(n - i - 1) < p)
            if hit.size:
                chunks.append(np.column_stack([np.full(hit.size, i), hit + i + 1]))
        return np.concatenate(chunks) if chunks else np.empty((0, 2), dtype=np.int64)

    total = n * (n - 1) // 2
    expected = total * p
    batch = int(expected + 6 * np.sqrt(expected) + 1024)
    picked = []
    pos = -1
    while True:
        skips = rng.geometric(p, size=batch)
        lin = pos + np.cumsum(skips)
        done = lin[-1] >= total
        lin = lin[lin < total]
        picked.append(lin)
        if done:
            break
        pos = int(lin[-1])
    lin = np.concatenate(picked)
    i, j = _pair_from_linear(lin, n)
    return np.column_stack([i, j])


def generate(spec: GeneratorSpec) -> Graph:
    """Sample G_p(n), or G_p(n) with a clique planted on a random k-subset.

    The planted vertex set is available as ``graph.planted``.
    """
    rng = np.random.default_rng(spec.seed)
    edges = erdos_renyi_edges(spec.n, spec.p, rng)
    planted = None
    if spec.kind == "planted":
        chosen = np.sort(rng.choice(spec.n, size=spec.planted_k, replace=False))
        a, b = np.triu_indices(spec.planted_k, 1)
        edges = np.concatenate([edges, np.column_stack([chosen[a], chosen[b]])])
        planted = tuple(int(v) for v in chosen)
    return from_edges(spec.n, edges, planted=planted, name=spec.label)


def induced_edge_count(g: Graph, S) -> int:
    """Number of edges of ``g`` with both endpoints in ``S``."""
    S = np.asarray(S, dtype=np.int64).ravel()
    if S.size == 0:
        return 0
    if S.min() < 0 or S.max() >= g.n:
        raise IndexError("vertex id out of range")
    mask = np.zeros(g.n, dtype=bool)
    mask[S] = True
    total = 0
    for v in S:
        total += int(np.count_nonzero(mask[g.neighbors(v)]))
    return total // 2
