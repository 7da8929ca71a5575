"""Immutable simple graphs and exact structural queries."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from lowdiam import kernels


class GraphError(ValueError):
    """Base class for invalid graph input."""


class VertexOutOfRange(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class EdgeListParseError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices ``0..n-1``.

    Undirected edges are stored once as ``(min, max)``. Directed graphs may
    carry self-loops; undirected ones may not. Use :func:`build_graph` to
    construct one from arbitrary input.
    """

    n: int
    directed: bool
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            if not self.directed:
                adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        if not self.directed:
            return self.out_neighbors
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Out-adjacency in compressed sparse row form."""
        lengths = [len(a) for a in self.out_neighbors]
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(lengths, out=indptr[1:])
        indices = np.fromiter(
            (w for a in self.out_neighbors for w in a), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    def neighbor_masks(self) -> np.ndarray:
        """Bitmask of out-neighbours per vertex (only for n <= 62)."""
        if self.n > 62:
            raise ValueError("bitmask form needs n <= 62")
        masks = np.zeros(self.n, dtype=np.uint64)
        for u, nbrs in enumerate(self.out_neighbors):
            bits = 0
            for w in nbrs:
                bits |= 1 << w
            masks[u] = bits
        return masks


def _add_edge(n: int, directed: bool, u: int, v: int, seen: set[tuple[int, int]]) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise VertexOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
    if u == v and not directed:
        raise SelfLoop(f"edge ({u}, {v}) is a self-loop in an undirected graph")
    key = (u, v) if directed else (min(u, v), max(u, v))
    if key in seen:
        raise DuplicateEdge(f"edge ({u}, {v}) appears more than once")
    seen.add(key)


def build_graph(n: int, directed: bool, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_list`` and return an immutable :class:`Graph`."""
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    for edge in edge_list:
        u, v = (int(x) for x in edge)
        _add_edge(n, directed, u, v, seen)
    return Graph(n, bool(directed), tuple(sorted(seen)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the isomorphic graph with vertex ``v`` renamed ``perm[v]``."""
    return build_graph(g.n, g.directed, ((perm[u], perm[v]) for u, v in g.edges))


@dataclass(frozen=True)
class DegreeProfile:
    directed: bool
    min_degree: int
    max_degree: int
    is_regular: bool
    d: int | None
    in_min: int | None = None
    in_max: int | None = None
    out_min: int | None = None
    out_max: int | None = None


def degree_profile(g: Graph) -> DegreeProfile:
    if not g.directed:
        degs = [len(a) for a in g.out_neighbors]
        lo, hi = min(degs), max(degs)
        return DegreeProfile(False, lo, hi, lo == hi, lo if lo == hi else None)
    outs = [len(a) for a in g.out_neighbors]
    ins = [len(a) for a in g.in_neighbors]
    lo, hi = min(outs + ins), max(outs + ins)
    return DegreeProfile(
        True, lo, hi, lo == hi, lo if lo == hi else None,
        in_min=min(ins), in_max=max(ins), out_min=min(outs), out_max=max(outs),
    )


@dataclass(frozen=True)
class DiameterReport:
    """``diameter`` and entries of ``eccentricity`` are None when infinite."""

    diameter: int | None
    eccentricity: tuple[int | None, ...]
    strongly_connected: bool

    @property
    def finite(self) -> bool:
        return self.diameter is not None


def diameter(g: Graph) -> DiameterReport:
    indptr, indices = g.csr()
    ecc = kernels.bfs_eccentricities(indptr, indices, g.n)
    eccentricity = tuple(int(e) if e >= 0 else None for e in ecc)
    connected = all(e is not None for e in eccentricity)
    return DiameterReport(max(eccentricity) if connected else None, eccentricity, connected)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    if g.edges:
        u, v = np.array(g.edges, dtype=np.int64).T
        a[u, v] = 1
        if not g.directed:
            a[v, u] = 1
    return a


# -- edge-list text format ---------------------------------------------------

_HEADER = re.compile(r"graph (undirected|directed) (0|[1-9][0-9]*) (0|[1-9][0-9]*)")
_EDGE = re.compile(r"(0|[1-9][0-9]*) (0|[1-9][0-9]*)")


def format_edge_list(g: Graph) -> str:
    kind = "directed" if g.directed else "undirected"
    lines = [f"graph {kind} {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the ``graph <kind> <n> <m>`` edge-list format.

    Comment lines (``#`` to end of line) and blank lines may precede the
    header; nothing else is tolerated.
    """
    if "\r" in text:
        raise EdgeListParseError(text[: text.index("\r")].count("\n") + 1, "CR characters are not allowed")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    i = 0
    while i < len(lines) and (not lines[i].strip() or lines[i].lstrip().startswith("#")):
        i += 1
    if i == len(lines):
        raise EdgeListParseError(i + 1 if lines else 1, "missing header 'graph <undirected|directed> <n> <m>'")
    header = _HEADER.fullmatch(lines[i])
    if header is None:
        raise EdgeListParseError(i + 1, f"malformed header {lines[i]!r}")
    directed = header.group(1) == "directed"
    n, m = int(header.group(2)), int(header.group(3))
    body = lines[i + 1:]
    if len(body) != m:
        raise EdgeListParseError(i + 2 + min(len(body), m), f"expected {m} edge lines, found {len(body)}")
    if n < 1:
        raise EdgeListParseError(i + 1, f"vertex count must be >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    for j, line in enumerate(body, start=i + 2):
        match = _EDGE.fullmatch(line)
        if match is None:
            raise EdgeListParseError(j, f"malformed edge line {line!r}")
        try:
            _add_edge(n, directed, int(match.group(1)), int(match.group(2)), seen)
        except GraphError as exc:
            raise EdgeListParseError(j, str(exc)) from exc
    return Graph(n, directed, tuple(sorted(seen)))


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))
