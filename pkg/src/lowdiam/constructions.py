"""Deterministic generators for the classical degree-diameter families."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from lowdiam.graph import Graph, build_graph, degree_profile, diameter
from lowdiam.moore import ParameterError


@dataclass(frozen=True)
class FamilySpec:
    """Expected parameters of a generated graph.

    ``expected_degree`` is an int for regular families and a ``(lo, hi)``
    range otherwise.
    """

    family: str
    params: dict = field(default_factory=dict)
    expected_n: int = 0
    expected_degree: int | tuple[int, int] = 0
    expected_k: int | None = None
    directed: bool = False


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def gen_cycle(n: int) -> Graph:
    _need(_is_int(n) and n >= 3, "cycle needs n >= 3")
    return build_graph(n, False, ((i, (i + 1) % n) for i in range(n)))


def gen_complete(m: int) -> Graph:
    _need(_is_int(m) and m >= 2, "complete graph needs m >= 2")
    return build_graph(m, False, combinations(range(m), 2))


def gen_complete_bipartite(m: int) -> Graph:
    _need(_is_int(m) and m >= 1, "complete bipartite graph needs m >= 1")
    return build_graph(2 * m, False, ((i, m + j) for i in range(m) for j in range(m)))


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, False, outer + spokes + inner)


def gen_debruijn_digraph(b: int, k: int) -> Graph:
    """Words of length k over b symbols (vertex id = base-b value); w -> shift(w) + c."""
    _need(_is_int(b) and b >= 2, "de Bruijn needs alphabet b >= 2")
    _need(_is_int(k) and k >= 1, "de Bruijn needs word length k >= 1")
    n = b**k
    return build_graph(n, True, ((w, (w * b) % n + c) for w in range(n) for c in range(b)))


def gen_debruijn_undirected(b: int, k: int) -> Graph:
    """Underlying simple graph of the de Bruijn digraph, loops dropped."""
    di = gen_debruijn_digraph(b, k)
    pairs = {(min(u, v), max(u, v)) for u, v in di.edges if u != v}
    return build_graph(di.n, False, sorted(pairs))


def kautz_words(d: int, k: int) -> list[tuple[int, ...]]:
    return [w for w in product(range(d + 1), repeat=k) if all(a != b for a, b in zip(w, w[1:]))]


def gen_kautz(d: int, k: int) -> Graph:
    """Length-k words over d+1 symbols with no equal neighbours; shift arcs."""
    _need(_is_int(d) and d >= 2, "Kautz needs d >= 2")
    _need(_is_int(k) and k >= 1, "Kautz needs k >= 1")
    words = kautz_words(d, k)
    index = {w: i for i, w in enumerate(words)}
    arcs = [(index[w], index[w[1:] + (c,)]) for w in words for c in range(d + 1) if c != w[-1]]
    return build_graph(len(words), True, arcs)


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Points of PG(2, q), first nonzero coordinate scaled to 1, sorted."""
    pts = [p for p in product(range(q), repeat=3) if any(p)]
    return sorted(p for p in pts if next(c for c in p if c) == 1)


def gen_polarity(q: int) -> Graph:
    """Erdos-Renyi polarity graph over the prime field of order q."""
    _need(_is_int(q) and is_prime(q), "q must be prime")
    pts = projective_points(q)
    edges = [
        (i, j)
        for i, j in combinations(range(len(pts)), 2)
        if sum(a * b for a, b in zip(pts[i], pts[j])) % q == 0
    ]
    return build_graph(len(pts), False, edges)


def absolute_points(q: int) -> list[int]:
    return [i for i, p in enumerate(projective_points(q)) if sum(c * c for c in p) % q == 0]


def gen_two_cliques_bridged(n: int) -> Graph:
    """Two K_{n/2} with one edge removed from each and two bridges added."""
    _need(_is_int(n) and n >= 6 and n % 2 == 0, "two_cliques_bridged needs even n >= 6")
    h = n // 2
    edges = set(combinations(range(h), 2)) | set(combinations(range(h, n), 2))
    edges -= {(0, 1), (h, h + 1)}
    edges |= {(0, h), (1, h + 1)}
    return build_graph(n, False, sorted(edges))


def gen_named(name: str, m: int | None = None) -> Graph:
    if name == "petersen":
        return gen_petersen()
    if name == "complete":
        return gen_complete(m)
    if name == "complete_bipartite":
        return gen_complete_bipartite(m)
    raise ParameterError(f"unknown named graph {name!r}")


FAMILIES = (
    "cycle", "complete", "complete_bipartite", "petersen", "debruijn_digraph",
    "debruijn_undirected", "kautz", "polarity", "two_cliques_bridged",
)


def family(name: str, **params) -> tuple[Graph, FamilySpec]:
    """Build a family member together with its expected parameters."""
    if name == "cycle":
        n = params["n"]
        return gen_cycle(n), FamilySpec(name, params, n, 2, n // 2)
    if name == "complete":
        m = params["m"]
        return gen_complete(m), FamilySpec(name, params, m, m - 1, 1)
    if name == "complete_bipartite":
        m = params["m"]
        return gen_complete_bipartite(m), FamilySpec(name, params, 2 * m, m, 1 if m == 1 else 2)
    if name == "petersen":
        return gen_petersen(), FamilySpec(name, params, 10, 3, 2)
    if name == "debruijn_digraph":
        b, k = params["b"], params["k"]
        return gen_debruijn_digraph(b, k), FamilySpec(name, params, b**k, b, k, directed=True)
    if name == "debruijn_undirected":
        b, k = params["b"], params["k"]
        return gen_debruijn_undirected(b, k), FamilySpec(name, params, b**k, (1, 2 * b), k)
    if name == "kautz":
        d, k = params["d"], params["k"]
        return gen_kautz(d, k), FamilySpec(name, params, d**k + d ** (k - 1), d, k, directed=True)
    if name == "polarity":
        q = params["q"]
        return gen_polarity(q), FamilySpec(name, params, q * q + q + 1, (q, q + 1), 2)
    if name == "two_cliques_bridged":
        n = params["n"]
        return gen_two_cliques_bridged(n), FamilySpec(name, params, n, n // 2 - 1, 3)
    raise ParameterError(f"unknown family {name!r}")


def self_check(g: Graph, spec: FamilySpec) -> list[str]:
    """Mismatches between a generated graph and its FamilySpec (empty if none)."""
    problems = []
    if g.n != spec.expected_n:
        problems.append(f"n={g.n}, expected {spec.expected_n}")
    if g.directed != spec.directed:
        problems.append("directedness mismatch")
    prof = degree_profile(g)
    if isinstance(spec.expected_degree, tuple):
        lo, hi = spec.expected_degree
        if prof.min_degree < lo or prof.max_degree > hi:
            problems.append(f"degrees {prof.min_degree}..{prof.max_degree} outside {lo}..{hi}")
    elif not prof.is_regular or prof.d != spec.expected_degree:
        problems.append(f"degrees {prof.min_degree}..{prof.max_degree}, expected regular {spec.expected_degree}")
    diam = diameter(g).diameter
    if diam != spec.expected_k:
        problems.append(f"diameter {diam}, expected {spec.expected_k}")
    return problems
