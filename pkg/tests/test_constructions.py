import pytest

from lowdiam import constructions as cons
from lowdiam.graph import GraphError, degree_profile, diameter
from lowdiam.moore import ParameterError
from lowdiam.spectral import spectrum


GRID = (
    [("debruijn_digraph", {"b": b, "k": k}) for b in range(2, 6) for k in range(1, 5) if b**k <= 700]
    + [("debruijn_undirected", {"b": b, "k": k}) for b in range(2, 6) for k in range(2, 5) if b**k <= 700]
    + [("kautz", {"d": d, "k": k}) for d in range(2, 6) for k in range(1, 5) if d**k <= 700]
    + [("polarity", {"q": q}) for q in (2, 3, 5, 7, 11)]
    + [("cycle", {"n": n}) for n in (3, 4, 9)]
    + [("complete", {"m": m}) for m in (2, 5)]
    + [("complete_bipartite", {"m": m}) for m in (1, 3)]
    + [("petersen", {})]
    + [("two_cliques_bridged", {"n": n}) for n in (6, 10, 16)]
)


@pytest.mark.parametrize("name, params", GRID, ids=[f"{n}-{p}" for n, p in GRID])
def test_family_self_check(name, params):
    g, spec = cons.family(name, **params)
    assert cons.self_check(g, spec) == []


@pytest.mark.parametrize("d, k", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_kautz_strongly_connected_and_regular(d, k):
    g = cons.gen_kautz(d, k)
    prof = degree_profile(g)
    assert prof.is_regular and prof.in_min == prof.in_max == d
    assert diameter(g).strongly_connected


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11])
def test_polarity_absolute_points(q):
    g = cons.gen_polarity(q)
    absolute = cons.absolute_points(q)
    assert len(absolute) == q + 1
    degrees = [len(a) for a in g.out_neighbors]
    assert all(degrees[i] == q for i in absolute)
    assert sum(1 for x in degrees if x == q + 1) == q * q


def test_two_cliques_spectral_gap_shrinks():
    ratios = []
    for n in (8, 12, 16, 20):
        g = cons.gen_two_cliques_bridged(n)
        ratios.append(spectrum(g).lambda2 / degree_profile(g).d)
    assert ratios == sorted(ratios)


def _word_degrees(b, k):
    """Degrees of the underlying simple graph, computed on words directly."""
    from itertools import product

    words = list(product(range(b), repeat=k))
    out = []
    for w in words:
        nbrs = {w[1:] + (c,) for c in range(b)} | {(c,) + w[:-1] for c in range(b)}
        nbrs.discard(w)
        out.append(len(nbrs))
    return out


@pytest.mark.parametrize("b, k", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3)])
def test_undirected_debruijn_degrees_match_word_oracle(b, k):
    g = cons.gen_debruijn_undirected(b, k)
    assert sorted(len(a) for a in g.out_neighbors) == sorted(_word_degrees(b, k))
    assert max(len(a) for a in g.out_neighbors) <= 2 * b


def test_undirected_debruijn_examples():
    prof = degree_profile(cons.gen_debruijn_undirected(2, 2))
    assert (prof.min_degree, prof.max_degree) == (2, 3)
    # for k = 2 the words ab and ba are joined in both directions, so 2b is never reached
    assert degree_profile(cons.gen_debruijn_undirected(3, 2)).max_degree == 5
    assert degree_profile(cons.gen_debruijn_undirected(3, 3)).max_degree == 6


def test_debruijn_digraph_has_loops():
    g = cons.gen_debruijn_digraph(2, 2)
    assert (0, 0) in g.edges and (3, 3) in g.edges


@pytest.mark.parametrize(
    "call, match",
    [
        (lambda: cons.gen_polarity(4), "prime"),
        (lambda: cons.gen_debruijn_digraph(1, 2), "b >= 2"),
        (lambda: cons.gen_kautz(1, 2), "d >= 2"),
        (lambda: cons.gen_two_cliques_bridged(7), "even"),
        (lambda: cons.gen_cycle(2), "n >= 3"),
        (lambda: cons.family("nope"), "unknown family"),
    ],
)
def test_invalid_parameters(call, match):
    with pytest.raises((ParameterError, GraphError), match=match):
        call()
