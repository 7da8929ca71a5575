import random
from fractions import Fraction

import pytest

from lowdiam import constructions as cons
from lowdiam.expansion import (
    ExpansionCapError,
    boundary,
    bound_set,
    cut_size,
    exact_expansion,
    path_count_helpers,
)
from lowdiam.graph import relabel

from oracles import brute_expansion

CASES = [
    ("C_5", cons.gen_cycle(5), Fraction(1, 1), Fraction(1, 1)),
    ("C_7", cons.gen_cycle(7), Fraction(2, 3), Fraction(2, 3)),
    ("petersen", cons.gen_petersen(), Fraction(1), Fraction(4, 5)),
    ("K_4", cons.gen_complete(4), Fraction(2), Fraction(1)),
    ("K_3,3", cons.gen_complete_bipartite(3), Fraction(5, 3), Fraction(1)),
    ("kautz_2_2", cons.gen_kautz(2, 2), Fraction(1), Fraction(2, 3)),
    ("debruijn_2_3", cons.gen_debruijn_digraph(2, 3), Fraction(1, 2), Fraction(1, 2)),
    ("two_cliques_8", cons.gen_two_cliques_bridged(8), Fraction(1, 2), Fraction(1, 2)),
]


@pytest.mark.parametrize("name, g, h_e, phi", CASES)
def test_exact_values_against_oracle(name, g, h_e, phi):
    meas = exact_expansion(g)
    assert (meas.h_e, meas.phi_V) == (h_e, phi)
    assert brute_expansion(g.n, g.edges, g.directed) == (h_e, phi)


@pytest.mark.parametrize("name, g, h_e, phi", CASES)
def test_witnesses_realise_the_minimum(name, g, h_e, phi):
    meas = exact_expansion(g)
    s = meas.h_e_witness
    assert 1 <= len(s) <= g.n // 2
    assert Fraction(cut_size(g, s), len(s)) == meas.h_e
    t = meas.phi_V_witness
    assert Fraction(len(boundary(g, t)), len(t)) == meas.phi_V


def test_witness_is_smallest_mask():
    # in C_7 the minimiser of smallest bitmask is {0, 1, 2}
    assert exact_expansion(cons.gen_cycle(7)).h_e_witness == (0, 1, 2)


@pytest.mark.parametrize("seed", range(5))
def test_relabelling_invariance(seed):
    g = cons.gen_petersen()
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    a, b = exact_expansion(g), exact_expansion(relabel(g, perm))
    assert (a.h_e, a.phi_V) == (b.h_e, b.phi_V)


def test_cap():
    with pytest.raises(ExpansionCapError, match="cap"):
        exact_expansion(cons.gen_cycle(25))
    with pytest.warns(RuntimeWarning):
        exact_expansion(cons.gen_cycle(5), cap=30)


def test_cut_size_directed_reverse():
    g = cons.gen_kautz(2, 2)
    s = {0, 1}
    out_arcs = sum(1 for u, v in g.edges if u in s and v not in s)
    in_arcs = sum(1 for u, v in g.edges if v in s and u not in s)
    assert cut_size(g, s) == out_arcs and cut_size(g, s, reverse=True) == in_arcs


def _by_id(rows):
    return {b.bound_id: b for b in rows}


def test_petersen_bound_values():
    rows = _by_id(bound_set(3, 2, 10, lambda2=1.0))
    assert rows["coarse_edge"].value == Fraction(9, 16)
    assert rows["coarse_vertex"].value == Fraction(1, 3)
    assert rows["k2_spectral"].value == 2
    assert rows["k2_edge"].value == 1
    assert rows["k2_vertex"].value == Fraction(20, 29)
    assert rows["cheeger_edge"].value == 1
    assert rows["cheeger_additive"].kind == "descriptive" and rows["cheeger_additive"].value is None


def test_c7_bound_values():
    rows = _by_id(bound_set(2, 3, 7))
    assert not rows["coarse_edge"].applicable
    assert rows["k3_vertex"].value == Fraction(7, 15)
    assert rows["k3_vertex_proof"].value == Fraction(7, 11)


def test_kautz_directed_bounds():
    rows = _by_id(bound_set(2, 2, 6, directed=True))
    assert rows["digraph_edge"].value == Fraction(6, 7) / 4 * Fraction(7, 4)
    assert rows["digraph_vertex"].value == Fraction(12, 7) / (6 + Fraction(12, 7))


def test_vacuous_k2_bounds():
    rows = _by_id(bound_set(3, 2, 13))
    assert not rows["k2_spectral"].applicable and "vacuous" in rows["k2_spectral"].reason
    assert not rows["coarse_edge"].applicable


def test_irrational_values_are_floats():
    rows = _by_id(bound_set(4, 2, 13))
    assert isinstance(rows["k2_edge"].value, float) and not rows["k2_edge"].exact


def test_path_count_helpers():
    for d in range(3, 21):
        for k in range(1, 11):
            f, bound = path_count_helpers(d, k)
            assert f == sum(l * (d - 1) ** (l - 1) for l in range(1, k + 1))
            assert f <= bound
            f, bound = path_count_helpers(d, k, directed=True)
            assert f <= bound
