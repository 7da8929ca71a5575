import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lowdiam import constructions as cons
from lowdiam.geronimus import (
    closed_form_coeffs,
    coeff_recurrence_check,
    eigenvalue_bound_check,
    eval_coeffs,
    eval_scalar,
    geronimus_coeffs,
    nb_walk_matrices,
    positivity_certificate,
    trig_closed_form,
)
from lowdiam.graph import build_graph, diameter
from lowdiam.moore import ParameterError, moore_bound
from lowdiam.spectral import spectrum

from conftest import regular_small_graphs
from oracles import nb_walk_counts


def test_low_order_polynomials():
    assert geronimus_coeffs(5, 0).coeffs == (1,)
    assert geronimus_coeffs(5, 1).coeffs == (0, 1)
    assert geronimus_coeffs(5, 2).coeffs == (-5, 0, 1)
    for d in range(2, 9):
        assert geronimus_coeffs(d, 3).coeffs == (0, -(2 * d - 1), 0, 1)


def test_constant_term_formula():
    # even t = 2j: a_0 = (-1)^j (d-1)^(j-1) d
    for d in range(2, 8):
        for j in range(1, 8):
            assert geronimus_coeffs(d, 2 * j).coeffs[0] == (-1) ** j * (d - 1) ** (j - 1) * d


def test_recurrence_matches_closed_form_exactly():
    for d in range(2, 11):
        for t in range(0, 31):
            assert geronimus_coeffs(d, t).coeffs == closed_form_coeffs(d, t)
        assert coeff_recurrence_check(d, 30).passed


@given(st.integers(2, 12), st.integers(0, 14), st.floats(-30, 30, allow_nan=False))
def test_value_and_coefficient_evaluation_agree(d, t, x):
    p = geronimus_coeffs(d, t)
    scale = sum(abs(c) * abs(x) ** i for i, c in enumerate(p.coeffs))
    assert abs(eval_scalar(p, x) - eval_coeffs(p, x)) <= 1e-12 * max(1.0, scale)


def test_trig_identity():
    rng = np.random.default_rng(11)
    for d in range(3, 11):
        for t in range(1, 13):
            theta = rng.uniform(0.01, math.pi - 0.01, 50)
            lhs = np.array([eval_scalar(geronimus_coeffs(d, t), 2 * math.sqrt(d - 1) * math.cos(th)) for th in theta])
            assert np.max(np.abs(lhs - trig_closed_form(d, t, theta))) < 1e-9 * (d - 1) ** (t / 2)


@pytest.mark.parametrize("name, g", regular_small_graphs())
def test_walk_matrices_match_enumeration(name, g):
    if min(len(a) for a in g.out_neighbors) < 2:
        pytest.skip("degree < 2")
    mats = nb_walk_matrices(g, 4).matrices
    for t in range(5):
        assert mats[t].tolist() == nb_walk_counts(g.n, g.edges, t), (name, t)


@pytest.mark.parametrize("name, g", regular_small_graphs())
def test_row_sums_equal_moore_bound(name, g):
    k = diameter(g).diameter
    w = nb_walk_matrices(g, k)
    total = sum(w.matrices)
    assert (total.sum(axis=1) == moore_bound(w.d, k)).all()


def test_cycle_examples():
    g = cons.gen_cycle(7)
    m = nb_walk_matrices(g, 3).matrices
    # on a cycle there are exactly two non-backtracking walks of each length t >= 1
    for t in (1, 2, 3):
        assert (m[t].sum(axis=1) == 2).all()
    assert positivity_certificate(g, 3).is_positive
    assert not positivity_certificate(g, 2).is_positive


def test_k4_example():
    m = nb_walk_matrices(cons.gen_complete(4), 2).matrices
    assert m[2].tolist() == [[0, 2, 2, 2], [2, 0, 2, 2], [2, 2, 0, 2], [2, 2, 2, 0]]
    assert positivity_certificate(cons.gen_complete(4), 1).min_entry == 1


def test_large_k_switches_to_python_ints():
    m = nb_walk_matrices(cons.gen_complete(10), 20).matrices
    assert m[-1].dtype == object
    assert int(sum(m).sum(axis=1)[0]) == moore_bound(9, 20)


def test_rejects_irregular_and_directed():
    with pytest.raises(ParameterError, match="not regular"):
        nb_walk_matrices(cons.gen_polarity(2), 2)
    with pytest.raises(ParameterError, match="undirected"):
        nb_walk_matrices(cons.gen_kautz(2, 2), 2)


def test_positivity_matches_diameter_everywhere():
    for name, g in regular_small_graphs():
        k = diameter(g).diameter
        assert positivity_certificate(g, k).is_positive, name
        if k > 1:
            assert not positivity_certificate(g, k - 1).is_positive, name


def test_eigenvalue_check_petersen():
    g = cons.gen_petersen()
    checks = eigenvalue_bound_check(g, spectrum(g).eigenvalues)
    assert all(c.passed and c.tight and c.rhs == 0 for c in checks)
    assert all(c.lhs < 1e-6 for c in checks)


@pytest.mark.parametrize("d", range(2, 9))
def test_bipartite_equality_at_minus_d(d):
    g = cons.gen_complete_bipartite(d)
    checks = eigenvalue_bound_check(g, spectrum(g).eigenvalues)
    assert all(c.passed for c in checks)
    bottom = [c for c in checks if c.note]
    assert len(bottom) == 1 and bottom[0].tight
    assert bottom[0].note == "eigenvalue -d (bipartite)"


def test_eigenvalue_check_needs_connected():
    g = build_graph(6, False, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(ParameterError, match="infinite"):
        eigenvalue_bound_check(g, spectrum(g).eigenvalues)
