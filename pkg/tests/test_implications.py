"""Guarantees for classical constructions, checked against hand-written symbolic forms."""
from fractions import Fraction

import pytest
import sympy as sp

from lowdiam.implications import family_size, table2
from lowdiam.moore import ParameterError

D, K = sp.symbols("d k", positive=True, integer=True)

KAUTZ_EDGE = (D - D ** (-K)) / (2 * K)
KAUTZ_VERTEX = D / (2 * (D + 1) * (K - 1) + D)
DEBRUIJN_K2_VERTEX = sp.Rational(1, 3)


def _frac(expr, d, k):
    value = sp.nsimplify(expr.subs({D: d, K: k}))
    assert value.is_Rational
    return Fraction(int(value.p), int(value.q))


def _rows(family, d, k):
    return {r.bound_id: r for r in table2(family, d, k)}


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_kautz_rows_match_symbolic_forms(d, k):
    rows = _rows("kautz", d, k)
    for bound_id, expr in (("digraph_edge", KAUTZ_EDGE), ("digraph_vertex", KAUTZ_VERTEX)):
        r = rows[bound_id]
        assert r.published == _frac(expr, d, k)
        assert r.idealized == r.published
        assert r.flagged and r.delta == r.recomputed - r.published < 0


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_debruijn_rows(d, k):
    rows = _rows("debruijn", d, k)
    assert family_size("debruijn", d, k) == Fraction(d, 2) ** k
    if k == 2:
        r = rows["k2_vertex"]
        assert r.published == Fraction(1, 3) == _frac(sp.sympify(DEBRUIJN_K2_VERTEX), d, k)
        assert r.recomputed == r.published and not r.flagged
    cheeger = rows["cheeger_edge"]
    exact = (d - d * sp.cos(sp.pi / (k + 1))) / 2
    assert cheeger.published == pytest.approx(float(exact), abs=1e-12)
    assert not cheeger.flagged
    approx = rows["cheeger_vertex"]
    assert approx.flagged and "approximation" in approx.note


def test_polarity_vertex_row_converges_to_two_thirds():
    degrees = (3, 10, 100, 1000, 10**5)
    gaps = [Fraction(2, 3) - _rows("polarity", d, 2)["k2_vertex"].recomputed for d in degrees]
    assert all(g > 0 for g in gaps) and gaps == sorted(gaps, reverse=True)
    # alpha = 1 - 1/d + 1/d^2, so the gap decays like (2/9)/d
    assert abs(gaps[-1] * degrees[-1] - Fraction(2, 9)) < Fraction(1, 10**4)
    assert _rows("polarity", 5, 2)["k2_vertex"].published == Fraction(2, 3)


@pytest.mark.parametrize("d", [3, 6, 12])
def test_mms_vertex_row_is_sixteen_over_twentyfive(d):
    r = _rows("mms", d, 2)["k2_vertex"]
    assert r.published == Fraction(16, 25) == r.idealized


@pytest.mark.parametrize("family", ["polarity", "mms"])
@pytest.mark.parametrize("d", [3, 4, 7, 10])
def test_spectral_discrepancies_are_flagged(family, d):
    r = _rows(family, d, 2)["k2_spectral"]
    assert r.flagged and r.delta != 0
    assert r.recomputed is not None


def test_spectral_recomputation_values():
    pol = _rows("polarity", 4, 2)["k2_spectral"]
    assert pol.recomputed == pytest.approx((1 + 29**0.5) / 2)
    mms = _rows("mms", 4, 2)["k2_spectral"]
    assert mms.recomputed == pytest.approx((1 + 3) / 2)


def test_canale_gomez_and_alegre_idealized_match_published():
    for family, d, k in (("canale_gomez", 5, 3), ("alegre", 3, 4)):
        for r in table2(family, d, k):
            assert r.idealized == r.published


def test_rejections():
    with pytest.raises(ParameterError):
        table2("polarity", 5, 3)
    with pytest.raises(ParameterError):
        table2("canale_gomez", 2, 2)
    with pytest.raises(ParameterError):
        table2("moore", 3, 2)
