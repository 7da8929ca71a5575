"""Geronimus polynomials and the non-backtracking walk certificate.

For a d-regular graph with adjacency matrix ``A`` the polynomials

    P_0 = 1,  P_1 = x,  P_2 = x^2 - d,  P_t = x P_{t-1} - (d-1) P_{t-2}

satisfy ``P_t(A)[u, v] = #`` non-backtracking walks of length t from u to v.
Summing them up to the diameter gives a strictly positive matrix whose row
sums equal the Moore bound; every nontrivial eigenvalue then obeys
``|sum_t P_t(lambda)| <= mu - n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from lowdiam.graph import Graph, adjacency_matrix, degree_profile, diameter
from lowdiam.moore import ParameterError, moore_bound


@dataclass(frozen=True)
class GeronimusPoly:
    """``coeffs[i]`` is the coefficient of ``x**i``."""

    d: int
    t: int
    coeffs: tuple[int, ...]


def geronimus_coeffs(d: int, t: int) -> GeronimusPoly:
    if d < 2 or t < 0:
        raise ParameterError(f"need d >= 2 and t >= 0, got d={d}, t={t}")
    prev2, prev = [1], [0, 1]
    if t == 0:
        return GeronimusPoly(d, 0, (1,))
    for step in range(2, t + 1):
        shifted = [0] + prev
        sub = d if step == 2 else d - 1
        for i, c in enumerate(prev2):
            shifted[i] -= sub * c
        prev2, prev = prev, shifted
    return GeronimusPoly(d, t, tuple(prev))


def closed_form_coeffs(d: int, t: int) -> tuple[int, ...]:
    """Coefficients from the Chebyshev-U expansion, without the recurrence.

    Substituting ``x = 2 sqrt(d-1) cos(theta)`` into the trigonometric
    solution gives, for t >= 1,
    ``a[t-2j] = (-1)^j (C(t-j, j)(d-1)^j + C(t-1-j, j-1)(d-1)^(j-1))``.
    """
    if t == 0:
        return (1,)
    out = [0] * (t + 1)
    for j in range(t // 2 + 1):
        term = math.comb(t - j, j) * (d - 1) ** j
        if j >= 1:
            term += math.comb(t - 1 - j, j - 1) * (d - 1) ** (j - 1)
        out[t - 2 * j] = (-1) ** j * term
    return tuple(out)


def eval_scalar(p: GeronimusPoly, x: float) -> float:
    """Evaluate by the three-term recurrence on values."""
    return float(partial_values(p.d, p.t, x)[p.t])


def partial_values(d: int, t_max: int, x):
    """``[P_0(x), ..., P_{t_max}(x)]`` by the value recurrence.

    ``x`` may be a float or a numpy array.
    """
    vals = [np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else 1.0]
    if t_max >= 1:
        vals.append(x * 1.0)
    if t_max >= 2:
        vals.append(x * x - d)
    for _ in range(3, t_max + 1):
        vals.append(x * vals[-1] - (d - 1) * vals[-2])
    return vals


def eval_coeffs(p: GeronimusPoly, x: float) -> float:
    """Horner evaluation of the integer coefficient vector."""
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def trig_closed_form(d: int, t: int, theta):
    """Right-hand side of ``P_t(2 sqrt(d-1) cos theta)`` for t >= 1."""
    s = np.sin(theta)
    return (d - 1) ** (t / 2 - 1) * ((d - 1) * np.sin((t + 1) * theta) - np.sin((t - 1) * theta)) / s


@dataclass(frozen=True)
class RecurrenceCheck:
    d: int
    t_max: int
    passed: bool
    checked: int
    first_violation: tuple[str, int, int] | None = None


def coeff_recurrence_check(d: int, t_max: int) -> RecurrenceCheck:
    """Check ``a[t,i] = a[t-1,i-1] - (d-1) a[t-2,i]`` exactly for 3 <= t <= t_max.

    The coefficients are taken from :func:`closed_form_coeffs`; the parity
    rule, unit leading coefficient and agreement with
    :func:`geronimus_coeffs` are checked along the way.
    """
    if t_max < 3:
        raise ParameterError("t_max must be >= 3")
    table = [closed_form_coeffs(d, t) for t in range(t_max + 1)]
    checked = 0

    def coef(t, i):
        return table[t][i] if 0 <= i <= t else 0

    for t in range(t_max + 1):
        if table[t] != geronimus_coeffs(d, t).coeffs:
            return RecurrenceCheck(d, t_max, False, checked, ("expansion", t, -1))
        if table[t][t] != 1:
            return RecurrenceCheck(d, t_max, False, checked, ("leading", t, t))
        for i in range(t + 1):
            if (t - i) % 2 and table[t][i] != 0:
                return RecurrenceCheck(d, t_max, False, checked, ("parity", t, i))
        if t >= 3:
            for i in range(t + 1):
                checked += 1
                if coef(t, i) != coef(t - 1, i - 1) - (d - 1) * coef(t - 2, i):
                    return RecurrenceCheck(d, t_max, False, checked, ("recurrence", t, i))
    return RecurrenceCheck(d, t_max, True, checked)


# -- matrix form -------------------------------------------------------------

def _regular_degree(g: Graph) -> int:
    if g.directed:
        raise ParameterError("non-backtracking walk matrices need an undirected graph")
    prof = degree_profile(g)
    if not prof.is_regular:
        raise ParameterError(f"graph is not regular (degrees {prof.min_degree}..{prof.max_degree})")
    if prof.d < 2:
        raise ParameterError("need degree >= 2")
    return prof.d


@dataclass(frozen=True)
class NBWalkMatrices:
    d: int
    k: int
    matrices: tuple[np.ndarray, ...]


def nb_walk_matrices(g: Graph, k: int) -> NBWalkMatrices:
    """``M_t = P_t(A)`` for t = 0..k in exact integer arithmetic.

    int64 is used while every entry provably fits; past that the matrices
    hold Python ints.
    """
    d = _regular_degree(g)
    if k < 0:
        raise ParameterError("k must be >= 0")
    # entries of A @ M_{t-1} are bounded by d * d(d-1)^(t-2) <= d^2 (d-1)^k
    dtype = np.int64 if d * d * (d - 1) ** max(k, 1) < 2**62 else object
    a = adjacency_matrix(g).astype(dtype)
    eye = np.eye(g.n, dtype=np.int64).astype(dtype)
    mats = [eye]
    if k >= 1:
        mats.append(a)
    if k >= 2:
        mats.append(a @ a - d * eye)
    for _ in range(3, k + 1):
        mats.append(a @ mats[-1] - (d - 1) * mats[-2])
    return NBWalkMatrices(d, k, tuple(mats))


@dataclass(frozen=True)
class PositivityCertificate:
    is_positive: bool
    min_entry: int


def positivity_certificate(g: Graph, k: int) -> PositivityCertificate:
    total = sum(nb_walk_matrices(g, k).matrices)
    lo = int(np.min(total))
    return PositivityCertificate(lo >= 1, lo)


@dataclass(frozen=True)
class EigenvalueCheck:
    eigenvalue: float
    lhs: float
    rhs: int
    slack: float
    passed: bool
    tight: bool
    note: str | None = None


def default_tol(gap: int) -> float:
    return 1e-6 * max(1, gap)


def eigenvalue_bound_check(g: Graph, spectrum, tol: float | None = None) -> list[EigenvalueCheck]:
    """Check ``|sum_{t<=k} P_t(lambda)| <= mu - n`` for each nontrivial eigenvalue.

    ``spectrum`` is the full adjacency spectrum; its largest entry is taken
    as the trivial eigenvalue d and skipped once. An eigenvalue at -d
    (bipartite graphs) is checked like the rest and annotated.
    """
    d = _regular_degree(g)
    diam = diameter(g)
    if not diam.finite:
        raise ParameterError("graph has infinite diameter")
    k = diam.diameter
    rhs = moore_bound(d, k) - g.n
    if tol is None:
        tol = default_tol(rhs)
    values = sorted((float(x) for x in spectrum), reverse=True)[1:]
    out = []
    for lam in values:
        lhs = abs(sum(partial_values(d, k, lam)))
        slack = rhs - lhs
        note = None
        if abs(lam + d) <= 1e-7 * d:
            note = "eigenvalue -d (bipartite)"
        out.append(EigenvalueCheck(lam, lhs, rhs, slack, slack >= -tol, abs(slack) <= tol, note))
    return out
