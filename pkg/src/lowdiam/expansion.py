"""Exact edge/vertex expansion and the closed-form lower bounds on it.

Bound calculators take ``(d, k, n)`` rather than a graph so they can be
evaluated for idealised families as well as for measured graphs. Values are
exact :class:`~fractions.Fraction` objects whenever the inputs are rational
and no irrational square root is involved; otherwise floats.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from lowdiam import kernels
from lowdiam.graph import Graph
from lowdiam.moore import ParameterError, directed_moore_bound, moore_bound
from lowdiam.spectral import VacuousBound, spectral_bound_k2

Number = Union[int, Fraction, float]

DEFAULT_CAP = 24


class ExpansionCapError(ValueError):
    pass


@dataclass(frozen=True)
class ExpansionMeasurement:
    h_e: Fraction
    h_e_witness: tuple[int, ...]
    phi_V: Fraction
    phi_V_witness: tuple[int, ...]
    method: str = "exhaustive"
    subset_cap: int = DEFAULT_CAP


def _members(mask: int) -> tuple[int, ...]:
    return tuple(v for v in range(mask.bit_length()) if mask >> v & 1)


def exact_expansion(g: Graph, cap: int = DEFAULT_CAP) -> ExpansionMeasurement:
    """Minimise over every S with 1 <= |S| <= n/2.

    For digraphs the cut counts arcs leaving S and N(S) is the
    out-neighbourhood. Among minimisers the witness with the smallest
    bitmask ``sum(2**v for v in S)`` is returned.
    """
    if cap > DEFAULT_CAP:
        warnings.warn(
            f"exact expansion cap raised to {cap}; enumeration grows as 2^n", RuntimeWarning, stacklevel=2
        )
    if g.n > cap:
        raise ExpansionCapError(
            f"n={g.n} exceeds the exhaustive-search cap {cap}; raise it with --exact-cap at your own cost"
        )
    if g.n < 2:
        raise ExpansionCapError("expansion needs at least 2 vertices")
    e_num, e_den, e_mask, v_num, v_den, v_mask = kernels.subset_expansion(g.neighbor_masks(), g.n)
    return ExpansionMeasurement(
        Fraction(int(e_num), int(e_den)), _members(int(e_mask)),
        Fraction(int(v_num), int(v_den)), _members(int(v_mask)),
        subset_cap=cap,
    )


def cut_size(g: Graph, s: set[int] | tuple[int, ...], reverse: bool = False) -> int:
    """Number of edges (arcs) from S to its complement, or back when ``reverse``."""
    s = set(s)
    total = 0
    for u, v in g.edges:
        if g.directed:
            a, b = (v, u) if reverse else (u, v)
            total += a in s and b not in s
        else:
            total += (u in s) != (v in s)
    return total


def boundary(g: Graph, s) -> set[int]:
    s = set(s)
    return {w for u in s for w in g.out_neighbors[u] if w not in s}


# -- bounds ------------------------------------------------------------------

@dataclass(frozen=True)
class Bound:
    """One row of the bound table.

    ``kind`` is ``lower`` or ``upper`` for numeric bounds and
    ``descriptive`` for asymptotic statements that carry no value.
    """

    bound_id: str
    quantity: str
    kind: str
    value: Number | None
    applicability: str
    applicable: bool = True
    reason: str | None = None
    inputs: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return isinstance(self.value, (int, Fraction))


def _sqrt(q: Fraction) -> Fraction | float:
    q = Fraction(q)
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return math.sqrt(q)


def _na(bound_id, quantity, applicability, reason, inputs, kind="lower") -> Bound:
    return Bound(bound_id, quantity, kind, None, applicability, False, reason, inputs)


def coarse_alpha(d: int, k: int, n: Number, directed: bool = False) -> Fraction:
    mu = directed_moore_bound(d, k) if directed else moore_bound(d, k)
    return Fraction(n) / mu


def coarse_edge_value(d: int, k: int, alpha: Fraction) -> Fraction:
    return alpha * d / (2 * k) * (1 - Fraction(1, (d - 1) ** k))


def coarse_vertex_value(k: int, alpha: Fraction) -> Fraction:
    return alpha / (2 * (k - 1) + alpha)


def directed_edge_value(d: int, k: int, alpha: Fraction) -> Fraction:
    return alpha / (2 * k) * (d - Fraction(1, d**k))


def directed_vertex_value(d: int, k: int, alpha: Fraction) -> Fraction:
    return alpha * d / (2 * (d + 1) * (k - 1) + alpha * d)


def k2_edge_value(d: int, alpha: Fraction) -> Fraction | float:
    radicand = 4 * (1 - alpha) * d * d + 4 * d + 1
    if radicand < 0:
        raise VacuousBound(f"radicand {radicand} < 0")
    return (2 * d + 1 - _sqrt(radicand)) / 4


def k2_vertex_value(alpha: Fraction) -> Fraction:
    return 2 * alpha / (2 * alpha + 1)


def k3_vertex_value(alpha: Fraction) -> Fraction:
    return alpha / (alpha + 1)


def k3_vertex_proof_value(d: int, alpha: Fraction) -> Fraction:
    return alpha / (alpha + 1 - Fraction(1, d))


def _validate(d, k, n):
    if d < 1 or k < 1 or n <= 0:
        raise ParameterError(f"need d >= 1, k >= 1, n > 0; got d={d}, k={k}, n={n}")


def coarse_bounds_undirected(d: int, k: int, n: Number) -> list[Bound]:
    _validate(d, k, n)
    inputs = {"d": d, "k": k, "n": n}
    if d < 3:
        reason = "needs d >= 3 (the counting argument divides by d - 2)"
        return [_na("coarse_edge", "h_e", "undirected", reason, inputs),
                _na("coarse_vertex", "phi_V", "undirected", reason, inputs)]
    mu = moore_bound(d, k)
    alpha = Fraction(n) / mu
    inputs["alpha"] = alpha
    if alpha > 1:
        reason = f"n exceeds the Moore bound {mu}"
        return [_na("coarse_edge", "h_e", "undirected", reason, inputs),
                _na("coarse_vertex", "phi_V", "undirected", reason, inputs)]
    return [
        Bound("coarse_edge", "h_e", "lower", coarse_edge_value(d, k, alpha), "undirected", inputs=inputs),
        Bound("coarse_vertex", "phi_V", "lower", coarse_vertex_value(k, alpha), "undirected", inputs=inputs),
    ]


def coarse_bounds_directed(d: int, k: int, n: Number) -> list[Bound]:
    _validate(d, k, n)
    inputs = {"d": d, "k": k, "n": n}
    if d < 2:
        reason = "needs d >= 2"
        return [_na("digraph_edge", "h_e", "directed", reason, inputs),
                _na("digraph_vertex", "phi_V", "directed", reason, inputs)]
    mu = directed_moore_bound(d, k)
    alpha = Fraction(n) / mu
    inputs["alpha"] = alpha
    if alpha > 1:
        reason = f"n exceeds the directed Moore bound {mu}"
        return [_na("digraph_edge", "h_e", "directed", reason, inputs),
                _na("digraph_vertex", "phi_V", "directed", reason, inputs)]
    return [
        Bound("digraph_edge", "h_e", "lower", directed_edge_value(d, k, alpha), "directed", inputs=inputs),
        Bound("digraph_vertex", "phi_V", "lower", directed_vertex_value(d, k, alpha), "directed", inputs=inputs),
    ]


def refined_bounds_k2(d: int, n: Number) -> list[Bound]:
    """Diameter-2 bounds; here alpha is normalised by d**2, not the Moore bound."""
    _validate(d, 2, n)
    alpha = Fraction(n) / (d * d)
    inputs = {"d": d, "k": 2, "n": n, "alpha": alpha}
    try:
        edge = Bound("k2_edge", "h_e", "lower", k2_edge_value(d, alpha), "k=2", inputs=inputs)
    except VacuousBound as exc:
        edge = _na("k2_edge", "h_e", "k=2", f"bound vacuous: {exc}", inputs)
    return [edge, Bound("k2_vertex", "phi_V", "lower", k2_vertex_value(alpha), "k=2", inputs=inputs)]


def refined_bound_k3(d: int, n: Number) -> list[Bound]:
    """Diameter-3 vertex bound (alpha = n / d**3), stated and proof-strength forms."""
    _validate(d, 3, n)
    alpha = Fraction(n) / d**3
    inputs = {"d": d, "k": 3, "n": n, "alpha": alpha}
    if d < 2:
        reason = "needs d >= 2"
        return [_na("k3_vertex", "phi_V", "k=3", reason, inputs),
                _na("k3_vertex_proof", "phi_V", "k=3", reason, inputs)]
    return [
        Bound("k3_vertex", "phi_V", "lower", k3_vertex_value(alpha), "k=3", inputs=inputs),
        Bound("k3_vertex_proof", "phi_V", "lower", k3_vertex_proof_value(d, alpha), "k=3", inputs=inputs),
    ]


def cheeger_bounds(d: int, k: int, n: Number, lambda2: float) -> list[Bound]:
    inputs = {"d": d, "k": k, "n": n, "lambda2": lambda2}
    return [
        Bound("cheeger_edge", "h_e", "lower", max(0.0, (d - lambda2) / 2), "spectral-derived", inputs=inputs),
        Bound("cheeger_additive", "h_e", "descriptive", None, "spectral-derived",
              reason="(d - O(sqrt d))/2 when n >= mu - O(d^(k/2)); constants unspecified", inputs=inputs),
        Bound("cheeger_multiplicative", "h_e", "descriptive", None, "spectral-derived",
              reason="(1 - O(eps^(1/k))) d/2 when n >= (1 - eps) mu; constants unspecified", inputs=inputs),
    ]


def spectral_bound_entry(d: int, n: Number) -> Bound:
    inputs = {"d": d, "k": 2, "n": n}
    try:
        return Bound("k2_spectral", "lambda", "upper", spectral_bound_k2(d, n), "k=2", inputs=inputs)
    except VacuousBound as exc:
        return _na("k2_spectral", "lambda", "k=2", f"bound vacuous: {exc}", inputs, kind="upper")


def bound_set(d: int, k: int, n: Number, directed: bool = False, lambda2: float | None = None) -> list[Bound]:
    """Every row of the results table that applies to a (d, k) graph of size n."""
    if directed:
        return coarse_bounds_directed(d, k, n)
    if d < 2:
        raise ParameterError("undirected bounds need d >= 2")
    rows = coarse_bounds_undirected(d, k, n)
    if k == 2:
        rows.append(spectral_bound_entry(d, n))
        rows.extend(refined_bounds_k2(d, n))
    if k == 3:
        rows.extend(refined_bound_k3(d, n))
    if lambda2 is not None:
        rows.extend(cheeger_bounds(d, k, n, lambda2))
    return rows


def path_count_helpers(d: int, k: int, directed: bool = False) -> tuple[int, Fraction]:
    """Exact walk-count sum f and its closed-form upper bound.

    Undirected: ``f_{d-1}(k) = sum_l l (d-1)^(l-1) <= k (d-1)^k / (d-2)``.
    Directed: ``f_d(k) = sum_l l d^(l-1) <= k d^k / (d-1)``.
    """
    base = d if directed else d - 1
    if base < 2:
        raise ParameterError("path-count helpers need d >= 3 (undirected) or d >= 2 (directed)")
    f = sum(l * base ** (l - 1) for l in range(1, k + 1))
    return f, Fraction(k * base**k, base - 1)
