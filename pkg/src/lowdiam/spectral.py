"""Adjacency spectra, lambda(G) and the diameter-2 eigenvalue bound."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from lowdiam.graph import Graph, adjacency_matrix, degree_profile
from lowdiam.moore import MooreProfile, ParameterError


class VacuousBound(ValueError):
    """The closed-form bound has no real value for these parameters."""


@dataclass(frozen=True)
class SpectralReport:
    eigenvalues: tuple[float, ...]
    lambda_G: float | None
    spectral_gap: float | None
    solver_residual: float

    @property
    def lambda2(self) -> float | None:
        return self.eigenvalues[1] if len(self.eigenvalues) > 1 else None


def spectrum(g: Graph) -> SpectralReport:
    """Full spectrum via a dense symmetric eigensolver.

    ``spectral_gap`` is ``d - lambda(G)`` with d the regular degree, or the
    top eigenvalue when the graph is not regular.
    """
    if g.directed:
        raise ParameterError("spectral analysis needs an undirected graph")
    a = adjacency_matrix(g).astype(float)
    w, v = np.linalg.eigh(a)
    residual = float(np.max(np.abs(a @ v - v * w))) if g.n else 0.0
    eig = tuple(float(x) for x in w[::-1])
    if g.n < 2:
        return SpectralReport(eig, None, None, residual)
    lam = max(abs(eig[1]), abs(eig[-1]))
    prof = degree_profile(g)
    top = prof.d if prof.is_regular else eig[0]
    return SpectralReport(eig, lam, top - lam, residual)


def spectral_bound_k2(d: int, n: int) -> float:
    """Upper bound on lambda(G) for a d-regular diameter-2 graph on n vertices."""
    radicand = 1 + 4 * (d * d + d - n)
    if radicand < 0:
        raise VacuousBound(f"n={n} exceeds the range of the bound for d={d}")
    return (1 + math.sqrt(radicand)) / 2


@dataclass(frozen=True)
class RegimeReport:
    """Indicative scales only: the underlying asymptotic statements hide constants."""

    d: int
    k: int
    n: int
    additive_gap: int
    sqrt_scale: float
    within_sqrt_scale: bool
    epsilon: Fraction
    indicative_lambda_scale: float
    label: str = "indicative, constants unspecified in source"


def regime_report(p: MooreProfile) -> RegimeReport:
    if p.n is None:
        raise ParameterError("regime report needs a size n")
    scale = p.d ** (p.k / 2)
    eps = p.epsilon
    return RegimeReport(
        p.d, p.k, p.n, p.additive_gap, scale, p.additive_gap <= scale, eps,
        float(eps) ** (1 / p.k) * p.d if eps >= 0 else math.nan,
    )
