"""Exact Moore-bound arithmetic for undirected and directed regimes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from lowdiam.graph import Graph, degree_profile, diameter


class ParameterError(ValueError):
    """A degree, diameter or size outside the admissible range."""


def _check_int(name: str, value: int, lo: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < lo:
        raise ParameterError(f"{name} must be an integer >= {lo}, got {value!r}")


def moore_bound(d: int, k: int) -> int:
    """Largest conceivable order of a d-regular graph of diameter k."""
    _check_int("d", d, 2)
    _check_int("k", k, 1)
    if d == 2:
        return 2 * k + 1
    return 1 + d * ((d - 1) ** k - 1) // (d - 2)


def moore_bound_sum(d: int, k: int) -> int:
    """Level-by-level sum ``1 + d + d(d-1) + ... + d(d-1)^(k-1)``."""
    _check_int("d", d, 2)
    _check_int("k", k, 1)
    return 1 + sum(d * (d - 1) ** (i - 1) for i in range(1, k + 1))


def directed_moore_bound(d: int, k: int) -> int:
    _check_int("d", d, 1)
    _check_int("k", k, 1)
    if d == 1:
        return k + 1
    return (d ** (k + 1) - 1) // (d - 1)


@dataclass(frozen=True)
class MooreProfile:
    """Moore-bound accounting for one (d, k[, n]) triple.

    ``alpha`` and ``epsilon`` are exact rationals; they are None when no
    size was supplied.
    """

    d: int
    k: int
    n: int | None
    regime: str
    mu: int

    @property
    def additive_gap(self) -> int | None:
        return None if self.n is None else self.mu - self.n

    @property
    def alpha(self) -> Fraction | None:
        return None if self.n is None else Fraction(self.n, self.mu)

    @property
    def epsilon(self) -> Fraction | None:
        return None if self.n is None else 1 - Fraction(self.n, self.mu)


def profile_params(d: int, k: int, n: int | None = None, directed: bool = False) -> MooreProfile:
    mu = directed_moore_bound(d, k) if directed else moore_bound(d, k)
    if n is not None:
        _check_int("n", n, 1)
    return MooreProfile(d, k, n, "directed" if directed else "undirected", mu)


def profile(g: Graph, force_d: int | None = None) -> MooreProfile:
    """Profile a graph; ``force_d`` overrides the degree of a non-regular graph."""
    prof = degree_profile(g)
    d = force_d if force_d is not None else prof.d
    if d is None:
        raise ParameterError(
            f"graph is not regular (degrees {prof.min_degree}..{prof.max_degree}); supply a degree override"
        )
    diam = diameter(g)
    if not diam.finite:
        raise ParameterError("graph has infinite diameter")
    if diam.diameter < 1:
        raise ParameterError("graph has diameter 0")
    return profile_params(d, diam.diameter, g.n, directed=g.directed)
