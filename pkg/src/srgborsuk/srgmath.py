"""Closed-form spectral and metric quantities of a strongly regular graph.

Everything here is exact integer arithmetic on parameter sets; no graph is
touched.  Python integers are unbounded, so the ~2^40-scale intermediates
of the multiplicity formula need no special handling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class SpectrumError(ValueError):
    pass


class ConferenceCase(SpectrumError):
    """Eigenvalue discriminant is not a perfect square (irrational spectrum)."""


class NonIntegralMultiplicity(SpectrumError):
    """The multiplicity formula does not yield an integer: infeasible parameters."""


class DisconnectedCase(SpectrumError):
    """mu = 0 (disjoint union of cliques): no three-eigenvalue spectrum."""


@dataclass(frozen=True)
class SrgParams:
    """Parameter set (v, k, lam, mu); mu is None exactly for complete graphs."""

    v: int
    k: int
    lam: int
    mu: int | None

    def __post_init__(self):
        v, k, lam, mu = self.v, self.k, self.lam, self.mu
        if not (0 <= lam <= k < v):
            raise ValueError(f"need 0 <= lam <= k < v, got {self}")
        if mu is None:
            if k != v - 1:
                raise ValueError("mu=None is reserved for complete graphs")
            return
        if not 0 <= mu <= k:
            raise ValueError(f"need 0 <= mu <= k, got {self}")
        if v > k + 1 and k * (k - lam - 1) != (v - k - 1) * mu:
            raise ValueError(
                f"parameter identity k(k-lam-1)=(v-k-1)mu fails for {self}")

    @property
    def is_complete(self) -> bool:
        return self.mu is None

    def as_tuple(self) -> tuple[int, int, int, int | None]:
        return (self.v, self.k, self.lam, self.mu)


@dataclass(frozen=True)
class Spectrum:
    """Integer eigenvalue data: k, r (multiplicity f) and s (negative)."""

    disc: int
    sqrt_disc: int
    r: int
    s: int
    f: int


@dataclass(frozen=True)
class GramEntries:
    """Inner products of the representation vectors y_i = columns of A - sI."""

    diag: int
    adj: int
    non: int


@dataclass(frozen=True)
class DistanceSquares:
    """Squared distances between distinct representation vectors."""

    adj: int
    non: int
    excess: int


def spectrum(p: SrgParams) -> Spectrum:
    """Exact integer spectrum of a non-complete, non-degenerate srg."""
    if p.is_complete:
        raise SpectrumError("complete graph has no two-distance spectrum")
    v, k, lam, mu = p.v, p.k, p.lam, p.mu
    if mu == 0:
        raise DisconnectedCase(
            f"{p} is a disjoint union of cliques; spectrum formulas do not apply")
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    root = math.isqrt(disc)
    if root * root != disc:
        raise ConferenceCase(f"discriminant {disc} of {p} is not a perfect square")
    r = (lam - mu + root) // 2
    s = (lam - mu - root) // 2
    num = 2 * k + (v - 1) * (lam - mu)
    if num % root != 0:
        raise NonIntegralMultiplicity(f"{num} not divisible by sqrt disc {root}")
    inner = v - 1 - num // root
    if inner % 2 != 0:
        raise NonIntegralMultiplicity(f"multiplicity formula gives {inner}/2")
    f = inner // 2
    if not 0 < f < v - 1:
        raise NonIntegralMultiplicity(f"multiplicity {f} outside 1..{v - 2}")
    if k + f * r + (v - 1 - f) * s != 0:
        raise NonIntegralMultiplicity(f"trace identity fails for {p}")
    return Spectrum(disc, root, r, s, f)


def gram_entries(p: SrgParams, sp: Spectrum) -> GramEntries:
    """<y_i, y_j> for i=j, adjacent, and non-adjacent pairs."""
    return GramEntries(
        diag=sp.s * sp.s + p.k,
        adj=p.lam - 2 * sp.s,
        non=p.mu,
    )


def distance_squares(p: SrgParams, sp: Spectrum) -> DistanceSquares:
    """||y_i - y_j||^2 for adjacent and non-adjacent pairs; excess is their gap."""
    s = sp.s
    adj = 2 * (p.k - p.lam + s * s + 2 * s)
    non = 2 * (p.k - p.mu + s * s)
    return DistanceSquares(adj=adj, non=non, excess=non - adj)
