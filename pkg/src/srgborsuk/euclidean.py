"""Two-distance Euclidean representation y = A - sI of a strongly regular
graph: representation vectors, Gram access, two-distance verification,
exact affine dimension, and dimension-drop certificates.

Certificate checking works for any graph and any negative integer s, not
just SRG eigenvalues: the inner-product algebra never uses strong
regularity, and the planted-partition test harness relies on that.
Dimension claims, by contrast, go through exact rational rank (fraction-
free elimination) or modular lower bounds; a modular rank can confirm a
drop but never refute one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, vertex_set, verify_srg
from .srgmath import (DistanceSquares, GramEntries, SrgParams, Spectrum,
                      distance_squares, gram_entries, spectrum)

DEFAULT_EXACT_BUDGET = 1500
DEFAULT_RANK_PRIMES = (1_000_000_007, 998_244_353, 754_974_721)


class BudgetExceeded(ValueError):
    pass


class MismatchWitness(ValueError):
    def __init__(self, pair: tuple[int, int], got: int, expected: int):
        super().__init__(
            f"pair {pair}: squared distance {got}, expected {expected}")
        self.pair = pair
        self.got = got
        self.expected = expected


@dataclass(frozen=True)
class EuclideanRep:
    """Graph bundled with its verified parameters and closed-form metrics."""

    graph: Graph
    params: SrgParams
    spectrum: Spectrum
    gram: GramEntries
    dist2: DistanceSquares

    @classmethod
    def from_graph(cls, g: Graph, params: SrgParams | None = None) -> "EuclideanRep":
        if params is None:
            params = verify_srg(g)
        sp = spectrum(params)
        return cls(g, params, sp, gram_entries(params, sp), distance_squares(params, sp))

    def check_drop(self, cert: "DropCertificate") -> "CertificateCheck":
        return check_drop_certificate(self.graph, self.spectrum.s, cert)


def rep_vector(rep: EuclideanRep, i: int) -> list[int]:
    """Column i of A - sI as an explicit integer vector of length v."""
    g = rep.graph
    row = g.row(i)
    s = rep.spectrum.s
    vec = [(row >> t) & 1 for t in range(g.n)]
    vec[i - 1] = -s
    return vec


def gram_value(rep: EuclideanRep, i: int, j: int) -> int:
    """<y_i, y_j> from the closed-form entries."""
    if i == j:
        rep.graph._check(i)
        return rep.gram.diag
    return rep.gram.adj if rep.graph.adjacent(i, j) else rep.gram.non


def explicit_gram(rep: EuclideanRep, i: int, j: int) -> int:
    """<y_i, y_j> recomputed from the adjacency rows, not the closed form."""
    g = rep.graph
    s = rep.spectrum.s
    if i == j:
        return s * s + g.degree(i)
    common = (g.row(i) & g.row(j)).bit_count()
    return common + (-2 * s if g.adjacent(i, j) else 0)


def explicit_dist2(g: Graph, s: int, i: int, j: int) -> int:
    """||y_i - y_j||^2 summed coordinate-wise from the rows of A - sI."""
    ri, rj = g.row(i), g.row(j)
    a = (ri >> (j - 1)) & 1
    diff = ri ^ rj
    diff &= ~(1 << (i - 1))
    diff &= ~(1 << (j - 1))
    return 2 * (s + a) ** 2 + diff.bit_count()


@dataclass
class TwoDistanceReport:
    adjacent_checked: int
    non_adjacent_checked: int
    exhaustive: bool


def verify_two_distance(rep: EuclideanRep, sample: int | None = None,
                        seed: int = 0) -> TwoDistanceReport:
    """Check ||y_i - y_j||^2 against the two closed-form values.

    sample=None checks every pair; otherwise `sample` distinct random pairs
    drawn with the given seed.  Raises MismatchWitness on the first failing
    pair.
    """
    g = rep.graph
    if rep.params.is_complete:
        raise ValueError("two-distance check needs a non-complete graph")
    s = rep.spectrum.s
    d_adj, d_non = rep.dist2.adj, rep.dist2.non
    n_adj = n_non = 0
    if sample is None:
        pair_iter: Iterable[tuple[int, int]] = (
            (i, j) for i in range(1, g.n + 1) for j in range(i + 1, g.n + 1))
    else:
        rng = random.Random(seed)

        def draw():
            seen = set()
            while len(seen) < sample:
                i = rng.randrange(1, g.n + 1)
                j = rng.randrange(1, g.n + 1)
                if i == j:
                    continue
                p = (min(i, j), max(i, j))
                if p in seen:
                    continue
                seen.add(p)
                yield p
        pair_iter = draw()
    for i, j in pair_iter:
        got = explicit_dist2(g, s, i, j)
        if g.adjacent(i, j):
            n_adj += 1
            if got != d_adj:
                raise MismatchWitness((i, j), got, d_adj)
        else:
            n_non += 1
            if got != d_non:
                raise MismatchWitness((i, j), got, d_non)
    return TwoDistanceReport(n_adj, n_non, sample is None)


# --- dimension-drop certificates -------------------------------------------

@dataclass(frozen=True)
class DropCertificate:
    """x, c with <x, y_i> = c on inner_set and != c at the witness.

    Acceptance proves dim P(inner_set) <= dim P(outer_set) - 1.  x is
    sparse: a tuple of (vertex, value) pairs for its nonzero entries.
    """

    x: tuple[tuple[int, int], ...]
    c: int
    inner_set: tuple[int, ...]
    outer_set: tuple[int, ...]
    witness: int

    def __post_init__(self):
        if self.witness not in self.outer_set:
            raise ValueError("witness must belong to the outer set")
        if not set(self.inner_set) <= set(self.outer_set):
            raise ValueError("inner set must be contained in the outer set")


@dataclass(frozen=True)
class CertificateCheck:
    accepted: bool
    failing_vertex: int | None = None
    reason: str = ""


def column_inner(g: Graph, s: int, x: Sequence[tuple[int, int]], i: int) -> int:
    """<x, y_i> where y = A - sI, for sparse integer x."""
    row = g.row(i)
    total = 0
    for t, val in x:
        if t == i:
            total += val * (-s)
        elif (row >> (t - 1)) & 1:
            total += val
    return total


def check_drop_certificate(g: Graph, s: int, cert: DropCertificate) -> CertificateCheck:
    """Accept iff <x, y_i> = c for all inner vertices and differs at the witness."""
    for i in cert.inner_set:
        got = column_inner(g, s, cert.x, i)
        if got != cert.c:
            return CertificateCheck(False, i, f"<x, y_{i}> = {got} != {cert.c}")
    w = column_inner(g, s, cert.x, cert.witness)
    if w == cert.c:
        return CertificateCheck(False, cert.witness,
                                f"witness inner product equals c = {cert.c}")
    return CertificateCheck(True)


def non_neighbourhood_certificate(rep: EuclideanRep, a: int) -> DropCertificate:
    """The classical drop: x = y_a, c = mu, inner set = non-neighbours of a."""
    g = rep.graph
    x = [(a, -rep.spectrum.s)]
    x += [(t, 1) for t in g.neighbours(a)]
    inner = g.non_neighbourhood(a)
    outer = tuple(range(1, g.n + 1))
    return DropCertificate(tuple(x), rep.params.mu, inner, outer, a)


# --- affine dimension -------------------------------------------------------

def _centered_gram(rep: EuclideanRep, w: Sequence[int]) -> list[list[int]]:
    ws = vertex_set(w, rep.graph.n)
    base = ws[0]
    rest = ws[1:]
    g0 = gram_value(rep, base, base)

    def gv(i, j):
        return gram_value(rep, i, j)

    return [[gv(a, b) - gv(a, base) - gv(base, b) + g0 for b in rest] for a in rest]


def _bareiss_rank(m: list[list[int]]) -> int:
    rows = len(m)
    if rows == 0:
        return 0
    cols = len(m[0])
    a = [row[:] for row in m]
    prev = 1
    rank = 0
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = next((t for t in range(r, rows) if a[t][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pivval = a[r][c]
        for t in range(r + 1, rows):
            row_t, row_r = a[t], a[r]
            f = row_t[c]
            for u in range(c + 1, cols):
                row_t[u] = (pivval * row_t[u] - f * row_r[u]) // prev
            row_t[c] = 0
        prev = pivval
        rank += 1
        r += 1
    return rank


def affine_dim_exact(rep: EuclideanRep, w: Sequence[int],
                     budget: int = DEFAULT_EXACT_BUDGET) -> int:
    """Exact affine dimension of {y_i : i in w} over the rationals.

    Rank of the doubly centered Gram matrix, base point the smallest vertex
    of w, by fraction-free integer elimination.
    """
    ws = vertex_set(w, rep.graph.n)
    if not ws:
        raise ValueError("need at least one vertex")
    if len(ws) > budget:
        raise BudgetExceeded(f"|W| = {len(ws)} exceeds exact budget {budget}")
    if len(ws) == 1:
        return 0
    return _bareiss_rank(_centered_gram(rep, ws))


def affine_dim_lower_mod_p(rep: EuclideanRep, w: Sequence[int],
                           primes: Sequence[int] = DEFAULT_RANK_PRIMES) -> int:
    """Best modular-rank lower bound for the affine dimension of {y_i : i in w}.

    Always <= the true dimension.  Primes must exceed v*(s^2+k) so entries
    embed without collapsing small values.
    """
    ws = vertex_set(w, rep.graph.n)
    if not ws:
        raise ValueError("need at least one vertex")
    floor = rep.graph.n * rep.gram.diag
    for p in primes:
        if p <= floor:
            raise ValueError(f"prime {p} too small; need > {floor}")
    if len(ws) == 1:
        return 0
    m = np.array(_centered_gram(rep, ws), dtype=np.int64)
    return max(_rank_mod_p(m, p) for p in primes)


def _rank_mod_p(m: np.ndarray, p: int) -> int:
    a = np.mod(m, p)
    rows, cols = a.shape
    rank = 0
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        rest = a[r + 1:, c]
        nzr = np.nonzero(rest)[0]
        if nzr.size:
            idx = r + 1 + nzr
            factors = a[idx, c][:, None]
            a[idx, c:] = (a[idx, c:] - factors * a[r, c:][None, :]) % p
        rank += 1
        r += 1
    return rank
