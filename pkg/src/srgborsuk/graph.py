"""Finite simple graphs as dense per-vertex bit rows.

Vertex labels are 1-based in every public signature.  Internally rows are
Python integers used as bitsets, with bit j-1 of row i-1 set iff i ~ j;
this keeps neighbourhood intersection and popcount at word speed without
any compiled dependency.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .srgmath import SrgParams

MAX_VERTICES = 1 << 20


class GraphError(ValueError):
    pass


class NotRegular(GraphError):
    def __init__(self, vertex: int, degree: int, expected: int):
        super().__init__(
            f"vertex {vertex} has degree {degree}, expected {expected}")
        self.vertex = vertex
        self.degree = degree
        self.expected = expected


class NotStronglyRegular(GraphError):
    """Witnessed by a pair whose common-neighbour count breaks the pattern."""

    def __init__(self, pair: tuple[int, int], count: int, expected: int, adjacent: bool):
        kind = "adjacent" if adjacent else "non-adjacent"
        super().__init__(
            f"{kind} pair {pair} has {count} common neighbours, expected {expected}")
        self.pair = pair
        self.count = count
        self.expected = expected
        self.adjacent = adjacent


def vertex_set(vertices: Iterable[int], n: int) -> tuple[int, ...]:
    """Sorted duplicate-free tuple of 1-based labels, range-checked against n."""
    vs = sorted(set(vertices))
    if vs and (vs[0] < 1 or vs[-1] > n):
        bad = vs[0] if vs[0] < 1 else vs[-1]
        raise GraphError(f"vertex {bad} out of range 1..{n}")
    return tuple(vs)


class Graph:
    """Immutable simple loopless undirected graph on vertices 1..n."""

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: list[int]):
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        if n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} exceeds limit {MAX_VERTICES}")
        if len(rows) != n:
            raise GraphError("row count does not match vertex count")
        self.n = n
        self._rows = rows

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from unordered 1-based vertex pairs; edges are symmetrized."""
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        if n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} exceeds limit {MAX_VERTICES}")
        rows = [0] * n
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphError(f"edge ({i},{j}) has endpoint outside 1..{n}")
            if i == j:
                raise GraphError(f"loop edge at vertex {i}")
            rows[i - 1] |= 1 << (j - 1)
            rows[j - 1] |= 1 << (i - 1)
        return cls(n, rows)

    def row(self, a: int) -> int:
        """Adjacency bitmask of a; bit j-1 set iff a ~ j. Read-only use."""
        self._check(a)
        return self._rows[a - 1]

    def adjacent(self, a: int, b: int) -> bool:
        self._check(a)
        self._check(b)
        return bool((self._rows[a - 1] >> (b - 1)) & 1)

    def degree(self, a: int) -> int:
        return self.row(a).bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (i, j) with i < j, lexicographically sorted."""
        for i in range(self.n):
            r = self._rows[i] >> (i + 1)
            j = i + 1
            while r:
                low = r & -r
                yield (i + 1, j + low.bit_length())
                j += low.bit_length()
                r >>= low.bit_length()

    def neighbours(self, a: int) -> tuple[int, ...]:
        return _bits_to_vertices(self.row(a))

    def neighbours_in(self, a: int, w: Sequence[int]) -> tuple[int, ...]:
        """Members of w adjacent to a."""
        ws = vertex_set(w, self.n)
        row = self.row(a)
        return tuple(v for v in ws if (row >> (v - 1)) & 1)

    def degree_in(self, a: int, w_mask: int) -> int:
        """|N(a) ∩ w| with w given as a bitmask; internal fast path."""
        return (self.row(a) & w_mask).bit_count()

    def non_neighbourhood(self, a: int) -> tuple[int, ...]:
        """All vertices that are neither a nor adjacent to a."""
        self._check(a)
        mask = ((1 << self.n) - 1) & ~self._rows[a - 1] & ~(1 << (a - 1))
        return _bits_to_vertices(mask)

    def induced_subgraph(self, w: Sequence[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph on w relabelled 1..|w| plus the old->new label map."""
        ws = vertex_set(w, self.n)
        if not ws:
            raise GraphError("cannot induce a subgraph on an empty vertex set")
        relabel = {old: new + 1 for new, old in enumerate(ws)}
        rows = []
        for old in ws:
            r = self._rows[old - 1]
            new_row = 0
            for pos, other in enumerate(ws):
                if (r >> (other - 1)) & 1:
                    new_row |= 1 << pos
            rows.append(new_row)
        return Graph(len(ws), rows), relabel

    def _check(self, a: int) -> None:
        if not (1 <= a <= self.n):
            raise GraphError(f"vertex {a} out of range 1..{self.n}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._rows == other._rows

    def __hash__(self):
        return hash((self.n, tuple(self._rows)))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def _bits_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    base = 0
    while mask:
        low = mask & -mask
        base += low.bit_length()
        out.append(base)
        mask >>= low.bit_length()
    return tuple(out)


def _mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def verify_srg(g: Graph) -> SrgParams:
    """Confirm strong regularity by exhaustive pair counting.

    Returns the parameter set; complete graphs come back with mu=None.
    Raises NotRegular / NotStronglyRegular with a witness otherwise.
    """
    n = g.n
    if n < 2:
        raise GraphError("strong regularity needs at least two vertices")
    rows = g._rows
    k = rows[0].bit_count()
    for i in range(1, n):
        d = rows[i].bit_count()
        if d != k:
            raise NotRegular(i + 1, d, k)
    if k == n - 1:
        return SrgParams(n, k, k - 1, None)
    nbr_sets = [set(_bits_to_vertices(r)) for r in rows]
    lam = mu = None
    for i in range(n):
        ri = rows[i]
        ni = nbr_sets[i]
        for j in range(i + 2, n + 1):
            c = (ri & rows[j - 1]).bit_count()
            if j in ni:
                if lam is None:
                    lam = c
                elif c != lam:
                    raise NotStronglyRegular((i + 1, j), c, lam, True)
            else:
                if mu is None:
                    mu = c
                elif c != mu:
                    raise NotStronglyRegular((i + 1, j), c, mu, False)
    if lam is None:
        lam = 0          # only hit when k = 0 (edgeless graph)
    if mu is None:
        mu = 0
    return SrgParams(n, k, lam, mu)
