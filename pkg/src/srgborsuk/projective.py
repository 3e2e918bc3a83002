"""PG(3, q) over a prime field: points, lines, partial spreads, two-weight
sets, and the difference-set Cayley graph over GF(q)^4.

Points are normalized 4-tuples over GF(q) (first nonzero coordinate 1).
Hyperplanes are enumerated as normalized dual vectors with the same
normalization.  Vertex i+1 of a Cayley graph corresponds to the i-th
vector of GF(q)^4 in lexicographic order, most significant coordinate
first, so emitted graph files are byte-reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph
from .rootlattice import witting_point_set

Point = tuple[int, int, int, int]
Vector = tuple[int, int, int, int]

MAX_Q = 31


class ProjectiveError(ValueError):
    pass


class GreedyFailed(ProjectiveError):
    """Neither greedy scan nor backtracking produced enough disjoint lines."""


class NotTwoWeight(ProjectiveError):
    def __init__(self, hyperplane: Point, count: int, allowed: tuple[int, int]):
        super().__init__(
            f"hyperplane {hyperplane} meets the set in {count} points, "
            f"allowed {allowed}")
        self.hyperplane = hyperplane
        self.count = count
        self.allowed = allowed


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _check_q(q: int) -> None:
    if not _is_prime(q):
        raise ProjectiveError(f"q = {q} is not prime (prime-power fields unsupported)")
    if q > MAX_Q:
        raise ProjectiveError(f"q = {q} exceeds supported bound {MAX_Q}")


def normalize(v: Vector, q: int) -> Point:
    """Canonical representative of the projective point through v."""
    for x in v:
        if x % q:
            inv = pow(x % q, q - 2, q)
            return tuple((inv * c) % q for c in v)
    raise ProjectiveError("zero vector spans no point")


def pg_points(q: int) -> list[Point]:
    """All (q^4-1)/(q-1) points of PG(3, q), lexicographically sorted."""
    _check_q(q)
    pts = []
    for v in itertools.product(range(q), repeat=4):
        for x in v:
            if x:
                if x == 1:
                    pts.append(v)
                break
    return pts


def line_through(p1: Point, p2: Point, q: int) -> tuple[Point, ...]:
    """The q+1 points spanned by two distinct points, sorted."""
    if p1 == p2:
        raise ProjectiveError("a line needs two distinct points")
    pts = {p2}
    for t in range(q):
        pts.add(normalize(tuple((p1[i] + t * p2[i]) % q for i in range(4)), q))
    if len(pts) != q + 1:
        raise ProjectiveError("degenerate span")
    return tuple(sorted(pts))


def pg_lines(q: int) -> list[tuple[Point, ...]]:
    """All lines of PG(3, q), each as a sorted point tuple, sorted overall."""
    pts = pg_points(q)
    index = {p: i for i, p in enumerate(pts)}
    covered: set[tuple[int, int]] = set()
    lines = []
    for i, p1 in enumerate(pts):
        for j in range(i + 1, len(pts)):
            if (i, j) in covered:
                continue
            line = line_through(p1, pts[j], q)
            lines.append(line)
            ids = sorted(index[p] for p in line)
            covered.update(itertools.combinations(ids, 2))
    lines.sort()
    return lines


def find_partial_spread(q: int, count: int) -> list[tuple[Point, ...]]:
    """`count` pairwise disjoint lines, by greedy scan with backtracking.

    The scan over the canonical line list is deterministic, so the result
    is reproducible.
    """
    _check_q(q)
    n_points = (q ** 4 - 1) // (q - 1)
    if count * (q + 1) > n_points:
        raise ProjectiveError(f"{count} disjoint lines exceed {n_points} points")
    lines = pg_lines(q)
    chosen: list[tuple[Point, ...]] = []
    used: set[Point] = set()
    for line in lines:
        if used.isdisjoint(line):
            chosen.append(line)
            used.update(line)
            if len(chosen) == count:
                return chosen
    # greedy exhausted the list; retry exhaustively
    chosen.clear()

    def backtrack(start: int, used: frozenset) -> bool:
        if len(chosen) == count:
            return True
        for idx in range(start, len(lines)):
            line = lines[idx]
            if used.isdisjoint(line):
                chosen.append(line)
                if backtrack(idx + 1, used | frozenset(line)):
                    return True
                chosen.pop()
        return False

    if backtrack(0, frozenset()):
        return chosen
    raise GreedyFailed(f"no {count} pairwise disjoint lines in PG(3,{q})")


def hyperplane_histogram(pts: set[Point] | list[Point], q: int) -> dict[int, int]:
    """Count |H ∩ pts| for every hyperplane H; keys are counts."""
    _check_q(q)
    pts = list(pts)
    if not pts:
        raise ProjectiveError("empty point set")
    hist: dict[int, int] = {}
    for h in pg_points(q):
        c = sum(1 for p in pts
                if (h[0] * p[0] + h[1] * p[1] + h[2] * p[2] + h[3] * p[3]) % q == 0)
        hist[c] = hist.get(c, 0) + 1
    return hist


def verify_two_weight(pts, q: int, h1: int, h2: int) -> dict[int, int]:
    """Certify that every hyperplane meets pts in h1 or h2 points.

    Returns the intersection histogram on success; raises NotTwoWeight with
    a witness hyperplane otherwise.
    """
    pts = list(pts)
    if not pts:
        raise ProjectiveError("empty point set")
    allowed = (h1, h2)
    hist: dict[int, int] = {}
    for h in pg_points(q):
        c = sum(1 for p in pts
                if (h[0] * p[0] + h[1] * p[1] + h[2] * p[2] + h[3] * p[3]) % q == 0)
        if c not in allowed:
            raise NotTwoWeight(h, c, allowed)
        hist[c] = hist.get(c, 0) + 1
    return hist


def connection_set(pts, q: int) -> set[Vector]:
    """All nonzero scalar multiples of the given projective points."""
    _check_q(q)
    out: set[Vector] = set()
    for p in pts:
        for c in range(1, q):
            out.add(tuple((c * x) % q for x in p))
    return out


def index_of_vector(v: Vector, q: int) -> int:
    """0-based index of v in the lexicographic vector order."""
    return ((v[0] * q + v[1]) * q + v[2]) * q + v[3]


def vector_of_index(i: int, q: int) -> Vector:
    d = i % q
    i //= q
    c = i % q
    i //= q
    b = i % q
    return (i // q, b, c, d)


def cayley_graph(connection: set[Vector], q: int) -> Graph:
    """Cayley graph of (GF(q)^4, +) with the given symmetric connection set."""
    _check_q(q)
    if (0, 0, 0, 0) in connection:
        raise ProjectiveError("connection set contains the zero vector")
    for d in connection:
        if tuple((-x) % q for x in d) not in connection:
            raise ProjectiveError(f"connection set not closed under negation at {d}")
    n = q ** 4
    q3, q2 = q ** 3, q ** 2
    deltas = sorted(connection)
    rows = [0] * n
    for i, u in enumerate(itertools.product(range(q), repeat=4)):
        a, b, c, e = u
        row = 0
        for da, db, dc, de in deltas:
            row |= 1 << (((a + da) % q) * q3 + ((b + db) % q) * q2
                         + ((c + dc) % q) * q + ((e + de) % q))
        rows[i] = row
    return Graph(n, rows)


@dataclass(frozen=True)
class Srg2401Build:
    """Everything the 2401-vertex pipeline derives, bundled for reporting."""

    points: tuple[Point, ...]
    histogram: dict[int, int]
    connection: tuple[Vector, ...]
    graph: Graph


def build_srg2401(verify_weights: bool = True) -> Srg2401Build:
    """Derive the 40-point set from the E8 reduction and build its Cayley graph.

    A 5-line partial spread also realizes hyperplane intersections {5, 12},
    but its connection set contains whole 2-dimensional subspaces, which
    forces 49-cliques; the root-system set has no full line and gives the
    clique-9 graph, so that is what the pipeline uses.
    """
    q = 7
    points = tuple(witting_point_set(q))
    hist = verify_two_weight(points, q, 12, 5) if verify_weights \
        else hyperplane_histogram(points, q)
    conn = connection_set(points, q)
    graph = cayley_graph(conn, q)
    return Srg2401Build(points, hist, tuple(sorted(conn)), graph)
