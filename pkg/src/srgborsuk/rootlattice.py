"""Derivation of the 40-point two-weight set from the E8 root system.

The 240 roots of E8 carry a fixed-point-free lattice automorphism J of
order 3 (rotation by 120 degrees in four pairwise orthogonal A2 planes),
which turns the lattice into a rank-4 module over the Eisenstein integers
Z[w], w^2 + w + 1 = 0.  For a prime q = 1 (mod 3), reducing Z[w]-coordinates
modulo a prime above q maps the 240 roots onto 240 distinct nonzero vectors
of GF(q)^4 that close under scalars, i.e. onto 40 projective points.  The
stabilizer of this configuration is why the resulting Cayley graph has a
tiny clique number compared to spread-type constructions.

Everything below is exact integer/rational arithmetic and fully
deterministic (lexicographic scans, no randomness), so the derived point
set is reproducible byte for byte.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def e8_roots_doubled() -> list[tuple[int, ...]]:
    """The 240 roots of E8 in the even coordinate system, scaled by 2.

    Doubling keeps the half-integer roots integral: norms become 8 and the
    A2 inner product -1 becomes -4.  Order is fixed: +-2e_i +-2e_j pairs
    first (i < j, sign pairs in (+,+), (+,-), (-,+), (-,-) order), then the
    (+-1)^8 vectors with an even number of minus signs in lexicographic
    sign order.
    """
    roots: list[tuple[int, ...]] = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (2, -2):
                for sj in (2, -2):
                    v = [0] * 8
                    v[i] = si
                    v[j] = sj
                    roots.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=8):
        neg = sum(1 for s in signs if s < 0)
        if neg % 2 == 0:
            roots.append(signs)
    assert len(roots) == 240
    return roots


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _e8_basis_doubled() -> list[tuple[int, ...]]:
    """Integral basis of (doubled) E8: seven D8-type roots plus a spinor one."""
    rows = [
        (2, -2, 0, 0, 0, 0, 0, 0),
        (0, 2, -2, 0, 0, 0, 0, 0),
        (0, 0, 2, -2, 0, 0, 0, 0),
        (0, 0, 0, 2, -2, 0, 0, 0),
        (0, 0, 0, 0, 2, -2, 0, 0),
        (0, 0, 0, 0, 0, 2, -2, 0),
        (0, 0, 0, 0, 0, 2, 2, 0),
        (-1, -1, -1, -1, -1, -1, -1, -1),
    ]
    return rows


def _mat_inverse(m: list[list[int]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _int_det(m: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a small integer matrix."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                a[r][c] = (a[col][col] * a[r][c] - a[r][col] * a[col][c]) // prev
            a[r][col] = 0
        prev = a[col][col]
    return sign * prev


def _matmul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def _find_a2_planes(roots: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Four pairwise orthogonal A2 pairs (r, s) with <r, s> = -4, greedily."""
    pairs = []
    chosen: list[tuple[int, ...]] = []
    for r in roots:
        if any(_dot(r, u) != 0 for u in chosen):
            continue
        s = next((c for c in roots
                  if _dot(c, r) == -4 and all(_dot(c, u) == 0 for u in chosen)), None)
        if s is None:
            continue
        pairs.append((r, s))
        chosen.extend((r, s))
        if len(pairs) == 4:
            return pairs
    raise ValueError("no orthogonal A2 quadruple found")


def witting_point_set(q: int = 7) -> list[tuple[int, int, int, int]]:
    """The 40 projective points of PG(3, 7) obtained by reducing the E8 roots.

    Only q = 7 is supported: the six Eisenstein units have to fill all of
    GF(q)* for the reduced root set to be closed under scalars, which pins
    q - 1 = 6.  Returns normalized points (first nonzero coordinate 1) in
    sorted order.
    """
    if q != 7:
        raise ValueError("Eisenstein reduction of E8 closes under scalars only for q=7")
    omega = next(w for w in range(2, q) if (w * w * w) % q == 1 and w != 1)

    roots = e8_roots_doubled()
    pairs = _find_a2_planes(roots)

    # J maps r -> s, s -> -r-s on each plane; express J in E8-lattice coordinates.
    b_cols = [v for pair in pairs for v in pair]                       # r1 s1 r2 s2 ...
    jb_cols = [w for (r, s) in pairs
               for w in (s, tuple(-x - y for x, y in zip(r, s)))]
    basis = _e8_basis_doubled()
    s_mat = [[basis[j][i] for j in range(8)] for i in range(8)]        # columns = basis
    s_inv = _mat_inverse(s_mat)
    b_mat = [[b_cols[j][i] for j in range(8)] for i in range(8)]
    jb_mat = [[jb_cols[j][i] for j in range(8)] for i in range(8)]
    j_amb = _matmul(jb_mat, _mat_inverse(b_mat))                        # J on R^8
    j_lat = _matmul(_matmul(s_inv, j_amb), s_mat)
    j_int = [[int(x) for x in row] for row in j_lat]
    if any(j_lat[i][j] != j_int[i][j] for i in range(8) for j in range(8)):
        raise AssertionError("order-3 symmetry is not integral on the lattice")
    jj = _matmul(j_int, j_int)
    if any(jj[i][j] + j_int[i][j] + (1 if i == j else 0) != 0
           for i in range(8) for j in range(8)):
        raise AssertionError("J^2 + J + I != 0")

    # roots in lattice coordinates (columns)
    root_lat = []
    for r in roots:
        coord = [sum(s_inv[i][t] * r[t] for t in range(8)) for i in range(8)]
        ints = [int(x) for x in coord]
        if any(coord[i] != ints[i] for i in range(8)):
            raise AssertionError("root not in lattice span")
        root_lat.append(ints)

    # Z[w]-basis: four roots v with [v1 Jv1 v2 Jv2 v3 Jv3 v4 Jv4] unimodular
    def with_j(idx: tuple[int, ...]) -> list[list[int]]:
        cols = []
        for t in idx:
            v = root_lat[t]
            cols.append(v)
            cols.append([sum(j_int[i][u] * v[u] for u in range(8)) for i in range(8)])
        return [[cols[j][i] for j in range(8)] for i in range(8)]

    m_mat = None
    for idx in itertools.combinations(range(240), 4):
        cand = with_j(idx)
        if abs(_int_det(cand)) == 1:
            m_mat = cand
            break
    if m_mat is None:
        raise AssertionError("no unimodular Eisenstein basis among root quadruples")
    m_inv_frac = _mat_inverse(m_mat)
    m_inv = [[int(x) for x in row] for row in m_inv_frac]
    if any(m_inv_frac[i][j] != m_inv[i][j] for i in range(8) for j in range(8)):
        raise AssertionError("unimodular inverse not integral")

    vectors = set()
    for rl in root_lat:
        coeff = [sum(m_inv[i][t] * rl[t] for t in range(8)) for i in range(8)]
        vec = tuple((coeff[2 * i] + omega * coeff[2 * i + 1]) % q for i in range(4))
        vectors.add(vec)
    if len(vectors) != 240 or (0, 0, 0, 0) in vectors:
        raise AssertionError("mod-q reduction collapsed the root system")

    points = sorted(set(_normalize(v, q) for v in vectors))
    if len(points) != 40:
        raise AssertionError("reduction did not give 40 projective points")
    closure = {tuple((c * x) % q for x in p) for p in points for c in range(1, q)}
    if closure != vectors:
        raise AssertionError("reduced root set is not scalar-closed")
    return points


def _normalize(v: tuple[int, ...], q: int) -> tuple[int, ...]:
    for x in v:
        if x:
            inv = pow(x, q - 2, q)
            return tuple((inv * c) % q for c in v)
    raise ValueError("zero vector has no projective point")
