"""Exact lattice linear algebra for simplicial cones.

Nothing here touches floating point: determinants use fraction-free
elimination and inverses are computed over :class:`fractions.Fraction`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .errors import NotFullDimensional, NotSmooth, ZeroVector
from .root_datum import RootDatum


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ZeroVector("the zero vector has no primitive multiple")
    return tuple(int(x) // g for x in v)


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rational_inverse(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals; raises ValueError if singular."""
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def integer_inverse(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    inv = rational_inverse(rows)
    if any(x.denominator != 1 for r in inv for x in r):
        raise ValueError("matrix is not unimodular")
    return tuple(tuple(int(x) for x in r) for r in inv)


@dataclass(frozen=True)
class Cone:
    """A simplicial cone given by primitive ray generators (cocharacter coordinates)."""

    rays: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(primitive(r) for r in self.rays))

    @property
    def dim(self) -> int:
        return len(self.rays)

    def ray_matrix(self) -> list[list[int]]:
        """Rays as columns."""
        return [list(col) for col in zip(*self.rays)]


def _full_dim_check(rank: int, c: Cone):
    if c.dim != rank or any(len(r) != rank for r in c.rays):
        raise NotFullDimensional(f"cone with {c.dim} rays in a rank {rank} lattice")


def _rank_of(rd) -> int:
    return rd if isinstance(rd, int) else rd.rank


def is_unimodular(rd: RootDatum | int, c: Cone) -> bool:
    _full_dim_check(_rank_of(rd), c)
    return abs(determinant(c.rays)) == 1


def coefficients(c: Cone, x: Sequence) -> list[Fraction]:
    """Coordinates of ``x`` in the basis of rays of a full-dimensional simplicial cone."""
    inv = rational_inverse(c.ray_matrix())
    return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in inv]


def contains(c: Cone, x: Sequence) -> bool:
    return all(lam >= 0 for lam in coefficients(c, x))


def dual_basis(rd: RootDatum | int, c: Cone) -> tuple[tuple[int, ...], ...]:
    """Characters chi_1..chi_n with <chi_i, ray_j> = delta_ij.

    These are the rows of the inverse of the ray matrix (rays as columns) and
    they generate the dual cone.
    """
    _full_dim_check(_rank_of(rd), c)
    if abs(determinant(c.rays)) != 1:
        raise NotSmooth(f"cone {c.rays} has determinant {determinant(c.rays)}")
    return integer_inverse(c.ray_matrix())


@lru_cache(maxsize=None)
def _inverse_cartan_transpose(cartan):
    # chi = sum_i c_i alpha_i with alpha_i = row i of A, so c = A^{-T} chi.
    return tuple(map(tuple, rational_inverse([list(col) for col in zip(*cartan)])))


def to_root_coordinates(rd: RootDatum, chi: Sequence[int]) -> list[Fraction]:
    """Express a character in the basis of simple roots."""
    if not rd.simply_connected:
        return [Fraction(x) for x in chi]
    inv_t = _inverse_cartan_transpose(rd.cartan)
    return [sum((a * b for a, b in zip(row, chi)), Fraction(0)) for row in inv_t]


def lex_sign(rd: RootDatum | int | None, chi: Sequence[int], order: Sequence[int] | None = None) -> Sign:
    """Lexicographic sign of ``chi`` in simple-root coordinates.

    ``order`` permutes which simple root is compared first.  With an integer or
    ``None`` datum the coordinates of ``chi`` are used as they are.
    """
    coords = chi if rd is None or isinstance(rd, int) else to_root_coordinates(rd, chi)
    idx = order if order is not None else range(len(coords))
    for i in idx:
        if coords[i] > 0:
            return Sign.POSITIVE
        if coords[i] < 0:
            return Sign.NEGATIVE
    return Sign.ZERO


# --- exact feasibility -----------------------------------------------------


def _fm_feasible(ineqs: list[tuple[list[Fraction], Fraction]], nvars: int) -> bool:
    """Is ``{x : a.x >= b for (a, b) in ineqs}`` nonempty?  Fourier-Motzkin."""
    for k in range(nvars):
        pos, neg, rest = [], [], []
        for a, b in ineqs:
            if a[k] > 0:
                pos.append((a, b))
            elif a[k] < 0:
                neg.append((a, b))
            else:
                rest.append((a, b))
        new = rest
        for ap, bp in pos:
            for an, bn in neg:
                sp, sn = ap[k], -an[k]
                a = [sn * x + sp * y for x, y in zip(ap, an)]
                a[k] = Fraction(0)
                new.append((a, sn * bp + sp * bn))
        ineqs = _dedupe(new)
    return all(b <= 0 for _, b in ineqs)


def _dedupe(ineqs):
    # Keep the tightest bound per normalised direction; constant rows collapse
    # to a single row with the largest right-hand side.
    best = {}
    for a, b in ineqs:
        s = next((abs(x) for x in a if x != 0), Fraction(1))
        key = tuple(x / s for x in a)
        val = b / s
        if key not in best or val > best[key]:
            best[key] = val
    return [(list(k), v) for k, v in best.items()]


def common_face(rd: RootDatum | int, c1: Cone, c2: Cone) -> bool:
    """Does ``c1 & c2`` equal the cone spanned by their shared rays?"""
    n = _rank_of(rd)
    _full_dim_check(n, c1)
    _full_dim_check(n, c2)
    return _common_face(n, c1, c2, rational_inverse(c1.ray_matrix()), rational_inverse(c2.ray_matrix()))


def _common_face(n, c1, c2, h1, h2) -> bool:
    # Any point of c1 & c2 with a positive c1-coefficient on a non-shared ray
    # witnesses a bad intersection.
    shared = set(c1.rays) & set(c2.rays)
    base = [(list(row), Fraction(0)) for row in h1] + [(list(row), Fraction(0)) for row in h2]
    for j, r in enumerate(c1.rays):
        if r in shared:
            continue
        if _fm_feasible(base + [(list(h1[j]), Fraction(1))], n):
            return False
    return True


def pairwise_common_faces(rank: int, cones: Sequence[Cone]) -> bool:
    """``common_face`` for every pair, inverting each ray matrix once."""
    inverses = [rational_inverse(c.ray_matrix()) for c in cones]
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            if not _common_face(rank, cones[i], cones[j], inverses[i], inverses[j]):
                return False
    return True
