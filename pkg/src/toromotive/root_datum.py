"""Root data of irreducible types, Weyl group enumeration and the lattice action.

Coordinates
-----------
``A[i][j] = <alpha_i, alpha_j^vee>``.  For a simply connected datum characters
are written in the fundamental-weight basis and cocharacters in the
simple-coroot basis; for an adjoint datum characters are in the simple-root
basis and cocharacters in the fundamental-coweight basis.  In both cases the
pairing of a character with a cocharacter is the plain dot product.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial

from .errors import DimensionMismatch, GroupTooLarge, InvalidRank

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

WEYL_GUARD = 10**6


class LatticeKind(str, enum.Enum):
    SIMPLY_CONNECTED = "simply_connected"
    ADJOINT = "adjoint"


_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: 6 <= n <= 8,
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_OK:
            raise InvalidRank(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_OK[self.family](self.rank):
            raise InvalidRank(f"rank {self.rank} not allowed for type {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def _e(i, dim, c=1):
    v = [Fraction(0)] * dim
    v[i] = Fraction(c)
    return v


def _sub(u, v):
    return [a - b for a, b in zip(u, v)]


def _add(u, v):
    return [a + b for a, b in zip(u, v)]


def _euclidean_simple_roots(ct: CartanType) -> list[list[Fraction]]:
    """Bourbaki realisations of the simple roots."""
    n, fam = ct.rank, ct.family
    if fam == "A":
        d = n + 1
        return [_sub(_e(i, d), _e(i + 1, d)) for i in range(n)]
    if fam in "BCD":
        d = n
        roots = [_sub(_e(i, d), _e(i + 1, d)) for i in range(n - 1)]
        if fam == "B":
            roots.append(_e(n - 1, d))
        elif fam == "C":
            roots.append(_e(n - 1, d, 2))
        else:
            roots.append(_add(_e(n - 2, d), _e(n - 1, d)))
        return roots
    if fam == "E":
        d = 8
        half = Fraction(1, 2)
        a1 = [half, -half, -half, -half, -half, -half, -half, half]
        roots = [a1, _add(_e(0, d), _e(1, d))]
        roots += [_sub(_e(i, d), _e(i - 1, d)) for i in range(1, 7)]
        return roots[:n]
    if fam == "F":
        d = 4
        half = Fraction(1, 2)
        return [
            _sub(_e(1, d), _e(2, d)),
            _sub(_e(2, d), _e(3, d)),
            _e(3, d),
            [half, -half, -half, -half],
        ]
    # G2
    return [[Fraction(1), Fraction(-1), Fraction(0)], [Fraction(-2), Fraction(1), Fraction(1)]]


def cartan_matrix(ct: CartanType) -> Matrix:
    roots = _euclidean_simple_roots(ct)

    def dot(u, v):
        return sum(a * b for a, b in zip(u, v))

    rows = []
    for ai in roots:
        row = []
        for aj in roots:
            val = 2 * dot(ai, aj) / dot(aj, aj)
            assert val.denominator == 1
            row.append(int(val))
        rows.append(tuple(row))
    return tuple(rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(a: Matrix, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _reflect(root, coroot, m: Matrix) -> Matrix:
    # (I - root coroot^T) m, touching only the rows where root is nonzero
    terms = [(c, m[r]) for r, c in enumerate(coroot) if c]
    cm = [sum(c * row[k] for c, row in terms) for k in range(len(m))]
    return tuple(
        row if a == 0 else tuple(x - a * y for x, y in zip(row, cm))
        for a, row in zip(root, m)
    )


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    """``char_matrix`` acts on characters, ``cochar_matrix`` (its inverse
    transpose) on cocharacters."""

    char_matrix: Matrix
    length: int
    word: tuple[int, ...]
    cochar_matrix: Matrix = field(compare=False, repr=False, default=None)


@dataclass(frozen=True)
class RootDatum:
    cartan_type: CartanType
    lattice_kind: LatticeKind
    cartan: Matrix = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "lattice_kind", LatticeKind(self.lattice_kind))
        object.__setattr__(self, "cartan", cartan_matrix(self.cartan_type))

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def simply_connected(self) -> bool:
        return self.lattice_kind is LatticeKind.SIMPLY_CONNECTED

    @cached_property
    def simple_roots(self) -> tuple[Vector, ...]:
        """Simple roots in character coordinates."""
        if self.simply_connected:
            return self.cartan
        return identity(self.rank)

    @cached_property
    def simple_coroots(self) -> tuple[Vector, ...]:
        """Simple coroots in cocharacter coordinates."""
        if self.simply_connected:
            return identity(self.rank)
        return tuple(zip(*self.cartan))

    @cached_property
    def simple_reflections(self) -> tuple[Matrix, ...]:
        """Character-lattice matrices of ``s_i(x) = x - <x, a_i^vee> a_i``."""
        n = self.rank
        out = []
        for a, c in zip(self.simple_roots, self.simple_coroots):
            out.append(tuple(tuple(int(r == k) - a[r] * c[k] for k in range(n)) for r in range(n)))
        return tuple(out)

    @cached_property
    def simple_coreflections(self) -> tuple[Matrix, ...]:
        """Cocharacter-lattice matrices of ``s_i(v) = v - <a_i, v> a_i^vee``."""
        n = self.rank
        out = []
        for a, c in zip(self.simple_roots, self.simple_coroots):
            out.append(tuple(tuple(int(r == k) - c[r] * a[k] for k in range(n)) for r in range(n)))
        return tuple(out)

    @cached_property
    def _positive_roots(self) -> tuple[Vector, ...]:
        return tuple(_positive_roots(self))

    @cached_property
    def _weyl_group(self) -> tuple[WeylElement, ...]:
        return tuple(_weyl_group(self))

    def __repr__(self):
        return f"RootDatum({self.cartan_type}, {self.lattice_kind.value})"


def build_root_datum(ct: CartanType | tuple[str, int], lattice=LatticeKind.SIMPLY_CONNECTED) -> RootDatum:
    if not isinstance(ct, CartanType):
        ct = CartanType(*ct)
    return RootDatum(ct, LatticeKind(lattice))


def _positive_roots(rd: RootDatum) -> list[Vector]:
    # Work in root coordinates, where positivity is coordinatewise.
    n = rd.rank
    a = rd.cartan
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            # <beta, a_i^vee> = sum_j beta_j A[j][i]
            c = sum(beta[j] * a[j][i] for j in range(n))
            gamma = tuple(beta[j] - (c if j == i else 0) for j in range(n))
            if gamma not in seen and all(x >= 0 for x in gamma):
                seen.add(gamma)
                queue.append(gamma)
    ordered = sorted(seen, key=lambda v: (sum(v), tuple(-x for x in v)))
    return [root_to_character(rd, v) for v in ordered]


def root_to_character(rd: RootDatum, coeffs) -> Vector:
    """Map simple-root coordinates to character coordinates."""
    n = rd.rank
    sr = rd.simple_roots
    return tuple(sum(coeffs[i] * sr[i][k] for i in range(n)) for k in range(n))


def positive_roots(rd: RootDatum) -> list[Vector]:
    return list(rd._positive_roots)


def weyl_group_order(ct: CartanType) -> int:
    n = ct.rank
    fam = ct.family
    if fam == "A":
        return factorial(n + 1)
    if fam in "BC":
        return 2**n * factorial(n)
    if fam == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[(fam, n)]


def _weyl_group(rd: RootDatum) -> list[WeylElement]:
    n = rd.rank
    if weyl_group_order(rd.cartan_type) > WEYL_GUARD:
        raise GroupTooLarge(f"|W({rd.cartan_type})| = {weyl_group_order(rd.cartan_type)} exceeds {WEYL_GUARD}")
    roots, coroots = rd.simple_roots, rd.simple_coroots
    e = identity(n)
    elements = [WeylElement(e, 0, (), e)]
    seen = {e}
    frontier = [elements[0]]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n):
                if w.word and w.word[0] == i:
                    continue  # s_i s_i = 1
                m = _reflect(roots[i], coroots[i], w.char_matrix)
                if m in seen:
                    continue
                seen.add(m)
                if len(seen) > WEYL_GUARD:
                    raise GroupTooLarge(f"|W({rd.cartan_type})| exceeds {WEYL_GUARD}")
                u = WeylElement(m, w.length + 1, (i,) + w.word, _reflect(coroots[i], roots[i], w.cochar_matrix))
                elements.append(u)
                nxt.append(u)
        frontier = nxt
    return elements


def weyl_group(rd: RootDatum) -> list[WeylElement]:
    """All Weyl group elements in breadth-first order (identity first).

    Each element's ``word`` is a reduced expression ``s_{word[0]} ... s_{word[-1]}``.
    """
    return list(rd._weyl_group)


def longest_element(rd: RootDatum) -> WeylElement:
    return rd._weyl_group[-1]


def act_on_character(rd: RootDatum, w: WeylElement, chi) -> Vector:
    if len(chi) != rd.rank:
        raise DimensionMismatch(f"expected a vector of length {rd.rank}, got {len(chi)}")
    return mat_vec(w.char_matrix, chi)


def act_on_cocharacter(rd: RootDatum, w: WeylElement, v) -> Vector:
    if len(v) != rd.rank:
        raise DimensionMismatch(f"expected a vector of length {rd.rank}, got {len(v)}")
    return mat_vec(w.cochar_matrix, v)


def pairing(chi, v) -> int:
    return sum(a * b for a, b in zip(chi, v))
