"""Dense integer polynomials in ascending-degree coefficient lists."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Sequence


def trim(coeffs: Iterable[int]) -> list[int]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return trim(x + y for x, y in zip_longest(a, b, fillvalue=0))


def poly_sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return trim(x - y for x, y in zip_longest(a, b, fillvalue=0))


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def poly_divmod(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    """Long division by a polynomial with leading coefficient +-1."""
    b = trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if abs(b[-1]) != 1:
        raise ValueError("divisor must have leading coefficient 1 or -1")
    rem = trim(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], rem
    quot = [0] * (len(rem) - db)
    rem = list(rem)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] * b[-1]
        quot[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    return trim(quot), trim(rem)


def evaluate(a: Sequence[int], t) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * t + c
    return acc


def monomials(a: Sequence[int], var: str = "t") -> str:
    """Human-readable form, highest degree first."""
    terms = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if c == 0:
            continue
        if d == 0:
            body = str(abs(c))
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return " ".join([head] + [f"{s} {b}" for s, b in terms[1:]])


@dataclass(frozen=True)
class PoincarePolynomial:
    """Nonnegative integer coefficients, ascending degree, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(trim(int(x) for x in self.coeffs))
        if any(x < 0 for x in c):
            raise ValueError(f"negative coefficient in {c}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> PoincarePolynomial:
        counts: list[int] = []
        for e in exponents:
            if e >= len(counts):
                counts.extend([0] * (e + 1 - len(counts)))
            counts[e] += 1
        return cls(tuple(counts))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t) -> int:
        return evaluate(self.coeffs, t)

    def __mul__(self, other: PoincarePolynomial) -> PoincarePolynomial:
        return PoincarePolynomial(tuple(poly_mul(self.coeffs, other.coeffs)))

    def __add__(self, other: PoincarePolynomial) -> PoincarePolynomial:
        return PoincarePolynomial(tuple(poly_add(self.coeffs, other.coeffs)))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def pretty(self) -> str:
        return monomials(self.coeffs)

    def __str__(self):
        return self.pretty()

    def to_list(self) -> list[int]:
        return list(self.coeffs)
