"""Poincare-level arithmetic for compactifications of SL_1(D), D of prime degree p.

A decomposition writes ``P_X = P_R + m(t) * P_S`` where ``P_R`` is the split
Rost motive ``sum_{i<p} t^{i b}`` and ``P_S = 1 + t + ... + t^{p-1}`` is the
split Severi-Brauer variety.  The geometric hypotheses that make this a motivic
decomposition are not checkable from a polynomial; :func:`decompose` only
reports whether the arithmetic works out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .errors import BadDegree, NotDecomposable, NotPrime
from .polynomial import PoincarePolynomial, poly_divmod, poly_sub


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _require_prime(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def rost_exponent(p: int, n: int) -> int:
    """b = (p^{n-1} - 1)/(p - 1)."""
    return (p ** (n - 1) - 1) // (p - 1)


def rost_polynomial(p: int, n: int = 3) -> PoincarePolynomial:
    _require_prime(p)
    if not isinstance(n, int) or n < 2:
        raise BadDegree(f"Rost degree must be an integer >= 2, got {n}")
    b = rost_exponent(p, n)
    return PoincarePolynomial.from_exponents(i * b for i in range(p))


def severi_brauer_polynomial(p: int) -> PoincarePolynomial:
    _require_prime(p)
    return PoincarePolynomial((1,) * p)


@dataclass(frozen=True)
class MotivicDecomposition:
    p: int
    n: int
    rost_shifts: tuple[int, ...]
    sb_multiplicities: dict[int, int] = field(hash=False)

    label = "motivic decomposition under the hypotheses of the splitting theorem"

    def reconstruct(self) -> PoincarePolynomial:
        total = list(rost_polynomial(self.p, self.n).coeffs)
        for shift, mult in self.sb_multiplicities.items():
            for d in range(self.p):
                idx = shift + d
                if idx >= len(total):
                    total.extend([0] * (idx + 1 - len(total)))
                total[idx] += mult
        return PoincarePolynomial(tuple(total))

    @property
    def sb_total(self) -> int:
        return sum(self.sb_multiplicities.values())


def decompose(P: PoincarePolynomial | list[int], p: int, n: int = 3) -> MotivicDecomposition:
    """Solve ``P = P_R + m(t) P_S`` for a nonnegative ``m``."""
    coeffs = P.coeffs if isinstance(P, PoincarePolynomial) else tuple(P)
    rost = rost_polynomial(p, n)
    sb = severi_brauer_polynomial(p)
    diff = poly_sub(coeffs, rost.coeffs)
    quot, rem = poly_divmod(diff, sb.coeffs)
    if rem:
        raise NotDecomposable(f"P - P_R is not divisible by P_S (remainder {rem})")
    if any(c < 0 for c in quot):
        raise NotDecomposable(f"negative Severi-Brauer multiplicity in {quot}")
    b = rost_exponent(p, n)
    mult = {j: c for j, c in enumerate(quot) if c}
    return MotivicDecomposition(p, n, tuple(i * b for i in range(p)), mult)


def sb_copy_count(s: int, p: int) -> int:
    """Total number of Severi-Brauer summands, ``s (p-1)! - 1``."""
    if s < 1:
        raise ValueError("s must be positive")
    _require_prime(p)
    return s * factorial(p - 1) - 1


@dataclass(frozen=True)
class Free:
    rank: int

    def __str__(self):
        return "Z" if self.rank == 1 else f"Z^{self.rank}"


@dataclass(frozen=True)
class Torsion:
    order: int

    def __str__(self):
        return f"Z/{self.order}"


@dataclass(frozen=True)
class ChowRingPresentation:
    p: int
    generator_degree: int | None
    components: dict[int, Free | Torsion] = field(hash=False)
    relations: tuple[str, ...] = ()
    note: str | None = None

    @property
    def top_degree(self) -> int:
        return max(self.components)

    def table(self) -> dict[str, str]:
        return {str(d): str(g) for d, g in sorted(self.components.items())}


def chow_ring_sl1(p: int) -> ChowRingPresentation:
    """CH(SL_1(D)): Z in degree 0, Z/p h^j in degree (p+1)j for 1 <= j <= p-1."""
    _require_prime(p)
    comps: dict[int, Free | Torsion] = {0: Free(1)}
    for j in range(1, p):
        comps[(p + 1) * j] = Torsion(p)
    return ChowRingPresentation(p, p + 1, comps, ("p*h=0", "h^p=0"))


def chow_torsor(p: int) -> ChowRingPresentation:
    """Chow ring of a nonsplit SL_1(D)-torsor; proved over fields of characteristic 0."""
    _require_prime(p)
    return ChowRingPresentation(p, None, {0: Free(1)}, (), "char 0")


def diagonal_pairs(p: int) -> list[tuple[int, int]]:
    """Exponents (i, p-1-i) with c * Delta = sum_i h^i x h^{p-1-i}, c prime to p."""
    _require_prime(p)
    return [(i, p - 1 - i) for i in range(p)]
