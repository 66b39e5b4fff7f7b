"""Poincare polynomials of smooth toroidal group compactifications and the
motivic arithmetic of SL_1(D) for D of prime degree."""

from .errors import ToromotiveError
from .fan import Fan, FanReport, stellar_subdivide, symmetrize, validate_fan, weyl_chamber_fan
from .motivic import (
    ChowRingPresentation,
    MotivicDecomposition,
    chow_ring_sl1,
    chow_torsor,
    decompose,
    diagonal_pairs,
    rost_polynomial,
    sb_copy_count,
    severi_brauer_polynomial,
)
from .poincare import (
    FactoredPoincare,
    b_count,
    compactification_poincare,
    fixed_point_count,
    flag_poincare,
    toric_poincare,
)
from .polyhedral import Cone, Sign, common_face, dual_basis, is_unimodular, lex_sign, primitive
from .polynomial import PoincarePolynomial
from .root_datum import (
    CartanType,
    LatticeKind,
    RootDatum,
    WeylElement,
    act_on_character,
    build_root_datum,
    positive_roots,
    weyl_group,
)

__version__ = "0.1.0"
