import random
from itertools import permutations

import pytest

from fans import P1, P1xP1, P2, base_fan, hirzebruch, random_admissible_fans, sl3_bisected
from oracles import compactification_oracle, t_factorial, toric_fixed_point_oracle, toric_h_vector
from toromotive import (
    Cone,
    Fan,
    b_count,
    build_root_datum,
    compactification_poincare,
    fixed_point_count,
    flag_poincare,
    toric_poincare,
    validate_fan,
    weyl_chamber_fan,
    weyl_group,
)
from toromotive.errors import FanNotAdmissible, NotComplete, NotSmooth
from toromotive.polynomial import poly_divmod
from toromotive.root_datum import longest_element

A1_SC = build_root_datum(("A", 1), "simply_connected")
A2_SC = build_root_datum(("A", 2), "simply_connected")
A2_AD = build_root_datum(("A", 2), "adjoint")


def test_flag_examples():
    assert flag_poincare(A2_SC).to_list() == [1, 2, 2, 1]
    assert flag_poincare(A1_SC).to_list() == [1, 1]
    assert flag_poincare(build_root_datum(("A", 3))).to_list() == t_factorial(3) == [1, 3, 5, 6, 5, 3, 1]


def test_flag_g2_and_b2():
    assert flag_poincare(build_root_datum(("G", 2))).to_list() == [1, 2, 2, 2, 2, 2, 1]
    assert flag_poincare(build_root_datum(("B", 2))).to_list() == [1, 2, 2, 2, 1]


@pytest.mark.parametrize("fan,expected", [(P1, [1, 1]), (P2, [1, 1, 1]), (P1xP1, [1, 2, 1])])
def test_toric_examples(fan, expected):
    rank = len(fan.rays[0])
    assert toric_poincare(rank, fan).to_list() == expected
    assert toric_fixed_point_oracle(fan.rays, fan.max_cones) == expected
    assert toric_h_vector(fan.max_cones, rank) == expected


@pytest.mark.parametrize("a", range(0, 5))
def test_hirzebruch(a):
    f = hirzebruch(a)
    assert toric_poincare(2, f).to_list() == toric_h_vector(f.max_cones, 2) == [1, 2, 1]


def test_toric_rejects_bad_fans():
    half = Fan(((1, 0), (0, 1), (-1, 0)), ((0, 1), (1, 2)))
    with pytest.raises(NotComplete):
        toric_poincare(2, half)
    singular = Fan(((1, 0), (1, 2), (-1, -1)), ((0, 1), (1, 2), (0, 2)))
    with pytest.raises(NotSmooth):
        toric_poincare(2, singular)


def test_toric_on_chamber_fan_with_root_datum():
    f = weyl_chamber_fan(A2_AD)
    assert toric_poincare(A2_AD, f).to_list() == [1, 4, 1]


def test_b_count_examples():
    sigma = Cone(((-1, -1), (-1, -2)))
    W = weyl_group(A2_SC)
    assert b_count(A2_SC, sigma, W[0]) == 1
    assert b_count(A2_SC, sigma, longest_element(A2_SC)) == 2
    omega = Cone(((-1, 0), (0, -1)))
    assert b_count(A2_AD, omega, longest_element(A2_AD)) == 2
    with pytest.raises(NotSmooth):
        b_count(A2_SC, Cone(((-2, -1), (-1, -2))), W[0])


def test_wonderful_b_rule():
    # b(Omega, w) counts simple roots that w sends to negative roots
    from toromotive.polyhedral import Sign, lex_sign
    from toromotive import act_on_character

    omega = Cone(((-1, 0), (0, -1)))
    for w in weyl_group(A2_AD):
        neg = sum(lex_sign(A2_AD, act_on_character(A2_AD, w, a)) is Sign.NEGATIVE for a in A2_AD.simple_roots)
        assert b_count(A2_AD, omega, w) == neg


def test_sl3_example():
    r = compactification_poincare(A2_SC, sl3_bisected())
    assert r.first_factor.to_list() == [1, 1, 4, 4, 1, 1]
    assert r.flag_factor.to_list() == [1, 2, 2, 1]
    assert r.product.to_list() == [1, 3, 8, 15, 18, 15, 8, 3, 1]
    assert fixed_point_count(A2_SC, sl3_bisected()) == 72


def test_a1_chamber():
    r = compactification_poincare(A1_SC, weyl_chamber_fan(A1_SC))
    assert r.first_factor.to_list() == [1, 0, 1]
    assert r.product.to_list() == [1, 1, 1, 1]
    assert fixed_point_count(A1_SC, weyl_chamber_fan(A1_SC)) == 4


def test_wonderful_pgl3():
    r = compactification_poincare(A2_AD, weyl_chamber_fan(A2_AD))
    assert r.first_factor.to_list() == [1, 0, 2, 2, 0, 1]
    assert r.product.to_list() == [1, 2, 4, 7, 8, 7, 4, 2, 1]
    assert fixed_point_count(A2_AD, weyl_chamber_fan(A2_AD)) == 36


def test_not_admissible():
    with pytest.raises(FanNotAdmissible) as exc:
        compactification_poincare(A2_SC, weyl_chamber_fan(A2_SC))
    assert exc.value.field == "smooth"
    with pytest.raises(FanNotAdmissible):
        fixed_point_count(A2_SC, weyl_chamber_fan(A2_SC))


def test_threads_give_same_result():
    fans = random_admissible_fans(6, seed=5)
    rd, fan = fans[-1]
    assert compactification_poincare(rd, fan, threads=2) == compactification_poincare(rd, fan, threads=1)


@pytest.mark.parametrize("ct", [("A", 3), ("B", 2), ("C", 2), ("G", 2), ("B", 3)])
def test_wonderful_larger_types_invariants(ct):
    rd = build_root_datum(ct, "adjoint")
    f = weyl_chamber_fan(rd)
    r = compactification_poincare(rd, f)
    order = len(weyl_group(rd))
    assert r.product.is_palindromic()
    assert r.product(1) == order**2
    q, rem = poly_divmod(r.product.coeffs, r.flag_factor.coeffs)
    assert rem == [] and q == list(r.first_factor.coeffs)
    # dimension of the group = 2|Phi+| + rank
    assert r.product.degree == 2 * (r.flag_factor.degree) + rd.rank


@pytest.mark.parametrize("ct", [("B", 2), ("G", 2)])
def test_wonderful_rank2_against_oracle(ct):
    rd = build_root_datum(ct, "adjoint")
    f = weyl_chamber_fan(rd)
    expected = compactification_oracle(rd.cartan, False, f.rays, f.max_cones)
    assert compactification_poincare(rd, f).product.to_list() == expected


def test_random_fans_invariants():
    for rd, fan in random_admissible_fans(12, seed=42):
        r = compactification_poincare(rd, fan)
        rep = validate_fan(rd, fan)
        order = len(weyl_group(rd))
        assert r.product.is_palindromic()
        assert r.product(1) == rep.s * order == rep.k * order**2
        for perm in permutations(range(rd.rank)):
            assert compactification_poincare(rd, fan, order=list(perm)) == r


def test_toric_order_independence():
    rng = random.Random(4)
    from toromotive import stellar_subdivide

    f = P1xP1
    for _ in range(4):
        cone = rng.choice(f.cones())
        f = stellar_subdivide(2, f, tuple(a + b for a, b in zip(*cone.rays)))
    base = toric_poincare(2, f)
    assert toric_poincare(2, f, order=[1, 0]) == base
    assert base.to_list() == toric_h_vector(f.max_cones, 2)
    assert base(1) == len(f.max_cones)
