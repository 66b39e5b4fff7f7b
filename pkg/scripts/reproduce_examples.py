"""Print every worked example: flag varieties, toric surfaces, the bisected SL3
compactification, wonderful PGL3, the two p=3 decompositions and the Chow tables."""

from toromotive import (
    Fan,
    build_root_datum,
    chow_ring_sl1,
    chow_torsor,
    compactification_poincare,
    decompose,
    diagonal_pairs,
    fixed_point_count,
    flag_poincare,
    sb_copy_count,
    stellar_subdivide,
    symmetrize,
    toric_poincare,
    validate_fan,
    weyl_chamber_fan,
)


def show(label, value):
    print(f"{label:<40} {value}")


def main():
    for n in range(1, 4):
        show(f"P(G/B), type A{n}", flag_poincare(build_root_datum(("A", n))).pretty())

    p2 = Fan(((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (0, 2)))
    show("P(P^2)", toric_poincare(2, p2).pretty())

    sl3 = build_root_datum(("A", 2), "simply_connected")
    fan = symmetrize(sl3, stellar_subdivide(sl3, weyl_chamber_fan(sl3), (-1, -1)))
    rep = validate_fan(sl3, fan)
    res = compactification_poincare(sl3, fan)
    show("SL3, bisected chambers", res.pretty())
    show("  expanded", res.product.to_list())
    show("  s, k, fixed points", (rep.s, rep.k, fixed_point_count(sl3, fan)))

    pgl3 = build_root_datum(("A", 2), "adjoint")
    show("wonderful PGL3", compactification_poincare(pgl3, weyl_chamber_fan(pgl3)).pretty())

    d = decompose([1, 1, 2, 3, 4, 3, 2, 1, 1], 3)
    show("p=3, Semenov compactification", d.sb_multiplicities)
    d = decompose(res.product, 3)
    show("p=3, bisected SL3", f"{d.sb_multiplicities} total {d.sb_total} = {sb_copy_count(rep.s, 3)}")

    for p in (2, 3, 5):
        ring = chow_ring_sl1(p)
        show(f"CH(SL_1(D)), p={p}", ring.table() | {"relations": list(ring.relations)})
    show("CH(E), p=3", chow_torsor(3).table())
    show("diagonal exponents, p=3", diagonal_pairs(3))


if __name__ == "__main__":
    main()
