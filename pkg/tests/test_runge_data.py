from fractions import Fraction

from picardperiods import runge_data
from picardperiods.cyclotomic import Cyc, I, ONE, RHO, SQRT3, parse_cyc


def test_term_counts():
    assert len(runge_data.p6_poly().terms) == 28
    assert len(runge_data.p12_poly().terms) == 91


def test_mirror_symmetry():
    # with the selected readings both tables are symmetric under f1 <-> f2
    for poly in (runge_data.p6_poly(), runge_data.p12_poly()):
        for (a, b, c), coeff in poly.terms.items():
            assert poly.coefficient((b, a, c)) == coeff


def test_ambiguous_bookkeeping():
    assert set(runge_data.SELECTED_READINGS) == set(runge_data.AMBIGUOUS_READINGS)
    for mon, (r0, r1) in runge_data.AMBIGUOUS_READINGS.items():
        assert parse_cyc(r0) != parse_cyc(r1)
    # the rejected readings give asymmetric tables
    flipped = {m: 1 - v for m, v in runge_data.SELECTED_READINGS.items()}
    poly = runge_data.p12_poly(flipped)
    asym = [m for (m, c) in poly.terms.items()
            if poly.coefficient((m[1], m[0], m[2])) != c]
    assert asym


def test_generator_matrices():
    g1, g2 = runge_data.invariant_group_generators()
    half = Cyc(Fraction(1, 2))
    assert g1[0][0] == half * (-ONE + I * SQRT3)
    assert g2[0][1] == Cyc(Fraction(1, 4)) * (Cyc(-2) + 2 * I * SQRT3)
    # orders (projectively linear): g1^3 = 1, g2^6 = 1
    def matmul(a, b):
        return tuple(
            tuple(sum((a[i][k] * b[k][j] for k in range(3)), Cyc(0))
                  for j in range(3))
            for i in range(3)
        )
    x = g1
    for _ in range(2):
        x = matmul(x, g1)
    ident = tuple(tuple(ONE if i == j else Cyc(0) for j in range(3)) for i in range(3))
    assert x == ident
    y = g2
    for _ in range(5):
        y = matmul(y, g2)
    assert y == ident


def test_coefficient_spot_checks():
    p6 = runge_data.p6_poly()
    assert p6.coefficient((6, 0, 0)) == parse_cyc("-23/8*i*rho - 23/16*i + 19/8")
    assert p6.coefficient((0, 0, 6)) == parse_cyc("3/16*i + 1/6*rho + 1/12")
    p12 = runge_data.p12_poly()
    assert p12.coefficient((0, 0, 12)) == parse_cyc("-3/128*i - 5/128*rho - 5/256")
    # the three invariance-selected numerals
    assert p12.coefficient((10, 2, 0)) == parse_cyc("249/64*i + 295/64*rho + 295/128")
    assert p12.coefficient((6, 3, 3)) == parse_cyc(
        "-247975/16*i*rho - 169405/8*i - 247975/16*rho + 90835/16")
    assert p12.coefficient((6, 2, 4)) == parse_cyc(
        "-100095/32*i - 115585/32*rho - 115585/64")
