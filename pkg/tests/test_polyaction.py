import random

import pytest

from picardperiods.cyclotomic import Cyc, ONE, RHO, RHO2, ZERO
from picardperiods.matgroup import CATALOG_PU21, builtin, hermitian_scalar
from picardperiods.polyaction import (
    HomPoly, LinearSub, PSL_VARS, PU_VARS, act_psl2, act_pu21,
    form_invariance_identity, pu21_sub_matrix, substitute,
)


def x_poly(mon, coeff=1):
    return HomPoly(PU_VARS, sum(mon), {mon: Cyc(coeff)})


def test_substitute_identity_and_units():
    p = x_poly((1, 1, 1))
    ident = LinearSub([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert substitute(p, ident) == p
    cube = LinearSub([[1, 0, 0], [0, -RHO, 0], [0, 0, 1]])
    q = substitute(x_poly((0, 3, 0)), cube)
    assert q == x_poly((0, 3, 0), -1)  # (-rho)^3 = -1
    sym = LinearSub([[0, 1], [1, 0]])
    two = HomPoly(PSL_VARS, 2, {(2, 0): ONE, (1, 1): Cyc(2), (0, 2): ONE})
    assert substitute(two, sym) == two


def test_act_pu21_examples():
    r = builtin("R")
    p = x_poly((2, 1, 0))
    img = act_pu21(r, p, r.det())
    assert img == x_poly((0, 1, 2), -1)  # -X1 X2^2
    assert act_pu21(builtin("R1"), x_poly((0, 3, 0)), builtin("R1").det()) == \
        x_poly((0, 3, 0), RHO2)
    ident = builtin("R") @ builtin("R")
    assert act_pu21(ident, p, ident.det()) == p


def test_act_pu21_degree_restriction():
    with pytest.raises(ValueError):
        act_pu21(builtin("R"), x_poly((1, 0, 0)), ONE)


def test_substitution_matrices_multiply_like_the_group():
    rng = random.Random(2)
    names = list(CATALOG_PU21)

    def matmul(a, b):
        return tuple(
            tuple(sum((a[i][k] * b[k][j] for k in range(3)), ZERO)
                  for j in range(3))
            for i in range(3)
        )

    for _ in range(20):
        g = builtin(rng.choice(names))
        h = builtin(rng.choice(names))
        assert pu21_sub_matrix(g @ h) == matmul(pu21_sub_matrix(g),
                                                pu21_sub_matrix(h))


def test_act_pu21_composition_on_polynomials():
    # the substitution action is a right action: acting by the product g h
    # equals acting by g first and then by h (frozen convention)
    rng = random.Random(9)
    names = ["R", "P", "R1", "R2", "R3"]
    mons = [(3, 0, 0), (1, 1, 1), (0, 2, 1)]
    for _ in range(10):
        g, h = builtin(rng.choice(names)), builtin(rng.choice(names))
        p = HomPoly(PU_VARS, 3, {m: Cyc(rng.randint(-3, 3)) for m in mons})
        gh = g @ h
        via_word = act_pu21(gh, p, gh.det())
        stepwise = act_pu21(h, act_pu21(g, p, g.det()), h.det())
        assert via_word == stepwise


def test_act_psl2():
    S = ((0, 1), (-1, 0))
    T = ((1, 1), (0, 1))
    x0 = HomPoly(PSL_VARS, 1, {(1, 0): ONE})
    x1 = HomPoly(PSL_VARS, 1, {(0, 1): ONE})
    assert act_psl2(S, x0) == x1
    assert act_psl2(S, x1) == -x0
    # the inverse representative carries the printed argument pair (-X1, X0)
    S_inv = ((0, -1), (1, 0))
    assert act_psl2(S_inv, x0) == -x1
    assert act_psl2(S_inv, x1) == x0
    assert act_psl2(T, x0) == x0
    assert act_psl2(T, x1) == -x0 + x1
    with pytest.raises(ValueError):
        act_psl2(((2, 0), (0, 1)), x0)


def test_two_form_invariance_identity_exact():
    for name in ("R", "P", "R1", "R2", "R3", "A0", "Ay"):
        g = builtin(name)
        assert form_invariance_identity(g, hermitian_scalar(g), k=2), name


def test_homogeneity_preserved():
    p = x_poly((1, 1, 1))
    img = act_pu21(builtin("P"), p, builtin("P").det())
    assert img.degree == 3
    assert all(sum(m) == 3 for m in img.terms)
