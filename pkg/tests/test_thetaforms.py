import cmath
import math

import numpy as np
import pytest

from picardperiods.thetaforms import (
    SYMPLECTIC_LIFTS, ThetaEngine, boundary_series,
    characteristic_escape_check, even_theta_product, interior_samples,
    is_siegel, jacobian_formula_check, make_integrand, modularity_residual,
    period_equivariance_check, period_matrix, runge_eval, runge_invariance,
    select_p12_reading, theta_constant, theta_triple, weight_infer,
    weight_modulus,
)
from picardperiods.cyclotomic import RHO, RHO2

RHO_C = complex(RHO)
POINT = (-1.1, 0.25 + 0.1j)


def test_period_matrix_display_values():
    om = period_matrix(-1.0, 0.0)
    assert abs(om[1, 1] - complex(-RHO2)) < 1e-15
    assert abs(om[0, 1]) < 1e-15 and abs(om[1, 2]) < 1e-15
    assert abs(om[0, 0] - 2 * complex(RHO2) * (-1) / (1 - RHO_C)) < 1e-15
    assert is_siegel(om)
    # boundary point: diag(0, -rho^2, 0), flagged non-Siegel
    om0 = period_matrix(0.0, 0.0)
    assert abs(om0[0, 0]) < 1e-15 and abs(om0[2, 2]) < 1e-15
    assert abs(om0[1, 1] - complex(-RHO2)) < 1e-15
    assert not is_siegel(om0)


def test_period_matrix_symmetry_and_pd_on_samples():
    for (z1, z2) in interior_samples(100, seed=42):
        om = period_matrix(z1, z2)
        assert np.abs(om - om.T).max() == 0.0
        assert np.linalg.eigvalsh(om.imag).min() > 0


def test_theta_truncation_stability():
    om = period_matrix(*POINT)
    for label in (1, 2, 3):
        v8, tail8 = theta_constant(label, om, 8)
        v12, _ = theta_constant(label, om, 12)
        assert abs(v8 - v12) < 1e-10
        assert abs(v8 - v12) <= tail8 + 1e-15


def test_theta_tail_bound_between_radii():
    eng8 = ThetaEngine(8)
    for (z1, z2) in interior_samples(5, seed=8):
        om = period_matrix(z1, z2)
        tail = eng8.tail_estimate(om)
        for label in (1, 2, 3):
            v8, _ = theta_constant(label, om, 8)
            v12, _ = theta_constant(label, om, 12)
            assert abs(v8 - v12) <= tail + 1e-15


def test_theta_rejects_non_siegel():
    with pytest.raises(ValueError):
        theta_constant(1, period_matrix(0.0, 0.0))
    with pytest.raises(ValueError):
        theta_constant(5, period_matrix(*POINT))


def test_boundary_series():
    # each term modulus is exp(-sqrt(3) pi (n + delta)^2) < 1
    val40, edge = boundary_series(2, 40)
    val8, _ = boundary_series(2, 8)
    assert abs(val40 - val8) < 1e-15
    assert edge < 1.0
    term1 = abs(cmath.exp(2j * math.pi * (-0.25) * complex(RHO2)))
    assert term1 == pytest.approx(math.exp(-math.sqrt(3) * math.pi / 4))
    # the half-shift distinguishes the middle characteristic
    v1, _ = boundary_series(1, 20)
    v2, _ = boundary_series(2, 20)
    assert abs(v1 - v2) > 0.1


def test_runge_eval_determinism_and_stability():
    a = runge_eval("P6", POINT, 8)
    b = runge_eval("P6", POINT, 12)
    assert a == runge_eval("P6", POINT, 8)
    assert abs(a - b) < 1e-8
    assert abs(runge_eval("P6", POINT, 12)) > 0
    with pytest.raises(ValueError):
        runge_eval("P6", (1.0, 0.0))


def test_runge_invariance_exact():
    for name in ("P6", "P12"):
        rep = runge_invariance(name)
        assert rep["pass"], rep
        for chk in rep["checks"]:
            assert chk["scalar"] == "1"
            assert chk["scalar_is_root_of_unity"]


def test_p12_reading_selection_is_unique_and_stored():
    rep = select_p12_reading()
    assert rep["unique"]
    assert rep["matches_stored"]
    assert rep["passing_selections"] == [[1, 1, 1]]


def test_jacobian_closed_form():
    for g in ("P", "R", "R1"):
        assert jacobian_formula_check(g)["pass"]


def test_period_equivariance():
    rep = period_equivariance_check()
    assert rep["pass"], rep
    assert {c["element"] for c in rep["checks"]} == set(SYMPLECTIC_LIFTS)


def test_even_product_modular_weight_twelve():
    pts = interior_samples(5, seed=1)
    f, k = make_integrand("theta_null", 10)
    assert k == 12
    for g in ("R1", "R", "P"):
        rep = modularity_residual(g, 12, f, pts)
        assert rep["residual"] < 1e-6, (g, rep)
    wi = weight_infer("R", f, pts)
    assert wi["k"] == 12 and wi["separation_orders"] > 4
    assert weight_modulus("R") is None
    assert weight_modulus("R1") == 6
    assert weight_modulus("P") == 3
    # degenerate generators determine the weight mod the order of j_g
    for g in ("R1", "P"):
        wi = weight_infer(g, f, pts)
        assert (wi["k"] - 12) % wi["k_modulus"] == 0


def test_identity_modularity_is_exact():
    from picardperiods.matgroup import identity
    pts = interior_samples(3, seed=2)
    f, _ = make_integrand("theta_null", 8)
    rep = modularity_residual(identity(), 5, f, pts)
    assert rep["residual"] == 0.0


def test_characteristic_escape():
    rep = characteristic_escape_check(radius=8)
    assert rep["pass"]
    assert rep["triple_escapes_under_R1"]


@pytest.mark.xfail(strict=True, reason=(
    "the printed transformation law fails for the squared degree-6 "
    "invariant polynomial composed with the displayed period matrix: the "
    "theta transformations move the three displayed characteristics out of "
    "their own set (characteristic_escape_check), so no integer weight "
    "makes the law hold; see the decisions ledger"))
def test_printed_law_for_p6_squared():
    pts = interior_samples(5, seed=1)
    f, _ = make_integrand("P6sq", 10)
    best = weight_infer("R1", f, pts)
    assert best["residual"] < 1e-6
