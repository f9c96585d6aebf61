import numpy as np
import pytest

from picardperiods.quadrature import (
    IntegrandSpec, NonDecayingIntegrand, convergence_study, decay_profile,
    integrate_D, relation_residual, spine_points,
)
from picardperiods.thetaforms import ThetaEngine

COARSE = dict(f="theta_null", k=12, radius=6, u_max=6.0, grid=(8, 8), gauss=3)


def test_spine_parameterization():
    s = np.array([0.0, 0.5, 1.0, 1.5, 2.0])
    a, da = spine_points(s)
    rho = complex(-0.5, np.sqrt(3) / 2)
    assert abs(a[0] - (-rho)) < 1e-15
    assert abs(a[2]) < 1e-15
    assert abs(a[4] - 1.0) < 1e-15
    assert abs(da[0] - rho) < 1e-15 and abs(da[4] - 1.0) < 1e-15


def test_decay_profile_of_default_integrand():
    prof = decay_profile(IntegrandSpec(**COARSE))
    values = [v for _, v in prof]
    assert values[-1] < 1e-20 * values[0]
    assert all(b <= a for a, b in zip(values, values[1:]))


def test_invariant_polynomial_integrands_refused():
    for name in ("P6sq", "P12"):
        spec = IntegrandSpec(f=name, k=4, radius=6, u_max=8.0,
                             grid=(6, 6), gauss=2)
        with pytest.raises(NonDecayingIntegrand):
            integrate_D(spec)


def test_zero_integrand():
    spec = IntegrandSpec(f="zero", k=2, radius=4, u_max=4.0, grid=(4, 4),
                         gauss=2)
    res = integrate_D(spec)
    assert all(v == 0 for v in res["coefficients"].values())
    rr = relation_residual(spec, res)
    assert rr["residual"] == 0.0 and rr.get("pass")


def test_reflection_relation_residual_coarse():
    spec = IntegrandSpec(**COARSE)
    res = integrate_D(spec)
    rr = relation_residual(spec, res)
    assert rr["residual"] < 5e-3
    assert res["coefficients"][(0, 0, 33)] != 0


def test_coefficient_count():
    spec = IntegrandSpec(f="zero", k=2, radius=4, u_max=4.0, grid=(4, 4),
                         gauss=2)
    res = integrate_D(spec)
    m = 3 * 2 - 3
    assert len(res["coefficients"]) == (m + 1) * (m + 2) // 2


def test_rl_side_is_umax_independent():
    from picardperiods.quadrature import _side_RL
    eng = ThetaEngine(6)
    a = _side_RL(IntegrandSpec(f="theta_null", k=12, radius=6, u_max=4.0,
                               grid=(8, 8), gauss=3), eng)[0]
    b = _side_RL(IntegrandSpec(f="theta_null", k=12, radius=6, u_max=32.0,
                               grid=(8, 8), gauss=3), eng)[0]
    assert np.abs(a - b).max() == 0.0


def test_rl_matches_transported_l():
    # Prop-conv identity: the compact side equals the full L-side
    # transported by the reflection substitution, to quadrature accuracy
    spec = IntegrandSpec(f="theta_null", k=12, radius=6, u_max=24.0,
                         grid=(10, 24), gauss=4)
    res = integrate_D(spec)
    coeffs = res["coefficients"]
    m = res["exponent"]
    # I_RL(X) = -I_L(B(R) X): in coefficients, c_RL[a,b,c] = -(-1)^b c_L[c,b,a]
    from picardperiods.quadrature import _assemble
    c_l = _assemble(res["moments_L"], m)
    c_rl = _assemble(res["moments_RL"], m)
    scale = max(abs(v) for v in coeffs.values())
    worst = max(
        abs(c_rl[(a, b, c)] + (-1) ** b * c_l[(c, b, a)])
        for (a, b, c) in c_rl
    )
    assert worst / scale < 5e-3


def test_convergence_study_monotone():
    spec = IntegrandSpec(f="theta_null", k=12, radius=6, grid=(10, 10),
                         gauss=3, u_max=8.0)
    rep = convergence_study(spec, [2, 4, 8, 16])
    assert rep["monotone_decreasing"]
    assert len(rep["tables"]) == 4
    diffs = rep["successive_max_differences"]
    assert diffs[0] > 0


def test_determinism():
    spec = IntegrandSpec(f="theta_null", k=12, radius=5, u_max=4.0,
                         grid=(6, 6), gauss=2)
    a = integrate_D(spec)["coefficients"]
    b = integrate_D(spec)["coefficients"]
    assert a == b
