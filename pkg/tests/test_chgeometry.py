import cmath
import math
import random

import pytest

from picardperiods.chgeometry import (
    NAMED_POINTS, Q_INFINITY, ProjPoint, apply_isometry, ball_value,
    domain_point, fixed_points, geo_to_affine, geodesic_table_check,
    horo_to_proj, j3_point, location, named_fixed_points_check,
    on_isometric_sphere, proj_to_horo, reflection_in_geographical,
    spine_conjugation_check,
)
from picardperiods.cyclotomic import Cyc, ONE, RHO, RHO2, ZERO
from picardperiods.matgroup import builtin


def test_horospherical_chart():
    assert horo_to_proj(0, 0, 0).eq(NAMED_POINTS["center"])
    p = horo_to_proj(1, 0, 1)
    assert p.eq(ProjPoint((-ONE, ONE, ONE)))
    assert on_isometric_sphere(p)
    with pytest.raises(ZeroDivisionError):
        Q_INFINITY.affine()


def test_roundtrip_conversions():
    rng = random.Random(31)
    for _ in range(40):
        a = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        t = rng.uniform(-2, 2)
        u = rng.uniform(0.01, 3)
        a2, t2, u2 = proj_to_horo(horo_to_proj(a, t, u))
        assert abs(a - a2) < 1e-12 and abs(t - t2) < 1e-12 and abs(u - u2) < 1e-12


def test_geographical_chart():
    z1, z2 = geo_to_affine(0.0, 0.0, 1.0)
    assert z1 == -1 and z2 == 0
    z1, z2 = geo_to_affine(0.5, 0.3, -0.2)
    p = ProjPoint((z1, z2, 1.0 + 0j))
    assert on_isometric_sphere(p)
    with pytest.raises(ValueError):
        geo_to_affine(2.0, 0.0, 0.0)


def test_interior_preserved_by_catalog():
    rng = random.Random(12)
    names = ("R", "P", "R1", "R2", "R3", "A0", "Ay", "Ay0")
    count = 0
    while count < 100:
        z2 = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7))
        z1 = complex(-abs(z2) ** 2 / 2 - rng.uniform(0.1, 2.0), rng.uniform(-1, 1))
        p = ProjPoint((z1, z2, 1.0 + 0j))
        if location(p) != "interior":
            continue
        count += 1
        g = builtin(rng.choice(names))
        q = apply_isometry(g, p)
        if abs(q.numeric()[2]) < 1e-9:
            continue
        assert location(q) == "interior"


def test_sphere_membership_R_invariant():
    rng = random.Random(14)
    for _ in range(30):
        theta = rng.uniform(-1.2, 1.2)
        r = rng.uniform(-0.9, 0.9) * math.sqrt(2 * math.cos(theta))
        alpha = rng.uniform(-1.5, 1.5)
        z1, z2 = geo_to_affine(r, theta, alpha)
        p = ProjPoint((z1, z2, 1.0 + 0j))
        assert on_isometric_sphere(apply_isometry("R", p))


def test_fixed_point_sets():
    rep = named_fixed_points_check()
    assert rep["pass"], rep
    # eigenvector route: R1 fixes a projective line through the two named
    # boundary points
    fps = fixed_points("R1")
    assert all(f["method"] == "exact" for f in fps)
    eigen_one = [f for f in fps if f["eigenvalue"] == "1"]
    assert any(f.get("eigenspace_dim") == 2 for f in eigen_one)
    # R's interior fixed point
    fps = fixed_points("R")
    interior = [f for f in fps if f["location"] == "interior"]
    assert len(interior) == 1
    assert interior[0]["point"].eq(NAMED_POINTS["[-1:0:1]"])


def test_spine_endpoints_and_domain():
    assert horo_to_proj(*j3_point(0)).eq(NAMED_POINTS["[-1:-rho:1]"])
    assert horo_to_proj(*j3_point(1)).eq(NAMED_POINTS["[-1:0:1]"])
    assert horo_to_proj(*j3_point(2)).eq(NAMED_POINTS["[-1:1:1]"])
    # -rho = exp(-i pi/3)
    assert abs(complex(-RHO) - cmath.exp(-1j * math.pi / 3)) < 1e-15
    assert domain_point(0.3, 0.0, "L").eq(horo_to_proj(*j3_point(0.3)))
    far = domain_point(0.3, 1e9, "R*L")
    assert far.eq(NAMED_POINTS["center"], 1e-6)
    p = domain_point(0.7, 2.3, "L")
    assert apply_isometry("R", p).eq(domain_point(0.7, 2.3, "R*L"))
    with pytest.raises(ValueError):
        j3_point(2.5)
    with pytest.raises(ValueError):
        domain_point(0.5, -1.0, "L")


def test_geodesic_chains():
    rep = geodesic_table_check()
    assert rep["pass"], rep
    assert all(c["closes"] for c in rep["chains"])
    arrows = [a for c in rep["chains"] for a in c["arrows"]]
    assert len(arrows) == 10
    assert all(a["base_point_matches"] and a["q_inf_fixed"] for a in arrows)
    noted = [a for a in arrows if "printed_label" in a]
    assert len(noted) == 1 and noted[0]["printed_label"] == "[-1:rho:1]"


def test_reflection_law_on_grid():
    rep = reflection_in_geographical(50)
    assert rep["pass"] and rep["max_error"] < 1e-12


def test_theta_zero_locus_is_fixed():
    # points of the sphere with theta = 0 are exactly the R-fixed ones
    for theta in (-0.8, -0.3, 0.0, 0.4, 1.0):
        r, alpha = 0.5, 0.7
        z1, z2 = geo_to_affine(r, theta, alpha)
        p = ProjPoint((z1, z2, 1.0 + 0j))
        fixed = apply_isometry("R", p).eq(p, 1e-9)
        assert fixed == (abs(theta) < 1e-12)


def test_spine_conjugation():
    assert spine_conjugation_check()["pass"]
