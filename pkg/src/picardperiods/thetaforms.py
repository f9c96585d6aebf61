"""Period matrix, theta constants, the invariant polynomials, and the
modularity checks on the ball.

Numerics policy: the period matrix and theta sums are double precision with
truncation estimates reported; the invariance of the degree-6 and degree-12
polynomials under the two invariant-group generators is verified in exact
arithmetic via polyaction.

Two theta-built functions of a ball point are provided:

* `runge_eval` composes the invariant polynomials with the three theta
  constants of the displayed period matrix.  The result is well defined and
  reproducible, but it is *not* automorphic for the lattice: the symplectic
  transformations attached to the generators move the three characteristics
  out of the chosen set (see `characteristic_escape_check`), so the printed
  transformation law fails for it.  The report machinery measures this
  honestly rather than asserting it.

* `even_theta_product` is the product of all 36 even theta constants of the
  period matrix (the classical genus-3 theta-null product) and *does*
  satisfy the transformation law, with weight 12 inferred consistently from
  every generator.  It decays exponentially toward the cusp and is the
  default integrand for the period-polynomial quadrature.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .cyclotomic import Cyc, I, ONE, RHO, RHO2, unit_class
from .matgroup import ProjMat, builtin
from .polyaction import HomPoly, LinearSub, substitute
from . import runge_data

__all__ = [
    "period_matrix",
    "is_siegel",
    "interior_samples",
    "ThetaEngine",
    "theta_constant",
    "theta_triple",
    "boundary_series",
    "runge_eval",
    "runge_invariance",
    "select_p12_reading",
    "even_theta_product",
    "make_integrand",
    "modularity_residual",
    "weight_infer",
    "jacobian_formula_check",
    "period_equivariance_check",
    "characteristic_escape_check",
    "SYMPLECTIC_LIFTS",
]

_RHO_C = complex(RHO)
_RHO2_C = _RHO_C * _RHO_C


def period_matrix(z1: complex, z2: complex) -> np.ndarray:
    """The displayed 3x3 period matrix Omega(z1, z2); symmetric by construction."""
    r2 = _RHO2_C
    r = _RHO_C
    return np.array([
        [(2 * r2 * z1 + z2 * z2) / (1 - r), r2 * z2, (r2 * z1 - r * z2 * z2) / (r - 1)],
        [r2 * z2, -r2, z2],
        [(r2 * z1 - r * z2 * z2) / (r - 1), z2, (2 * z1 + z2 * z2) / ((1 - r) * r)],
    ])


def is_siegel(omega: np.ndarray, tol: float = 1e-12) -> bool:
    if omega.shape != (3, 3) or np.abs(omega - omega.T).max() > tol:
        return False
    return float(np.linalg.eigvalsh(omega.imag).min()) > tol


def interior_samples(n: int, seed: int = 0) -> List[Tuple[complex, complex]]:
    """Seeded interior points of the ball, 2 Re(z1) + |z2|^2 < 0."""
    rng = np.random.default_rng(seed)
    pts = []
    while len(pts) < n:
        z2 = complex(rng.normal(scale=0.4), rng.normal(scale=0.4))
        z1 = complex(-abs(z2) ** 2 / 2 - rng.uniform(0.2, 2.0),
                     rng.normal(scale=0.6))
        if 2 * z1.real + abs(z2) ** 2 < -1e-9:
            pts.append((z1, z2))
    return pts


# -- theta machinery -----------------------------------------------------------

TRIPLE_CHARS: Tuple[Tuple[int, int, int], ...] = ((1, 0, 0), (0, 1, 0), (1, 1, 0))

EVEN_CHARS: Tuple[Tuple[Tuple[float, ...], Tuple[float, ...]], ...] = tuple(
    (a, b)
    for a in itertools.product((0.0, 0.5), repeat=3)
    for b in itertools.product((0.0, 0.5), repeat=3)
    if int(round(4 * sum(x * y for x, y in zip(a, b)))) % 2 == 0
)
assert len(EVEN_CHARS) == 36


class ThetaEngine:
    """Vectorized truncated theta sums over the integer box |n|_inf <= radius.

    `fac` scales the quadratic form: fac = 1 evaluates the series
    sum exp(2 pi i (n+a) Omega (n+a) + 2 pi i (n+a) b), the convention of the
    displayed constants (theta at doubled argument); fac = 1/2 evaluates the
    classical theta at Omega itself.
    """

    def __init__(self, radius: int):
        self.radius = int(radius)
        r = np.arange(-self.radius, self.radius + 1)
        self.lattice = np.array(np.meshgrid(r, r, r, indexing="ij"),
                                dtype=np.float64).reshape(3, -1).T

    def _mono(self, shift: np.ndarray) -> np.ndarray:
        m = self.lattice + shift
        return np.stack([
            m[:, 0] ** 2, m[:, 1] ** 2, m[:, 2] ** 2,
            2 * m[:, 0] * m[:, 1], 2 * m[:, 0] * m[:, 2], 2 * m[:, 1] * m[:, 2],
        ], axis=1), m

    @staticmethod
    def _omvec(omega: np.ndarray) -> np.ndarray:
        return np.array([omega[0, 0], omega[1, 1], omega[2, 2],
                         omega[0, 1], omega[0, 2], omega[1, 2]])

    def char_sum(self, omega: np.ndarray, a, b=(0.0, 0.0, 0.0), fac: float = 1.0) -> complex:
        mono, m = self._mono(np.asarray(a, dtype=np.float64))
        q = fac * (mono @ self._omvec(omega)) + m @ np.asarray(b, dtype=np.float64)
        return complex(np.exp(2j * np.pi * q).sum())

    def tail_estimate(self, omega: np.ndarray, fac: float = 1.0) -> float:
        """Gaussian majorant of the discarded terms, from min eig of Im Omega."""
        lam = float(np.linalg.eigvalsh(omega.imag).min())
        if lam <= 0:
            return math.inf
        total = 0.0
        for s in range(self.radius + 1, self.radius + 201):
            shell = 26 * s * s
            total += shell * math.exp(-2 * math.pi * fac * lam * (s - 0.5) ** 2)
        return total

    def triple(self, omega: np.ndarray) -> np.ndarray:
        """The three displayed constants f_1, f_2, f_3 (half-characteristics
        (1,0,0)/2, (0,1,0)/2, (1,1,0)/2, argument-doubling convention)."""
        return np.array([
            self.char_sum(omega, np.array(k, dtype=np.float64) / 2)
            for k in TRIPLE_CHARS
        ])

    def even_product(self, omega: np.ndarray) -> complex:
        """Product of the 36 even theta constants at argument Omega."""
        total = 1.0 + 0j
        for a, b in EVEN_CHARS:
            total *= self.char_sum(omega, a, b, fac=0.5)
        return total

    # batch versions over many omegas, used by the quadrature module
    def even_product_batch(self, omegas: np.ndarray) -> np.ndarray:
        """omegas: (S, 3, 3) -> (S,) product values.

        The 36 even characteristics share 8 quadratic-form shifts; the b-part
        only contributes a fixed phase vector per characteristic, so the
        expensive exponential is evaluated once per shift.
        """
        omvecs = np.stack([self._omvec(om) for om in omegas], axis=1)  # (6, S)
        by_shift: Dict[Tuple[float, ...], list] = {}
        for a, b in EVEN_CHARS:
            by_shift.setdefault(a, []).append(b)
        total = np.ones(omegas.shape[0], dtype=complex)
        for a, bs in by_shift.items():
            mono, m = self._mono(np.asarray(a))
            base = np.exp(2j * np.pi * 0.5 * (mono @ omvecs))  # (K, S)
            for b in bs:
                phase = np.exp(2j * np.pi * (m @ np.asarray(b)))  # (K,)
                total *= phase @ base
        return total

    def triple_batch(self, omegas: np.ndarray) -> np.ndarray:
        omvecs = np.stack([self._omvec(om) for om in omegas], axis=1)
        out = []
        for k in TRIPLE_CHARS:
            mono, _ = self._mono(np.asarray(k, dtype=np.float64) / 2)
            q = mono @ omvecs
            out.append(np.exp(2j * np.pi * q).sum(axis=0))
        return np.stack(out, axis=1)  # (S, 3)


_ENGINES: Dict[int, ThetaEngine] = {}


def _engine(radius: int) -> ThetaEngine:
    if radius not in _ENGINES:
        _ENGINES[radius] = ThetaEngine(radius)
    return _ENGINES[radius]


def theta_constant(label: int, omega: np.ndarray, radius: int = 12) -> Tuple[complex, float]:
    """Displayed constant f_label with a truncation-tail estimate."""
    if label not in (1, 2, 3):
        raise ValueError("label must be 1, 2 or 3")
    if not is_siegel(omega):
        raise ValueError("matrix is not a Siegel point")
    eng = _engine(radius)
    a = np.array(TRIPLE_CHARS[label - 1], dtype=np.float64) / 2
    return eng.char_sum(omega, a), eng.tail_estimate(omega)


def theta_triple(z1: complex, z2: complex, radius: int = 12) -> np.ndarray:
    return _engine(radius).triple(period_matrix(z1, z2))


def boundary_series(label: int, radius: int = 40) -> Tuple[complex, float]:
    """The reduced one-dimensional series at the chain vertex [0:0:1]:
    sum_n exp(2 pi i (-1) (n + delta)^2 rho^2), delta the half-shift of the
    middle coordinate.  Returns (value, largest term modulus at the cutoff)."""
    delta = 0.5 if label in (2, 3) else 0.0
    total = 0.0 + 0j
    for n in range(-radius, radius + 1):
        total += cmath.exp(2j * math.pi * (-(n + delta) ** 2) * _RHO2_C)
    edge = abs(cmath.exp(2j * math.pi * (-(radius + delta) ** 2) * _RHO2_C))
    return total, edge


# -- invariant polynomials ------------------------------------------------------

def _poly_numeric_terms(p: HomPoly) -> List[Tuple[Tuple[int, ...], complex]]:
    return [(mon, complex(c)) for mon, c in p.terms.items()]


_P6_NUM = None
_P12_NUM = None


def _p6_terms():
    global _P6_NUM
    if _P6_NUM is None:
        _P6_NUM = _poly_numeric_terms(runge_data.p6_poly())
    return _P6_NUM


def _p12_terms():
    global _P12_NUM
    if _P12_NUM is None:
        _P12_NUM = _poly_numeric_terms(runge_data.p12_poly())
    return _P12_NUM


def _eval_terms(terms, f: np.ndarray) -> complex:
    return sum(c * f[0] ** a * f[1] ** b * f[2] ** d for (a, b, d), c in terms)


def runge_eval(name: str, point: Tuple[complex, complex], radius: int = 12) -> complex:
    """P6 or P12 at the theta constants of the period matrix of the point."""
    z1, z2 = point
    if 2 * z1.real + abs(z2) ** 2 >= 0:
        raise ValueError("point is not interior")
    f = theta_triple(z1, z2, radius)
    if name == "P6":
        return _eval_terms(_p6_terms(), f)
    if name == "P12":
        return _eval_terms(_p12_terms(), f)
    raise KeyError("unknown polynomial %r" % name)


_INVARIANCE_MEMO: Dict[str, dict] = {}


def runge_invariance(name: str) -> dict:
    """Exact invariance of P6 / P12 under both invariant-group generators."""
    if name in _INVARIANCE_MEMO:
        return _INVARIANCE_MEMO[name]
    poly = runge_data.p6_poly() if name == "P6" else runge_data.p12_poly()
    g1, g2 = runge_data.invariant_group_generators()
    out = []
    for label, gen in (("generator_1", g1), ("generator_2", g2)):
        img = substitute(poly, LinearSub(gen))
        lam = poly.proportionality(img)
        rec = {
            "generator": label,
            "invariant_up_to_scalar": lam is not None,
            "scalar": str(lam) if lam is not None else None,
            "scalar_is_root_of_unity": (unit_class(lam) is not None) if lam is not None else False,
        }
        out.append(rec)
    rep = {
        "polynomial": name,
        "term_count": len(poly.terms),
        "checks": out,
        "pass": all(r["invariant_up_to_scalar"] and r["scalar"] == "1" for r in out),
    }
    _INVARIANCE_MEMO[name] = rep
    return rep


def select_p12_reading() -> dict:
    """Re-derive which reading of each garbled coefficient passes invariance.

    Exactly one of the eight candidate tables is invariant under both
    generators; the selection is returned and compared with the stored one.
    """
    if "_selection" in _INVARIANCE_MEMO:
        return _INVARIANCE_MEMO["_selection"]
    g1, g2 = runge_data.invariant_group_generators()
    monos = sorted(runge_data.AMBIGUOUS_READINGS)
    from .cyclotomic import parse_cyc

    fixed = {}
    for mon, s in runge_data.P12_TERMS:
        if mon not in runge_data.AMBIGUOUS_READINGS:
            fixed[mon] = parse_cyc(s)
    base = HomPoly(runge_data.RUNGE_VARS, 12, fixed)

    imgs = {}
    for gl, gen in (("g1", g1), ("g2", g2)):
        sub = LinearSub(gen)
        imgs[(gl, "base")] = substitute(base, sub)
        for mon in monos:
            single = HomPoly(runge_data.RUNGE_VARS, 12, {mon: ONE})
            imgs[(gl, mon)] = substitute(single, sub)

    passing = []
    for combo in itertools.product((0, 1), repeat=len(monos)):
        choice = dict(zip(monos, combo))
        coeffs = {m: parse_cyc(runge_data.AMBIGUOUS_READINGS[m][choice[m]])
                  for m in monos}
        poly = base
        for m in monos:
            poly = poly + HomPoly(runge_data.RUNGE_VARS, 12, {m: coeffs[m]})
        ok = True
        for gl in ("g1", "g2"):
            img = imgs[(gl, "base")]
            for m in monos:
                img = img + coeffs[m] * imgs[(gl, m)]
            lam = poly.proportionality(img)
            if lam is None or not (lam == ONE):
                ok = False
                break
        if ok:
            passing.append(choice)
    rep = {
        "ambiguous_monomials": [list(m) for m in monos],
        "passing_selections": [[c[m] for m in monos] for c in passing],
        "stored_selection": [runge_data.SELECTED_READINGS[m] for m in monos],
        "unique": len(passing) == 1,
        "matches_stored": (len(passing) == 1 and
                           passing[0] == runge_data.SELECTED_READINGS),
    }
    _INVARIANCE_MEMO["_selection"] = rep
    return rep


# -- functions on the ball -------------------------------------------------------

def even_theta_product(point: Tuple[complex, complex], radius: int = 12) -> complex:
    """Product of the 36 even theta constants of the period matrix.

    Numerically verified to satisfy the transformation law with weight 12
    for every catalog generator, and exponentially small toward the cusp.
    """
    z1, z2 = point
    return _engine(radius).even_product(period_matrix(z1, z2))


def make_integrand(name: str, radius: int = 12) -> Tuple[Callable, Optional[int]]:
    """(callable point -> value, known weight or None) for the named form."""
    if name in ("theta_null", "even_product", "chi"):
        return (lambda p: even_theta_product(p, radius)), 12
    if name in ("P6sq", "P6^2"):
        return (lambda p: runge_eval("P6", p, radius) ** 2), None
    if name == "P12":
        return (lambda p: runge_eval("P12", p, radius)), None
    raise KeyError("unknown integrand %r" % name)


def _ball_action(g: ProjMat, z1: complex, z2: complex) -> Tuple[complex, complex]:
    e = [[complex(x) for x in row] for row in g.entries]
    w = [e[i][0] * z1 + e[i][1] * z2 + e[i][2] for i in range(3)]
    return w[0] / w[2], w[1] / w[2]


def _jacobian_factor(g: ProjMat, z1: complex, z2: complex) -> complex:
    e = [[complex(x) for x in row] for row in g.entries]
    den = e[2][0] * z1 + e[2][1] * z2 + e[2][2]
    return complex(g.det()) / den ** 3


def _modularity_data(g, f: Callable, samples: Sequence[Tuple[complex, complex]]):
    """(lhs, f(g z), j_g(z)) per usable sample, plus rejection count."""
    if isinstance(g, str):
        g = builtin(g)
    data = []
    rejected = 0
    for (z1, z2) in samples:
        w1, w2 = _ball_action(g, z1, z2)
        if 2 * w1.real + abs(w2) ** 2 >= 0:
            rejected += 1
            continue
        data.append((f((z1, z2)), f((w1, w2)), _jacobian_factor(g, z1, z2)))
    return data, rejected


def _residual_from_data(data, k: int) -> float:
    worst = 0.0
    for lhs, fgz, j in data:
        worst = max(worst, abs(lhs - j ** k * fgz) / max(1.0, abs(lhs)))
    return worst


def modularity_residual(g, k: int, f: Callable, samples: Sequence[Tuple[complex, complex]],
                        ) -> dict:
    """max over samples of |f(z) - j_g(z)^k f(g z)| / max(1, |f(z)|)."""
    data, rejected = _modularity_data(g, f, samples)
    return {"residual": _residual_from_data(data, k),
            "samples_used": len(data), "samples_rejected": rejected}


def weight_modulus(g) -> Optional[int]:
    """Order of j_g when it is a constant root of unity (the weight is then
    determined only mod that order); None when j_g genuinely varies."""
    if isinstance(g, str):
        g = builtin(g)
    e = g.entries
    if not (e[2][0].is_zero() and e[2][1].is_zero()):
        return None
    j = g.det() / e[2][2] ** 3
    for m in range(1, 13):
        if j ** m == ONE:
            return m
    return None


def weight_infer(g, f: Callable, samples: Sequence[Tuple[complex, complex]],
                 k_range: Iterable[int] = range(1, 13)) -> dict:
    """argmin over k of the modularity residual; ties and margins reported.

    When j_g is a constant root of unity of order m the residual is
    m-periodic in k and only the congruence class is meaningful.
    """
    data, _ = _modularity_data(g, f, samples)
    rows = sorted((_residual_from_data(data, k), k) for k in k_range)
    best, second = rows[0], rows[1] if len(rows) > 1 else (math.inf, None)
    modulus = weight_modulus(g)
    sep_rows = [r for r in rows[1:]
                if modulus is None or (r[1] - best[1]) % modulus != 0]
    sep = sep_rows[0] if sep_rows else (math.inf, None)
    return {
        "k": best[1],
        "residual": best[0],
        "k_modulus": modulus,
        "runner_up_k": second[1],
        "runner_up_residual": second[0],
        "separation_orders": (math.log10(sep[0] / best[0])
                              if best[0] > 0 and sep[0] not in (0.0, math.inf)
                              else math.inf),
    }


def jacobian_formula_check(gname: str = "P", n: int = 5, h: float = 1e-5,
                           seed: int = 3) -> dict:
    """The closed-form factor det g / (g20 z1 + g21 z2 + g22)^3 against the
    numerically differentiated Jacobian determinant of the action."""
    g = builtin(gname)
    worst = 0.0
    for (z1, z2) in interior_samples(n, seed):
        def action(a, b):
            return _ball_action(g, a, b)

        w0 = action(z1, z2)
        d11 = (action(z1 + h, z2)[0] - action(z1 - h, z2)[0]) / (2 * h)
        d12 = (action(z1, z2 + h)[0] - action(z1, z2 - h)[0]) / (2 * h)
        d21 = (action(z1 + h, z2)[1] - action(z1 - h, z2)[1]) / (2 * h)
        d22 = (action(z1, z2 + h)[1] - action(z1, z2 - h)[1]) / (2 * h)
        num = d11 * d22 - d12 * d21
        closed = _jacobian_factor(g, z1, z2)
        worst = max(worst, abs(num - closed) / max(1.0, abs(closed)))
    return {"element": gname, "max_relative_error": worst, "pass": worst < 1e-6}


# integer symplectic lifts gamma with Omega(g z) = (A Omega + B)(C Omega + D)^-1,
# found once by solving the linear equivariance system and frozen here;
# representatives are unique only up to the stabilizer of the image surface
SYMPLECTIC_LIFTS: Dict[str, Tuple[Tuple[int, ...], ...]] = {
    "R1": ((0, 0, 1, 0, 0, 0),
           (0, 1, 0, 0, -1, 0),
           (-1, 0, -1, 0, 0, 0),
           (0, 0, 0, -1, 0, 1),
           (0, 1, 0, 0, 0, 0),
           (0, 0, 0, -1, 0, 0)),
    "P": ((0, 0, 1, 0, -1, 1),
          (0, 1, 0, 0, 0, -1),
          (-1, -1, -1, -1, 1, 0),
          (0, 0, 0, -1, 0, 1),
          (0, 0, 0, -1, 1, 0),
          (0, 0, 0, -1, 0, 0)),
    "R": ((0, 0, 0, -1, 0, 1),
          (0, -1, 0, 0, 1, 0),
          (0, 0, 0, 0, 0, -1),
          (1, 0, 0, 0, 0, 0),
          (0, -1, 0, 0, 0, 0),
          (1, 0, 1, 0, 0, 0)),
    "R2": ((1, 0, 1, 0, 0, 0),
           (1, 1, 0, 0, 0, 0),
           (-1, 0, 0, 0, 0, 0),
           (-1, -1, -1, 0, 0, 1),
           (0, 0, -1, 0, 1, 0),
           (0, -1, -1, -1, 1, 1)),
    "R3": ((-1, 0, -1, -1, 1, 0),
           (0, -1, 0, 1, 0, 0),
           (1, 1, 0, 1, -1, -1),
           (0, 0, 0, 0, 0, -1),
           (0, 0, 0, 1, -1, -1),
           (0, 0, 0, 1, 0, -1)),
}


def period_equivariance_check(n: int = 10, seed: int = 5) -> dict:
    """Omega(g z) = gamma_g . Omega(z) for the frozen integer symplectic lifts."""
    jsym = np.block([[np.zeros((3, 3)), np.eye(3)], [-np.eye(3), np.zeros((3, 3))]])
    results = []
    pts = interior_samples(n, seed)
    for gname, gam in SYMPLECTIC_LIFTS.items():
        gm = np.array(gam, dtype=float)
        a, b, c, d = gm[:3, :3], gm[:3, 3:], gm[3:, :3], gm[3:, 3:]
        sympl = np.allclose(gm.T @ jsym @ gm, jsym)
        g = builtin(gname)
        worst = 0.0
        for (z1, z2) in pts:
            w1, w2 = _ball_action(g, z1, z2)
            if 2 * w1.real + abs(w2) ** 2 >= 0:
                continue
            om = period_matrix(z1, z2)
            lhs = (a @ om + b) @ np.linalg.inv(c @ om + d)
            worst = max(worst, float(np.abs(lhs - period_matrix(w1, w2)).max()))
        results.append({
            "element": gname,
            "symplectic": sympl,
            "max_error": worst,
            "pass": sympl and worst < 1e-9,
        })
    return {"checks": results, "pass": all(r["pass"] for r in results)}


def characteristic_escape_check(radius: int = 10, seed: int = 9) -> dict:
    """Structural fact behind the failure of the printed transformation law
    for the displayed theta triple: the pullback of each triple constant
    under R1 equals a theta constant with a characteristic outside the
    triple, with a unit factor.

    Measured maps (exact unit ratios): (1,0,0) -> (1,0,1), (0,1,0) -> itself,
    (1,1,0) -> (1,1,1).
    """
    eng = _engine(radius)
    g = builtin("R1")
    expected = {(1, 0, 0): (1, 0, 1), (0, 1, 0): (0, 1, 0), (1, 1, 0): (1, 1, 1)}
    pts = interior_samples(3, seed)
    checks = []
    for src, dst in expected.items():
        ok = True
        ratios = []
        for (z1, z2) in pts:
            w1, w2 = _ball_action(g, z1, z2)
            lhs = eng.char_sum(period_matrix(w1, w2), np.array(src) / 2)
            rhs = eng.char_sum(period_matrix(z1, z2), np.array(dst) / 2)
            ratio = lhs / rhs
            ratios.append(ratio)
            if abs(abs(ratio) - 1) > 1e-8:
                ok = False
        spread = max(abs(r - ratios[0]) for r in ratios)
        checks.append({
            "source": src,
            "image": dst,
            "unit_ratio": ok and spread < 1e-8,
        })
    escapes = any(c["source"] != c["image"] for c in checks)
    return {
        "checks": checks,
        "triple_escapes_under_R1": escapes,
        "pass": all(c["unit_ratio"] for c in checks) and escapes,
    }
