"""Homogeneous polynomials over Q(zeta_12) and the formal-variable actions.

Provides the expansion engine used everywhere a linear change of variables
hits a polynomial: the PU(2,1;Z[rho]) action on (X0,X1,X2), the PSL(2,Z)
action on (X0,X1), and the invariant-ring substitutions on (f1,f2,f3).
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .cyclotomic import Cyc, ONE, ZERO, unit_class

__all__ = [
    "HomPoly",
    "LinearSub",
    "substitute",
    "act_pu21",
    "act_psl2",
    "pu21_sub_matrix",
    "psl2_sub_matrix",
    "form_invariance_identity",
    "PU_VARS",
    "PSL_VARS",
]

Monomial = Tuple[int, ...]


class HomPoly:
    """Homogeneous polynomial: exponent vector -> nonzero Cyc coefficient."""

    __slots__ = ("vars", "degree", "terms")

    def __init__(self, variables: Sequence[str], degree: int,
                 terms: Optional[Dict[Monomial, Cyc]] = None):
        self.vars = tuple(variables)
        self.degree = degree
        clean: Dict[Monomial, Cyc] = {}
        for mon, coeff in (terms or {}).items():
            mon = tuple(mon)
            if len(mon) != len(self.vars) or sum(mon) != degree:
                raise ValueError("monomial %s is not degree-%d in %d variables"
                                 % (mon, degree, len(self.vars)))
            coeff = coeff if isinstance(coeff, Cyc) else Cyc(coeff)
            if not coeff.is_zero():
                clean[mon] = coeff
        self.terms = clean

    @staticmethod
    def variable(variables: Sequence[str], name: str) -> "HomPoly":
        idx = list(variables).index(name)
        mon = tuple(1 if i == idx else 0 for i in range(len(variables)))
        return HomPoly(variables, 1, {mon: ONE})

    @staticmethod
    def zero(variables: Sequence[str], degree: int) -> "HomPoly":
        return HomPoly(variables, degree, {})

    def __add__(self, other: "HomPoly") -> "HomPoly":
        self._check_compatible(other)
        terms = dict(self.terms)
        for mon, c in other.terms.items():
            s = terms.get(mon, ZERO) + c
            if s.is_zero():
                terms.pop(mon, None)
            else:
                terms[mon] = s
        return HomPoly(self.vars, self.degree, terms)

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        return self + (-other)

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.vars, self.degree,
                       {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            s = Cyc(other) if not isinstance(other, Cyc) else other
            if s.is_zero():
                return HomPoly(self.vars, self.degree, {})
            return HomPoly(self.vars, self.degree,
                           {m: c * s for m, c in self.terms.items()})
        if self.vars != other.vars:
            raise ValueError("variable mismatch")
        out: Dict[Monomial, Cyc] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return HomPoly(self.vars, self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = HomPoly(self.vars, 0, {(0,) * len(self.vars): ONE})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomPoly):
            return NotImplemented
        return (self.vars == other.vars and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.vars, self.degree, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mon: Monomial) -> Cyc:
        return self.terms.get(tuple(mon), ZERO)

    def proportionality(self, other: "HomPoly") -> Optional[Cyc]:
        """Return lam with other = lam * self, or None if not proportional."""
        self._check_compatible(other)
        if self.is_zero():
            return ZERO if other.is_zero() else None
        if set(self.terms) != set(other.terms):
            return None
        mon = next(iter(self.terms))
        lam = other.terms[mon] / self.terms[mon]
        for m, c in self.terms.items():
            if other.terms[m] != lam * c:
                return None
        return lam

    def sorted_terms(self) -> List[Tuple[Monomial, Cyc]]:
        """Graded-lex order with the first variable largest."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mon, c in self.sorted_terms():
            factors = ["%s^%d" % (v, e) if e > 1 else v
                       for v, e in zip(self.vars, mon) if e]
            body = " ".join(factors) if factors else "1"
            parts.append("(%s) * %s" % (c, body))
        return " + ".join(parts)

    __repr__ = __str__

    def _check_compatible(self, other: "HomPoly"):
        if self.vars != other.vars or self.degree != other.degree:
            raise ValueError("polynomials not in the same graded piece")


class LinearSub:
    """Linear change of variables x_k -> sum_j M[k][j] x_j, with optional scalar."""

    def __init__(self, matrix: Sequence[Sequence[Cyc]], scalar: Cyc = ONE):
        self.matrix = tuple(tuple(e if isinstance(e, Cyc) else Cyc(e) for e in row)
                            for row in matrix)
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("substitution matrix must be square")
        self.scalar = scalar if isinstance(scalar, Cyc) else Cyc(scalar)

    def image_forms(self, variables: Sequence[str]) -> List[HomPoly]:
        """The degree-1 images of the variables, as polynomials."""
        n = len(self.matrix)
        if len(variables) != n:
            raise ValueError("variable count mismatch")
        forms = []
        for k in range(n):
            terms = {}
            for j in range(n):
                if not self.matrix[k][j].is_zero():
                    mon = tuple(1 if i == j else 0 for i in range(n))
                    terms[mon] = self.matrix[k][j]
            forms.append(HomPoly(variables, 1, terms))
        return forms

    def apply(self, p: HomPoly) -> "HomPoly":
        return substitute(p, self)


def substitute(p: HomPoly, sub: LinearSub) -> HomPoly:
    """Exact expansion of p under the substitution.

    The optional scalar multiplies the whole image once; callers that need
    scalar^degree fold it into the matrix instead.
    """
    forms = sub.image_forms(p.vars)
    n = len(p.vars)
    # cache powers of each image form
    power_cache: List[Dict[int, HomPoly]] = [dict() for _ in range(n)]

    def form_power(i: int, e: int) -> HomPoly:
        cached = power_cache[i].get(e)
        if cached is None:
            cached = forms[i] ** e
            power_cache[i][e] = cached
        return cached

    out = HomPoly.zero(p.vars, p.degree)
    for mon, coeff in p.terms.items():
        img = HomPoly(p.vars, 0, {(0,) * n: coeff})
        for i, e in enumerate(mon):
            if e:
                img = img * form_power(i, e)
        out = out + img
    if not (sub.scalar == ONE):
        out = out * sub.scalar
    return out


PU_VARS = ("X0", "X1", "X2")


def pu21_sub_matrix(g) -> Tuple[Tuple[Cyc, ...], ...]:
    """Substitution matrix B with X_k -> sum_j conj(g)[2-k][2-j] X_j.

    B(g) = J conj(g) J for the exchange matrix J, so B(gh) = B(g)B(h); the
    cube root of det g is never materialized (degrees are multiples of 3).
    """
    e = g.entries if hasattr(g, "entries") else g
    return tuple(tuple(e[2 - k][2 - j].conj() for j in range(3)) for k in range(3))


def act_pu21(g, p: HomPoly, det: Cyc) -> HomPoly:
    """Action of g on a degree-3m polynomial in (X0,X1,X2): substitute by
    B(g) and multiply by det^(degree/3)."""
    if p.degree % 3:
        raise ValueError("PU(2,1) acts only in degrees divisible by 3")
    sub = LinearSub(pu21_sub_matrix(g))
    out = substitute(p, sub)
    return out * det ** (p.degree // 3)


PSL_VARS = ("X0", "X1")


def psl2_sub_matrix(gamma) -> Tuple[Tuple[Cyc, ...], ...]:
    """Substitution X_k -> (-1)^k a[1-k][1] X0 + (-1)^(k+1) a[1-k][0] X1."""
    a = [[Cyc(x) for x in row] for row in gamma]
    return (
        (a[1][1], -a[1][0]),
        (-a[0][1], a[0][0]),
    )


def act_psl2(gamma, p: HomPoly) -> HomPoly:
    """Unimodular-integer-matrix action on polynomials in (X0,X1)."""
    a, b, c, d = gamma[0][0], gamma[0][1], gamma[1][0], gamma[1][1]
    if a * d - b * c != 1:
        raise ValueError("matrix is not unimodular")
    return substitute(p, LinearSub(psl2_sub_matrix(gamma)))


def form_invariance_identity(g, mu: Cyc, k: int = 2) -> bool:
    """Exact polynomial identity behind the invariant 2-form.

    Homogenize the ball coordinates to z_hat = (z1, z2, z0) and set
    N_i = (row i of g).z_hat, B = pu21 substitution matrix,
    A = z1 X0 + z2 X1 + z0 X2.  Unitarity of g against the Hermitian form
    (t(g) J0 conj(g) = mu J0) gives the sharp bilinear identity

        sum_i N_i * (B X)_i = conj(mu) * A,

    and hence, for any weight k, the 2-form invariance

        (sum_i N_i (BX)_i)^(3k-3) = conj(mu)^(3k-3) * A^(3k-3)

    whose scalar bookkeeping against j_g^k and the holomorphic Jacobian is
    what makes f(z)(z1 X0 + z2 X1 + X2)^(3k-3) dz1^dz2 invariant.  Both are
    checked exactly over Q(zeta_12); returns True iff they hold.
    """
    e = g.entries if hasattr(g, "entries") else g
    variables = ("z1", "z2", "z0", "X0", "X1", "X2")
    z1 = HomPoly.variable(variables, "z1")
    z2 = HomPoly.variable(variables, "z2")
    z0 = HomPoly.variable(variables, "z0")
    X = [HomPoly.variable(variables, n) for n in ("X0", "X1", "X2")]
    zhat = (z1, z2, z0)
    B = pu21_sub_matrix(e)

    pairing = HomPoly.zero(variables, 2)
    for i in range(3):
        n_i = zhat[0] * e[i][0] + zhat[1] * e[i][1] + zhat[2] * e[i][2]
        bx_i = X[0] * B[i][0] + X[1] * B[i][1] + X[2] * B[i][2]
        pairing = pairing + n_i * bx_i

    a = z1 * X[0] + z2 * X[1] + z0 * X[2]
    mu_c = mu.conj()
    if not (pairing == a * mu_c):
        return False
    m = 3 * k - 3
    return pairing ** m == (a ** m) * mu_c ** m
