"""Exact arithmetic in Q(zeta_12).

Every scalar used by the verification suite lives in the degree-4 cyclotomic
field Q(zeta) with zeta a primitive 12th root of unity, minimal polynomial
zeta^4 - zeta^2 + 1.  The field contains i = zeta^3, the cube root of unity
rho = zeta^2 - 1, and sqrt(3) = zeta + zeta^11, so all Eisenstein-integer
matrix entries and all invariant-polynomial coefficients are representable
with rational coordinates and no floating point.

Elements are immutable; arithmetic returns new values.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Optional, Tuple

__all__ = [
    "Cyc",
    "ZERO",
    "ONE",
    "ZETA",
    "I",
    "RHO",
    "RHO2",
    "SQRT3",
    "UNIT_ROOTS",
    "unit_class",
    "unit_from_class",
    "parse_cyc",
]


class Cyc:
    """An element c0 + c1*z + c2*z^2 + c3*z^3 of Q(zeta_12), z^4 = z^2 - 1."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        if isinstance(c0, Cyc):
            self.c = c0.c
            return
        self.c = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @staticmethod
    def _raw(coeffs: Tuple[Fraction, Fraction, Fraction, Fraction]) -> "Cyc":
        out = object.__new__(Cyc)
        out.c = coeffs
        return out

    # -- ring structure -------------------------------------------------
    def __add__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        return Cyc._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __sub__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        return Cyc._raw((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Cyc":
        a = self.c
        return Cyc._raw((-a[0], -a[1], -a[2], -a[3]))

    def __mul__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        r0 = a[0] * b[0]
        r1 = a[0] * b[1] + a[1] * b[0]
        r2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
        r3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
        r4 = a[1] * b[3] + a[2] * b[2] + a[3] * b[1]
        r5 = a[2] * b[3] + a[3] * b[2]
        r6 = a[3] * b[3]
        # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
        return Cyc._raw((r0 - r4 - r6, r1 - r5, r2 + r4, r3 + r5))

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        """Multiplicative inverse, via the norm down the tower of conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
        # product of the three nontrivial Galois conjugates (zeta -> zeta^5,7,11)
        num = self.galois(5) * self.galois(7) * self.galois(11)
        norm = self * num  # rational
        n = norm.c
        assert n[1] == 0 and n[2] == 0 and n[3] == 0
        inv_n = 1 / n[0]
        m = num.c
        return Cyc._raw((m[0] * inv_n, m[1] * inv_n, m[2] * inv_n, m[3] * inv_n))

    def __truediv__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Cyc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "Cyc":
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- field automorphisms --------------------------------------------
    def galois(self, k: int) -> "Cyc":
        """Image under zeta -> zeta^k for k coprime to 12."""
        img = _ZETA_POWERS[k % 12]
        out = Cyc(self.c[0])
        p = ONE
        for i in range(1, 4):
            p = p * img
            if self.c[i]:
                out = out + Cyc(self.c[i]) * p
        return out

    def conj(self) -> "Cyc":
        """Complex conjugation, zeta -> zeta^11."""
        return self.galois(11)

    # -- predicates and comparisons --------------------------------------
    def is_zero(self) -> bool:
        return self.c == _ZERO4

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0

    def is_real(self) -> bool:
        return self == self.conj()

    def rational_part(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational: %s" % self)
        return self.c[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyc(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    # -- numerical embedding ----------------------------------------------
    def __complex__(self) -> complex:
        return (
            float(self.c[0])
            + float(self.c[1]) * _Z_C
            + float(self.c[2]) * _Z2_C
            + float(self.c[3]) * _Z3_C
        )

    def embed(self, precision: int = 53):
        """Numerical value at zeta = exp(i*pi/6), rounded to `precision` bits.

        Returns a python complex for precision <= 53, else an mpmath.mpc.
        """
        if precision <= 53:
            return complex(self)
        import mpmath

        with mpmath.workprec(precision + 8):
            z = mpmath.expjpi(mpmath.mpf(1) / 6)
            val = sum(mpmath.mpc(c.numerator) / c.denominator * z ** i
                      for i, c in enumerate(self.c))
        return mpmath.mpc(mpmath.mpf(val.real), mpmath.mpf(val.imag))

    # -- printing ---------------------------------------------------------
    def __repr__(self):
        return "Cyc(%s)" % self

    def __str__(self):
        terms = []
        for i, c in enumerate(self.c):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = "z" if i == 1 else "z^%d" % i
                if c == 1:
                    terms.append(mon)
                elif c == -1:
                    terms.append("-" + mon)
                else:
                    terms.append("%s*%s" % (c, mon))
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def _coerce(x):
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc(x)
    return NotImplemented


_ZERO4 = (Fraction(0),) * 4

ZERO = Cyc(0)
ONE = Cyc(1)
ZETA = Cyc(0, 1)

# powers of zeta reduced to the basis, for galois()
_ZETA_POWERS = [ONE]
_p = ONE
for _ in range(11):
    _p = _p * ZETA
    _ZETA_POWERS.append(_p)

I = _ZETA_POWERS[3]
RHO = _ZETA_POWERS[2] - ONE        # exp(2*pi*i/3)
RHO2 = RHO * RHO
SQRT3 = ZETA + _ZETA_POWERS[11]

import cmath as _cmath

_Z_C = _cmath.exp(1j * _cmath.pi / 6)
_Z2_C = _Z_C * _Z_C
_Z3_C = _Z2_C * _Z_C

# the twelve units +-rho^j, +-i*rho^j do not all arise; the sixth roots of
# unity +-rho^j are the determinant classes of PU(2,1;Z[rho]) members.
UNIT_ROOTS: Tuple[Cyc, ...] = tuple(
    s * RHO ** j for s in (ONE, -ONE) for j in range(3)
)


def unit_class(a: Cyc) -> Optional[Tuple[int, int]]:
    """Return (sign, j) with a = (-1)^sign * rho^j if a is a sixth root of unity."""
    p = ONE
    for j in range(3):
        if a == p:
            return (0, j)
        if a == -p:
            return (1, j)
        p = p * RHO
    return None


def unit_from_class(sign: int, j: int) -> Cyc:
    u = RHO ** (j % 3)
    return -u if sign % 2 else u


_TOKEN = re.compile(r"\s*([+-]|\d+/\d+|\d+|z\^\d+|z|rho\^2|rho|i|\*)")


def parse_cyc(text: str) -> Cyc:
    """Parse "c0 + c1*z + c2*z^2 + c3*z^3"; also accepts rho, rho^2 and i."""
    pos, total, sign, cur, has_cur = 0, ZERO, 1, ONE, False
    def flush():
        nonlocal total, cur, has_cur, sign
        if has_cur:
            total = total + (cur if sign > 0 else -cur)
        cur, has_cur, sign = ONE, False, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError("cannot parse %r at position %d" % (text, pos))
        tok = m.group(1)
        pos = m.end()
        if tok in "+-":
            flush()
            sign = 1 if tok == "+" else -1
            continue
        if tok == "*":
            continue
        if tok == "z":
            factor = ZETA
        elif tok.startswith("z^"):
            factor = ZETA ** int(tok[2:])
        elif tok == "rho":
            factor = RHO
        elif tok == "rho^2":
            factor = RHO2
        elif tok == "i":
            factor = I
        else:
            factor = Cyc(Fraction(tok))
        cur = cur * factor
        has_cur = True
    flush()
    return total
