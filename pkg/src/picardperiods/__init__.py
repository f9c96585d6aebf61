"""Exact and numerical verification of the Picard period-polynomial
constructions: the lattice unitary group over the Eisenstein integers and
its presentations, the formal-variable cocycle relations, classical period
polynomials, theta constants and the invariant-polynomial ring, the complex
2-ball geometry of the integration chain, and the moduli path groupoid.
"""

__version__ = "1.0.0"

__all__ = [
    "cyclotomic",
    "matgroup",
    "polyaction",
    "cocycle",
    "elliptic",
    "chgeometry",
    "thetaforms",
    "runge_data",
    "quadrature",
    "modulipaths",
    "reports",
    "cli",
]
