"""Symbolic re-derivation of the period-polynomial relations from group words.

Each relation on the formal polynomial P_f(X0,X1,X2) is a sum of terms
"scalar * P_f(linear substitution of the X's)".  A term is derived from a
group word w by taking the substitution matrix B(eval(w)) and the scalar
(det eval(w))^(k-1); the verifier compares the derived terms against the
printed displays for any weight parameter k and records the orientation
(word vs inverse word) that matches.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclotomic import Cyc, ONE, RHO, RHO2, ZERO, unit_class
from .matgroup import GroupWord, eval_word, parse_word, identity
from .polyaction import HomPoly, LinearSub, PSL_VARS, act_psl2, pu21_sub_matrix

__all__ = [
    "RelationTerm",
    "RelationSpec",
    "term_from_word",
    "verify_relation",
    "verify_theorem1",
    "derive_R3_six",
    "RELATION_SPECS",
    "theorem2_report",
    "cyclic_rotation_invariance",
    "conjugation_remark_check",
]

_M1 = -ONE
_MRHO = -RHO
_MRHO2 = -RHO2


@dataclass
class RelationTerm:
    """One term: scalar * P_f(args), args given by a 3x3 substitution matrix."""

    scalar: Cyc
    args: Tuple[Tuple[Cyc, ...], ...]

    def scaled(self, c: Cyc) -> "RelationTerm":
        return RelationTerm(self.scalar * c, self.args)

    def args_strings(self) -> List[str]:
        names = ("X0", "X1", "X2")
        out = []
        for row in self.args:
            parts = []
            for c, n in zip(row, names):
                if c.is_zero():
                    continue
                if c == ONE:
                    parts.append(n)
                elif c == -ONE:
                    parts.append("-" + n)
                else:
                    parts.append("(%s)*%s" % (c, n))
            if not parts:
                out.append("0")
            else:
                s = parts[0]
                for p in parts[1:]:
                    s += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
                out.append(s)
        return out


def term_from_word(word, k: int) -> RelationTerm:
    """Derived term of a word: scalar (det)^(k-1), args via the substitution."""
    if isinstance(word, str):
        word = parse_word(word)
    g = eval_word(word)
    det = g.det()
    return RelationTerm(det ** (k - 1), pu21_sub_matrix(g))


@dataclass
class PrintedTerm:
    """A term as displayed: coefficient (function of k) and argument rows."""

    word: str
    # coefficient = sign * base^(k-1) as printed; base a sixth root of unity
    base: Cyc
    args: Tuple[Tuple[Cyc, ...], ...]
    side: int = 1  # +1 left-hand side, -1 right-hand side of the display

    def coefficient(self, k: int) -> Cyc:
        return self.base ** (k - 1)


def _rows(*rows) -> Tuple[Tuple[Cyc, ...], ...]:
    return tuple(tuple(c if isinstance(c, Cyc) else Cyc(c) for c in row) for row in rows)


@dataclass
class RelationSpec:
    rel_id: str
    group_relation: str
    terms: List[PrintedTerm]
    overall_sign_flip: bool = False  # orientation-reversal sign, as in R^2 = I


# the six Theorem-2 displays, transcribed with each term's associated word
RELATION_SPECS: Dict[str, RelationSpec] = {}


def _register(spec: RelationSpec):
    RELATION_SPECS[spec.rel_id] = spec


_register(RelationSpec(
    "R^2",
    "R*R = I",
    [
        PrintedTerm("", ONE, _rows((1, 0, 0), (0, 1, 0), (0, 0, 1))),
        # P_f(X0,X1,X2) = -P_f(X2,-X1,X0): the minus sign is the
        # orientation-reversal sign of the chain, carried by the spec flag
        PrintedTerm("R", ONE, _rows((0, 0, 1), (0, -1, 0), (1, 0, 0))),
    ],
    overall_sign_flip=True,
))

_register(RelationSpec(
    "r1^6",
    "R1^6 = I",
    [
        PrintedTerm("", ONE, _rows((1, 0, 0), (0, 1, 0), (0, 0, 1))),
        PrintedTerm("R1", _MRHO2, _rows((1, 0, 0), (0, _MRHO, 0), (0, 0, 1))),
        PrintedTerm("R1^2", RHO, _rows((1, 0, 0), (0, RHO2, 0), (0, 0, 1))),
        PrintedTerm("R1^3", _M1, _rows((1, 0, 0), (0, -1, 0), (0, 0, 1))),
        PrintedTerm("R1^4", RHO2, _rows((1, 0, 0), (0, RHO, 0), (0, 0, 1))),
        PrintedTerm("R1^5", _MRHO, _rows((1, 0, 0), (0, _MRHO2, 0), (0, 0, 1))),
    ],
))

_register(RelationSpec(
    "PM",
    "R*P*R*P*R*P = I",
    [
        PrintedTerm("", ONE, _rows((1, 0, 0), (0, 1, 0), (0, 0, 1))),
        PrintedTerm("R*P", RHO,
                    _rows((RHO2, 1, 1), (RHO2, _MRHO2, 0), (1, 0, 0))),
        PrintedTerm("R*P*R*P", RHO2,
                    _rows((0, 0, RHO2), (0, -1, RHO2), (RHO2, 1, 1))),
    ],
))

_register(RelationSpec(
    "[RR1]",
    "R1*R*R1^-1*R^-1 = I",
    [
        PrintedTerm("R1*R", ONE, _rows((0, 0, 1), (0, RHO, 0), (1, 0, 0))),
        PrintedTerm("R*R1*R", ONE, _rows((1, 0, 0), (0, _MRHO, 0), (0, 0, 1))),
    ],
))

_register(RelationSpec(
    "pent1",
    "P*R1^-1*P^-1*R1^-1*P = I",
    [
        PrintedTerm("", ONE, _rows((1, 0, 0), (0, 1, 0), (0, 0, 1))),
        PrintedTerm("P", RHO,
                    _rows((1, 0, 0), (_MRHO2, RHO2, 0), (RHO2, 1, 1))),
        PrintedTerm("R1^-1*P", _MRHO2,
                    _rows((1, 0, 0), (RHO, _MRHO, 0), (RHO2, 1, 1)), side=-1),
    ],
))

_register(RelationSpec(
    "pent2",
    "P*R1^-1*P^-1*R1^-1*P = I",
    [
        PrintedTerm("", ONE, _rows((1, 0, 0), (0, 1, 0), (0, 0, 1))),
        PrintedTerm("P^-1", RHO2,
                    _rows((1, 0, 0), (1, RHO, 0), (RHO, _MRHO, 1))),
        PrintedTerm("P^-1*R1^-1*P", _MRHO,
                    _rows((1, 0, 0), (_MRHO, _MRHO2, 0), (RHO, _MRHO, 1)),
                    side=-1),
    ],
))


def _match_term(printed: PrintedTerm, k: int) -> dict:
    """Try the word and its inverse; accept whichever reproduces the display."""
    results = {}
    for orientation in ("word", "inverse"):
        w = printed.word or ""
        word = parse_word(w) if w else ()
        if orientation == "inverse":
            word = tuple((name, -e) for name, e in reversed(word))
        derived = term_from_word(word, k)
        printed_scalar = printed.coefficient(k)
        # a relation holds up to one common unit scalar; per-term match is
        # exact scalar AND args here, common normalization handled by caller
        ok = derived.args == printed.args and derived.scalar == printed_scalar
        results[orientation] = (derived, ok)
        if ok:
            return {
                "word": printed.word or "I",
                "orientation": orientation,
                "match": True,
                "derived_scalar": str(derived.scalar),
                "printed_scalar": str(printed_scalar),
                "derived_args": derived.args_strings(),
            }
    derived = results["word"][0]
    return {
        "word": printed.word or "I",
        "orientation": None,
        "match": False,
        "derived_scalar": str(derived.scalar),
        "printed_scalar": str(printed.coefficient(k)),
        "derived_args": derived.args_strings(),
        "printed_args": RelationTerm(ONE, printed.args).args_strings(),
    }


def _normalized_terms(spec: RelationSpec, k: int):
    """Derived terms with the common unit scalar of the first term divided out.

    [RR1]'s display has unit coefficients although both words carry the
    common factor (-rho^2)^(k-1); normalizing by the first derived scalar
    makes per-term comparison exact for every relation.
    """
    words = []
    for p in spec.terms:
        w = parse_word(p.word) if p.word else ()
        words.append(w)
    derived = [term_from_word(w, k) for w in words]
    printed_first = spec.terms[0].coefficient(k)
    norm = derived[0].scalar / printed_first
    return [d.scaled(norm.inverse()) for d in derived]


def verify_relation(rel_id: str, k: int = 2) -> dict:
    """Compare every printed term of a Theorem-2 display with its word."""
    spec = RELATION_SPECS[rel_id]
    group_word = parse_word(spec.group_relation.split("=")[0].strip())
    group_ok = eval_word(group_word).proj_eq(identity())
    derived = _normalized_terms(spec, k)
    per_term = []
    all_ok = True
    for printed, d in zip(spec.terms, derived):
        ok = d.args == printed.args and d.scalar == printed.coefficient(k)
        rec = {
            "word": printed.word or "I",
            "side": "lhs" if printed.side > 0 else "rhs",
            "match": ok,
            "derived_scalar": str(d.scalar),
            "printed_scalar": str(printed.coefficient(k)),
            "derived_args": d.args_strings(),
        }
        if not ok:
            rec["printed_args"] = RelationTerm(ONE, printed.args).args_strings()
            all_ok = False
        per_term.append(rec)
    return {
        "relation": rel_id,
        "group_relation": spec.group_relation,
        "group_relation_holds": group_ok,
        "k": k,
        "orientation": "direct words, args X -> B(eval(w)) X",
        "overall_sign_flip": spec.overall_sign_flip,
        "terms": per_term,
        "pass": all_ok and group_ok,
    }


def theorem2_report(ks: Sequence[int] = (1, 2, 3, 4)) -> dict:
    blocks = []
    for rel_id in ("R^2", "r1^6", "PM", "[RR1]", "pent1", "pent2"):
        for k in ks:
            blocks.append(verify_relation(rel_id, k))
    for k in ks:
        blocks.append(derive_R3_six(k))
    return {"theorem2": blocks, "pass": all(b["pass"] for b in blocks)}


# -- derived R3^6 relation ---------------------------------------------------

_R3SIX_PRINTED = [
    _rows((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    _rows((1, 0, 0), (_MRHO2, _MRHO, 0), (RHO2, _MRHO2, 1)),
    _rows((1, 0, 0), (ONE - RHO2, RHO2, 0), (RHO2 - ONE, ONE - RHO2, 1)),
    _rows((1, 0, 0), (2, -1, 0), (-2, 2, 1)),
    _rows((1, 0, 0), (ONE - RHO, RHO, 0), (RHO - ONE, ONE - RHO, 1)),
    _rows((1, 0, 0), (_MRHO, _MRHO2, 0), (RHO, _MRHO, 1)),
]


def derive_R3_six(k: int = 1) -> dict:
    """Six terms from (P R1^-1)^j, j = 0..5, against the printed display.

    The display carries unit coefficients, which the derivation reproduces
    only at k = 1; for higher k the derived coefficients ((-rho^2)^j)^(k-1)
    are recorded and flagged rather than asserted.
    """
    word = parse_word("P*R1^-1")
    group_ok = eval_word(word * 6).proj_eq(identity())
    per_term = []
    args_all = True
    coeffs_unit = True
    for j in range(6):
        d = term_from_word(word * j, k)
        args_ok = d.args == _R3SIX_PRINTED[j]
        args_all = args_all and args_ok
        if not (d.scalar == ONE):
            coeffs_unit = False
        per_term.append({
            "word": "(P*R1^-1)^%d" % j,
            "args_match_display": args_ok,
            "derived_scalar": str(d.scalar),
            "printed_scalar": "1",
            "derived_args": d.args_strings(),
        })
    return {
        "relation": "R3^6 (remark)",
        "group_relation": "(P*R1^-1)^6 = I",
        "group_relation_holds": group_ok,
        "k": k,
        "terms": per_term,
        "coefficients_match_display": coeffs_unit,
        "coefficient_note": None if coeffs_unit else (
            "display prints unit coefficients; derived coefficients are "
            "((-rho^2)^j)^(k-1), equal to 1 exactly when k = 1"),
        "pass": args_all and group_ok,
    }


# -- Theorem 1 (elliptic, symbolic part) --------------------------------------

def verify_theorem1(degree: int = 2) -> dict:
    """The substitution orbits behind the two classical relations.

    The s-relation pairs P_f(X0,X1) with arguments (-X1, X0); the hexagonal
    relation's three-element orbit is {(X0,X1), (-X0-X1, X0), (X1, -X0-X1)}.
    Both orbits are re-derived from the 2x2 matrices S and T via the formal
    action and compared exactly; even degree >= 0 required.
    """
    if degree % 2:
        raise ValueError("period polynomials of PSL(2,Z) have even degree")
    from .matgroup import psl2_S, psl2_T
    from .polyaction import psl2_sub_matrix

    def sub_of(mat2):
        return tuple(tuple(x for x in row) for row in psl2_sub_matrix(mat2))

    def mul2(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
            for i in range(2)
        )

    def neg2(a):
        return tuple(tuple(-x for x in row) for row in a)

    # orientation resolution: S itself gives (X1, -X0); its inverse -S = S^-1
    # (projectively) gives the printed (-X1, X0).  Either matches P_f for
    # even degree; the report records the representative that reproduces the
    # display letter-for-letter.
    s_inv = neg2(psl2_S)
    printed_s = ((ZERO, -ONE), (ONE, ZERO))
    da1_direct = sub_of(psl2_S) == printed_s
    da1_inverse = sub_of(s_inv) == printed_s
    # hexagonal orbit: the order-3 word in S, T whose substitution sends
    # (X0, X1) to (-X0-X1, X0); applying it again must give (X1, -X0-X1) and
    # a third application must close the orbit
    def comp(x, y):
        return tuple(
            tuple(x[i][0] * y[0][j] + x[i][1] * y[1][j] for j in range(2))
            for i in range(2)
        )

    st = mul2(psl2_S, psl2_T)
    ts = mul2(psl2_T, psl2_S)
    target = ((-ONE, -ONE), (ONE, ZERO))
    printed_third = ((ZERO, ONE), (-ONE, -ONE))
    ident = ((ONE, ZERO), (ZERO, ONE))
    orbit_ok = False
    orbit = None
    candidates = [("S*T", st), ("T*S", ts),
                  ("(S*T)^2", mul2(st, st)), ("(T*S)^2", mul2(ts, ts))]
    for name, m in candidates:
        for rep_name, rep in ((name, m), ("-" + name, neg2(m))):
            b = sub_of(rep)
            if b != target:
                continue
            b2 = comp(b, b)
            b3 = comp(b2, b)
            if b2 == printed_third and b3 == ident:
                orbit_ok = True
                orbit = {"word": rep_name, "first": "(-X0-X1, X0)",
                         "second": "(X1, -X0-X1)", "closes": True}
                break
        if orbit_ok:
            break
    return {
        "relation": "theorem1 substitution orbits",
        "degree": degree,
        "s_relation": {
            "printed_args": "(-X1, X0)",
            "direct_matches": da1_direct,
            "inverse_matches": da1_inverse,
            "orientation": "inverse" if da1_inverse and not da1_direct else "direct",
        },
        "hexagon_orbit": orbit,
        "pass": (da1_direct or da1_inverse) and orbit_ok,
    }


# -- cocycle invariants --------------------------------------------------------

def _canonical_term(t: RelationTerm, k: int):
    """Scale the args matrix so its first nonzero entry is 1, folding the
    unit into the scalar via P_f(cX) = c^(3k-3) P_f(X)."""
    e = None
    for row in t.args:
        for c in row:
            if not c.is_zero():
                e = c
                break
        if e is not None:
            break
    inv = e.inverse()
    args = tuple(tuple(c * inv for c in row) for row in t.args)
    return (args, t.scalar * e ** (3 * k - 3))


def cyclic_rotation_invariance(rel_id: str, k: int = 2) -> bool:
    """For an identity word l1...ln, the multiset of projective cocycle terms
    derived from prefixes is invariant under cyclic rotation of the word."""
    spec = RELATION_SPECS[rel_id]
    letters = parse_word(spec.group_relation.split("=")[0].strip())
    n = len(letters)

    def prefix_terms(seq):
        return [term_from_word(tuple(seq[:i]), k) for i in range(n)]

    base = sorted(
        (_canonical_term(t, k) for t in prefix_terms(letters)),
        key=lambda x: str(x),
    )
    for r in range(1, n):
        rotated = letters[r:] + letters[:r]
        # prefix_rot(i) = p_r^-1 * p_(r+i) projectively: transport the
        # rotated prefixes back by the fixed left factor p_r
        g = eval_word(tuple(letters[:r]))
        det = g.det() ** (k - 1)
        b = pu21_sub_matrix(g)

        def transport(t: RelationTerm) -> RelationTerm:
            prod = tuple(
                tuple(
                    sum((b[i][l] * t.args[l][j] for l in range(3)), ZERO)
                    for j in range(3)
                )
                for i in range(3)
            )
            return RelationTerm(t.scalar * det, prod)

        rot = sorted(
            (_canonical_term(transport(t), k) for t in prefix_terms(rotated)),
            key=lambda x: str(x),
        )
        if rot != base:
            return False
    return True


def conjugation_remark_check() -> dict:
    """Matrix content of the complex-conjugation remark.

    The chains behind the two pentagon relations are complex conjugate; at
    the matrix level this reduces to conj(P) * R1 = P^-1 R1^-1 P exactly,
    together with R1 carrying the spine to its conjugate (checked in
    chgeometry).
    """
    from .matgroup import CATALOG
    p = CATALOG["P"]
    r1 = CATALOG["R1"]
    lhs = p.conj() @ r1
    rhs = p.inverse() @ r1.inverse() @ p
    exact = lhs.entries == rhs.entries
    return {
        "identity": "conj(P) * R1 = P^-1 * R1^-1 * P",
        "exact": exact,
        "pass": exact,
    }
