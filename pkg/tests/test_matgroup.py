import random

import pytest

from picardperiods.cyclotomic import Cyc, ONE, RHO, RHO2, unit_class
from picardperiods.matgroup import (
    CATALOG, CATALOG_PU21, Permutation, ProjMat, anharmonic_orbit, builtin,
    element_order, eval_word, hermitian_scalar, identity, int_matrix_order,
    parse_word, picard_type_matrix, pu21_member, sp6_member, upsilon,
    verify_presentation, PRESENTATION_IDS,
)


def test_builtin_displays():
    r = builtin("R")
    assert r.entries[0] == (Cyc(0), Cyc(0), Cyc(1))
    assert r.entries[1][1] == -ONE
    assert builtin("g_delta_1").entries[1][1] == RHO
    p = builtin("P")
    assert p.entries[0] == (ONE, ONE, RHO)
    with pytest.raises(KeyError):
        builtin("nope")


def test_membership_every_catalog_matrix():
    for name in CATALOG_PU21:
        m = builtin(name)
        assert pu21_member(m), name
        assert hermitian_scalar(m) == ONE, name
        assert unit_class(m.det()) is not None, name


def test_membership_rejects():
    assert not pu21_member(ProjMat([[2, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert not pu21_member(builtin("W"))
    assert pu21_member(identity())


def test_word_evaluation():
    assert eval_word("R*R").proj_eq(identity())
    assert eval_word("R3*R1*R2*R3*R1*R2").proj_eq(builtin("R"))
    assert eval_word("A1*A1").proj_eq(builtin("g_delta_1"))
    # inverses keep words exact: w * w^-1 is projectively trivial
    rng = random.Random(23)
    names = list(CATALOG_PU21)
    for _ in range(20):
        word = [(rng.choice(names), rng.choice((-2, -1, 1, 2)))
                for _ in range(rng.randint(1, 6))]
        inv = [(n, -e) for n, e in reversed(word)]
        assert eval_word(tuple(word) + tuple(inv)).proj_eq(identity())


def test_r2_r3_conjugation_forms():
    r = builtin("R")
    assert builtin("R2").proj_eq(r @ builtin("Ay") @ r)
    assert builtin("R3").proj_eq(r @ builtin("A0") @ r)
    assert builtin("R3").proj_eq(builtin("P") @ builtin("R1").inverse())


def test_presentations_all_pass():
    for which in PRESENTATION_IDS:
        rep = verify_presentation(which)
        assert rep["pass"], rep


def test_pentagon_variant_recorded():
    rep = verify_presentation("falbel_parker_RPR1")
    variants = [c for c in rep["checks"] if "note" in c]
    assert len(variants) == 1
    # the R-final variant of the displayed relation is not the identity
    assert variants[0]["pass"] is False


def test_bracket_word_verbatim_vs_corrected():
    rep = verify_presentation("bracket_R")
    notes = {c.get("note", ""): c["pass"] for c in rep["checks"] if "note" in c}
    verbatim = [v for k, v in notes.items() if "verbatim" in k]
    corrected = [v for k, v in notes.items() if "evident intent" in k]
    assert verbatim == [False]
    assert corrected == [True]


def test_element_orders():
    assert element_order(builtin("R")) == 2
    assert element_order(builtin("R1")) == 6
    assert element_order(builtin("P"), cap=4) is None


def test_picard_type_matrix():
    m = picard_type_matrix()
    assert sp6_member(m)
    assert int_matrix_order(m) == 3
    bad = tuple(tuple(2 if i == j else 0 for j in range(6)) for i in range(6))
    assert not sp6_member(bad)


def test_anharmonic_orbit():
    vals, degenerate = anharmonic_orbit(2)
    assert degenerate
    assert {str(v) for v in vals} == {"2", "-1", "1/2"}
    vals, degenerate = anharmonic_orbit(3)
    assert not degenerate and len(set(str(v) for v in vals)) == 6
    vals, degenerate = anharmonic_orbit(-RHO2)
    assert degenerate and len(set(str(v) for v in vals)) == 2
    with pytest.raises(ValueError):
        anharmonic_orbit(1)


def test_upsilon_images_and_relations():
    assert upsilon("R1") == Permutation.transposition(1, 2)
    assert upsilon("R2") == Permutation.transposition(2, 4)
    assert upsilon("R3") == Permutation.transposition(2, 3)
    assert upsilon("R1*R1") == Permutation.identity()
    twelve_34 = Permutation.transposition(1, 2) * Permutation.transposition(3, 4)
    assert upsilon("R3*R1*R2*R3*R1*R2") == twelve_34
    assert upsilon("R") == twelve_34
    # every defining relation maps to the identity permutation
    for rel in ("R1*R1*R1*R1*R1*R1",
                "R1*R2*R1*R2^-1*R1^-1*R2^-1",
                "R2*R3*R2*R3^-1*R2^-1*R3^-1",
                "R1*R2*R3*R1*R3^-1*R2^-1*R1^-1*R3^-1"):
        assert upsilon(rel) == Permutation.identity(), rel


def test_pentagon_word_image():
    # the identity P = R3 R1 forces Upsilon(P), and the pentagon word maps
    # to the identity permutation
    assert upsilon("P") == upsilon("R3*R1")
    assert upsilon("P*R1^-1*P^-1*R1^-1*P") == Permutation.identity()


def test_det_catalog_sixth_roots():
    for name in CATALOG_PU21:
        assert unit_class(builtin(name).det()) is not None


def test_parse_word_errors():
    with pytest.raises(ValueError):
        parse_word("(R*P)^2")
