import random

import pytest

from picardperiods.matgroup import Permutation, builtin
from picardperiods.modulipaths import (
    BASE, BASEPOINTS, BASEPOINT_TABLE, Move, PathWord, concat,
    evaluate_r_word, freeness_evidence, minimal_moves, r_inverse_path,
    r_path, s4_act, s4_table_roundtrip, to_pu21, to_s4, upsilon_consistency,
)


def test_table_rows():
    assert s4_act("(12)", ("01", "01")) == ("1x0", "infy0")
    assert s4_act("(24)", ("10", "10")) == ("10", "inf0")
    assert s4_act("(34)", ("infy0", "10")) == ("1x0", "1x0")
    assert len(BASEPOINTS) == 16


def test_table_roundtrip():
    rep = s4_table_roundtrip()
    assert rep["pass"], rep


def test_composite_action():
    e = Permutation.identity()
    for b in BASEPOINTS:
        assert s4_act(e, b) == b
    # (23) = s2 s3 s2 fixes (01,01) composed with (24): the product fixes it
    p23 = Permutation.transposition(2, 3)
    p24 = Permutation.transposition(2, 4)
    assert s4_act(p23, ("01", "01")) == ("01", "0inf")
    assert s4_act(p24 * p23, ("01", "01")) == ("01", "01")


def test_pictured_generator_path():
    p = r_path("(12)", BASE)
    assert [m.kind for m in p.x_moves] == ["s", "t"]
    assert [m.kind for m in p.y_moves] == ["t", "s", "t"]
    assert p.end == ("1x0", "infy0")
    # all half-loops positively oriented: upper from positive arrows, lower
    # from negative ones
    for m in list(p.x_moves) + list(p.y_moves):
        if m.kind == "t":
            from picardperiods.modulipaths import _DIRSIGN
            assert m.half == (1 if _DIRSIGN[m.src] > 0 else -1)


def test_exceptional_case():
    p = r_path("(12)", ("10", "inf0"))
    assert [m.kind for m in p.x_moves] == ["s", "t", "t"]
    assert [m.kind for m in p.y_moves] == ["s"]
    assert p.end == ("01", "0inf")


def test_inverse_paths_cancel():
    for lab in ("(12)", "(24)", "(23)"):
        w = evaluate_r_word([(lab, 1), (lab, -1)])
        assert w.is_identity(), lab
        w = evaluate_r_word([(lab, -1), (lab, 1)])
        assert w.is_identity(), lab


def test_t_y_six():
    q = evaluate_r_word([("(23)", 1), ("(24)", 1)])
    assert q.start == q.end == BASE
    assert not q.x_moves
    assert len(q.y_moves) == 6
    assert all(m.kind == "t" for m in q.y_moves)
    cube = evaluate_r_word([("(23)", 1), ("(24)", 1)] * 3)
    assert len(cube.y_moves) == 18 and not cube.x_moves


def test_squared_generator_is_local_loop():
    p = r_path("(12)", BASE)
    q = concat(p, r_path("(12)", p.end))
    assert q.start == q.end == BASE
    # a loop about 1 in the x-coordinate: conjugated positive full loop
    assert [m.kind for m in q.x_moves] == ["s", "t", "t", "s"]
    assert q.x_moves[1].src == "10" and q.x_moves[2].dst == "10"
    assert len(q.y_moves) == 6


def test_concat_endpoint_mismatch():
    p = r_path("(12)", BASE)
    with pytest.raises(ValueError):
        concat(p, r_path("(12)", BASE))


def test_endpoints_two_ways():
    rng = random.Random(8)
    labels = ["(12)", "(24)", "(23)"]
    for _ in range(30):
        word = [(rng.choice(labels), rng.choice((-1, 1)))
                for _ in range(rng.randint(1, 5))]
        p = evaluate_r_word(word)
        assert p.end == s4_act(p.perm, BASE)
        assert p.perm == to_s4(word)


def test_free_reduction_confluence():
    rng = random.Random(21)
    labels = ["(12)", "(24)", "(23)"]
    for _ in range(20):
        word = [(rng.choice(labels), rng.choice((-1, 1)))
                for _ in range(rng.randint(1, 4))]
        p = evaluate_r_word(word)
        # inserting w . w^-1 mid-word reduces back to the same path
        lab = rng.choice(labels)
        padded = word + [(lab, 1), (lab, -1)]
        q = evaluate_r_word(padded)
        assert q.x_moves == p.x_moves and q.y_moves == p.y_moves
        assert q.end == p.end


def test_homomorphisms():
    assert to_pu21([("(12)", 1)]).proj_eq(builtin("R1"))
    assert to_pu21([("(24)", 1)]).proj_eq(builtin("R2"))
    assert to_pu21([("(23)", 1)]).proj_eq(builtin("R3"))
    assert to_s4([("(12)", 1)]) == Permutation.transposition(1, 2)
    w = [("(23)", 1), ("(24)", 1)]
    assert to_pu21(w).proj_eq(builtin("R3") @ builtin("R2"))


def test_upsilon_consistency_exhaustive():
    rep = upsilon_consistency(4)
    assert rep["pass"] and rep["failures"] == 0


def test_freeness_evidence():
    rep = freeness_evidence()
    assert rep["pass"], rep
    words = {c["word"]: c for c in rep["checks"]}
    assert words["(r(23) . r(24))^3"]["reduced_letters"] == 18
    assert words["r(23) . r(24)"]["is_pure_t_y_six"]


def test_serialization():
    p = r_path("(12)", BASE)
    s = p.serialize()
    assert s.startswith("(x: s.") and "@ (01,01)->(1x0,infy0)" in s
