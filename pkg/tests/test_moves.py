import random

import pytest
from hypothesis import given, settings, strategies as st

from legcob.errors import FrontSyntaxError, InvalidSite, StepError
from legcob.front import FrontDiagram, classical_invariants, parse_front, serialize_front
from legcob.moves import (REIDEMEISTER, CobordismScript, MoveKind, MoveSite, SearchBudget,
                          apply_move, canonical_form, enumerate_moves, euler_characteristic,
                          format_script, parse_script, search_cobordism, verify_script)
from legcob.planar import to_planar_diagram
from legcob.polys import jones
from strategies import random_filling, random_front

EMPTY = FrontDiagram(())
EYE = parse_front("L1 R1")
BIRTH = MoveSite(MoveKind.Birth, 0, 0)

INVERSE = {
    MoveKind.R1a: MoveKind.R1a_inv, MoveKind.R1b: MoveKind.R1b_inv,
    MoveKind.R2a: MoveKind.R2a_inv, MoveKind.R2b: MoveKind.R2b_inv,
    MoveKind.R1a_inv: MoveKind.R1a, MoveKind.R1b_inv: MoveKind.R1b,
    MoveKind.R2a_inv: MoveKind.R2a, MoveKind.R2b_inv: MoveKind.R2b, MoveKind.R3: MoveKind.R3,
}


def test_empty_front_has_only_the_birth_site():
    assert enumerate_moves(EMPTY) == [BIRTH]


def test_eye_has_births_but_no_saddle():
    kinds = {s.kind for s in enumerate_moves(EYE)}
    assert MoveKind.Birth in kinds
    assert MoveKind.SaddleUp not in kinds


def test_adjacent_right_left_pair_gives_saddle():
    d = parse_front("L1 L3 R2 L2 R3 R1")
    for ors in ((1,), (-1,)):
        e = d.with_orientations(ors)
        assert MoveSite(MoveKind.SaddleUp, 2) in enumerate_moves(e)
        assert classical_invariants(apply_move(e, MoveSite(MoveKind.SaddleUp, 2))).components == 2


def test_birth_on_empty():
    d = apply_move(EMPTY, BIRTH)
    assert serialize_front(d) == "L1 R1"
    assert classical_invariants(d).tb == -1


def test_saddle_merges_two_eyes():
    d = parse_front("L1 R1 L1 R1")
    e = apply_move(d, MoveSite(MoveKind.SaddleUp, 1))
    assert serialize_front(e) == "L1 R1"
    assert classical_invariants(e).tb - classical_invariants(d).tb == 1


def test_incoherent_saddle():
    d = parse_front("L1 R1 L1 R1").with_orientations((1, -1))
    site = MoveSite(MoveKind.SaddleUp, 1)
    assert site not in enumerate_moves(d)
    with pytest.raises(InvalidSite):
        apply_move(d, site)
    assert serialize_front(apply_move(d, site, allow_incoherent=True)) == "L1 R1"
    script = CobordismScript(d, (site,))
    with pytest.raises(StepError):
        verify_script(script)
    rep = verify_script(script, allow_incoherent=True)
    assert rep.diagnostics


def test_r3_rewrite_keeps_invariants():
    d = parse_front("L1 L3 X2 X3 X2 R1 R1")
    site = MoveSite(MoveKind.R3, 2)
    assert site in enumerate_moves(d)
    e = apply_move(d, site)
    assert serialize_front(e) == "L1 L3 X3 X2 X3 R1 R1"
    a, b = classical_invariants(d), classical_invariants(e)
    assert (a.tb, a.rot) == (b.tb, b.rot)
    assert jones(to_planar_diagram(d)) == jones(to_planar_diagram(e))


def test_r1_kinks():
    e = apply_move(EYE, MoveSite(MoveKind.R1a, 1, 0))
    assert serialize_front(e) == "L1 L2 X1 R2 R1"
    f = apply_move(EYE, MoveSite(MoveKind.R1b, 1, 1))
    assert serialize_front(f) == "L1 L2 X3 R2 R1"
    for g in (e, f):
        assert classical_invariants(g).tb == -1
        assert jones(to_planar_diagram(g)) == 1


def test_invalid_sites():
    with pytest.raises(InvalidSite):
        apply_move(EYE, MoveSite(MoveKind.SaddleUp, 0))
    with pytest.raises(InvalidSite):
        apply_move(EYE, MoveSite(MoveKind.R3, 0))
    with pytest.raises(InvalidSite):
        apply_move(EYE, MoveSite(MoveKind.Birth, 0, 1))
    with pytest.raises(InvalidSite):
        apply_move(EYE, MoveSite(MoveKind.Death, 0))


def test_death_needs_caps():
    assert MoveSite(MoveKind.Death, 0) not in enumerate_moves(EYE)
    assert MoveSite(MoveKind.Death, 0) in enumerate_moves(EYE, allow_caps=True)
    assert apply_move(EYE, MoveSite(MoveKind.Death, 0), allow_caps=True).events == ()


def test_move_kind_names():
    assert MoveKind.parse("R1a⁻") is MoveKind.R1a_inv
    assert MoveKind.parse("R2b-") is MoveKind.R2b_inv
    with pytest.raises(FrontSyntaxError):
        MoveKind.parse("R4")


def test_script_examples():
    rep = verify_script(CobordismScript(EMPTY, (BIRTH,)))
    assert rep.ok and rep.chi == 1 and rep.tb_top == -1 and rep.genus == 0
    assert serialize_front(rep.top) == "L1 R1"
    rep = verify_script(CobordismScript(EYE))
    assert rep.ok and rep.chi == 0 and rep.tb_top == rep.tb_bottom == -1
    steps = (BIRTH, BIRTH, MoveSite(MoveKind.SaddleUp, 1))
    rep = verify_script(CobordismScript(EMPTY, steps))
    assert rep.ok and rep.chi == 1 and rep.tb_top == -1
    assert serialize_front(rep.top) == "L1 R1"


def test_euler_characteristic_counts():
    assert euler_characteristic(CobordismScript(EMPTY, (BIRTH,))) == 1
    assert euler_characteristic(CobordismScript(EMPTY, (BIRTH, BIRTH, MoveSite(MoveKind.SaddleUp, 1)))) == 1
    d = EYE
    steps = []
    for _ in range(10):
        s = next(s for s in enumerate_moves(d) if s.kind in REIDEMEISTER)
        steps.append(s)
        d = apply_move(d, s)
    assert euler_characteristic(CobordismScript(EYE, tuple(steps))) == 0


def test_step_error_reports_index():
    script = CobordismScript(EMPTY, (BIRTH, MoveSite(MoveKind.R3, 0)))
    with pytest.raises(StepError) as exc:
        verify_script(script)
    assert exc.value.step == 1


def test_script_text_round_trip():
    text = "# filling\nFRONT\nMOVE Birth 0 0\nMOVE Birth 0\nMOVE SaddleUp 1 0\n"
    script = parse_script(text)
    assert len(script.steps) == 3
    assert parse_script(format_script(script)) == script
    with pytest.raises(FrontSyntaxError):
        parse_script("MOVE Birth 0")
    with pytest.raises(FrontSyntaxError):
        parse_script("FRONT L1 R1\nMOVE Birth x")


def test_search_examples():
    res = search_cobordism(EYE, EYE)
    assert res.status == "found" and res.script.steps == () and res.depth == 0
    res = search_cobordism(EMPTY, EYE)
    assert res.script.steps == (BIRTH,)
    res = search_cobordism(EMPTY, parse_front("L1 R1 L1 R1"))
    assert res.depth == 2
    assert [s.kind for s in res.script.steps] == [MoveKind.Birth, MoveKind.Birth]


def test_search_reports_budget():
    res = search_cobordism(EMPTY, parse_front("L1 L3 X2 X2 X2 R1 R1"),
                           SearchBudget(max_depth=1, max_states=50, max_events=8))
    assert res.script is None and res.status == "budget"


def test_search_is_deterministic_and_verifies():
    target = parse_front("L1 L2 X1 R2 R1")
    a = search_cobordism(EMPTY, target, SearchBudget(max_depth=3))
    b = search_cobordism(EMPTY, target, SearchBudget(max_depth=3))
    assert a == b and a.status == "found"
    rep = verify_script(a.script)
    assert rep.ok and canonical_form(rep.top) == canonical_form(target)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_move_invariants_on_random_fronts(seed):
    d = random_front(random.Random(seed), 20)
    ci = classical_invariants(d)
    j = jones(to_planar_diagram(d), 40)
    for s in enumerate_moves(d):
        e = apply_move(d, s)
        ce = classical_invariants(e)
        if s.kind in REIDEMEISTER or s.kind == MoveKind.FarCommute:
            assert (ce.tb, ce.rot, ce.components) == (ci.tb, ci.rot, ci.components)
            assert jones(to_planar_diagram(e), 40) == j
        elif s.kind == MoveKind.SaddleUp:
            assert ce.tb == ci.tb + 1 and abs(ce.components - ci.components) == 1
        elif s.kind == MoveKind.Birth:
            assert ce.tb == ci.tb - 1 and ce.components == ci.components + 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_reidemeister_moves_are_reversible(seed):
    rng = random.Random(seed)
    d = random_front(rng, 16)
    sites = [s for s in enumerate_moves(d) if s.kind in REIDEMEISTER]
    for s in rng.sample(sites, min(8, len(sites))):
        e = apply_move(d, s)
        back = [apply_move(e, t) for t in enumerate_moves(e)
                if t.kind == INVERSE[s.kind] and t.index == s.index]
        assert any(canonical_form(b) == canonical_form(d) and b.orientations == d.orientations
                   for b in back)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_script_chi_is_additive(seed):
    rng = random.Random(seed)
    script = None
    while script is None:
        script = random_filling(rng, 10)
    cut = rng.randint(0, len(script.steps))
    first = CobordismScript(script.bottom, script.steps[:cut])
    mid = verify_script(first).top
    second = CobordismScript(mid, script.steps[cut:])
    assert euler_characteristic(first) + euler_characteristic(second) == euler_characteristic(script)
    r1, r2 = verify_script(first), verify_script(second)
    assert r1.ok and r2.ok
    assert (r2.tb_top - r1.tb_bottom) == -euler_characteristic(script)
