from importlib import resources

import pytest
from hypothesis import given, strategies as st

from legcob.braid import parse_qp
from legcob.errors import PreconditionError
from legcob.obstruct import (CollarScenario, FillingClaim, Status, certify_disk_slice,
                             check_filling, collar_obstruction, fmt_int, format_verdict)


def fixture_qp(name):
    return parse_qp(resources.files("legcob.fixtures").joinpath(name).read_text())


def test_fmt_int_uses_minus_sign():
    assert fmt_int(-2) == "−2"
    assert fmt_int(0) == "0"
    assert fmt_int(3) == "3"


def test_eye_filling_is_consistent():
    v = check_filling(FillingClaim(tb=-1, rot=0, genus=0, slice_genus=0, tb_max=-1))
    assert v.status is Status.Consistent and not v.reasons
    assert ("assumption", "filling surface assumed oriented") in v.report


def test_filling_violations_are_listed_in_order():
    v = check_filling(FillingClaim(tb=-3, rot=2, genus=1, slice_genus=0, tb_max=1))
    assert v.status is Status.Violation
    assert [r.rule for r in v.reasons] == ["rot", "tb", "genus", "tbmax"]
    assert v.messages()[0] == "rot ≠ 0 (rot = 2)"
    assert v.messages()[1] == "tb ≠ 2g−1 (−3 ≠ 1)"
    assert v.messages()[2] == "g ≠ g_s (1 ≠ 0)"
    assert v.messages()[3] == "tb ≠ TB (−3 ≠ 1)"


def test_trefoil_filling_numbers():
    # max-tb right-handed trefoil: tb 1, genus 1 filling
    assert check_filling(FillingClaim(1, 0, 1, slice_genus=1, tb_max=1)).status is Status.Consistent


def test_genus_mismatch_blocks_collar():
    v = collar_obstruction(CollarScenario(1, concave_side_genus=0))
    assert v.status is Status.NonCollarable
    assert v.messages() == ["4-ball genus mismatch"]


def test_tb_bound_blocks_collar():
    v = collar_obstruction(CollarScenario(0, tb_upper_bound=-2))
    assert v.status is Status.NonCollarable
    assert v.messages() == ["tb bound −2 < −1 = 2·0−1"]


def test_no_obstruction_is_only_consistent():
    v = collar_obstruction(CollarScenario(0, concave_side_genus=0, tb_upper_bound=-1))
    assert v.status is Status.Consistent and not v.reasons


def test_scenario_needs_data():
    with pytest.raises(ValueError):
        CollarScenario(0)
    with pytest.raises(ValueError):
        CollarScenario(-1, concave_side_genus=0)


@given(st.integers(0, 6), st.integers(-15, 15), st.integers(-15, 15))
def test_lower_tb_bound_never_removes_obstruction(g, b1, b2):
    lo, hi = min(b1, b2), max(b1, b2)
    if collar_obstruction(CollarScenario(g, tb_upper_bound=hi)).status is Status.NonCollarable:
        assert collar_obstruction(CollarScenario(g, tb_upper_bound=lo)).status is Status.NonCollarable


@given(st.integers(0, 6), st.integers(-15, 15))
def test_bound_obstructs_exactly_below_2g_minus_1(g, b):
    v = collar_obstruction(CollarScenario(g, tb_upper_bound=b))
    assert (v.status is Status.NonCollarable) == (b < 2 * g - 1)


@given(st.integers(0, 6), st.integers(0, 6))
def test_genus_obstructs_exactly_on_mismatch(g, gs):
    v = collar_obstruction(CollarScenario(g, concave_side_genus=gs))
    assert (v.status is Status.NonCollarable) == (g != gs)


def test_quasi_positive_disk_certificate():
    v = certify_disk_slice(fixture_qp("m820.qp"))
    rep = dict(v.report)
    assert v.status is Status.NonCollarable
    assert v.messages() == ["tb bound −2 < −1 = 2·0−1"]
    assert (rep["n"], rep["k"], rep["chi"]) == ("3", "2", "1")
    assert rep["components"] == "1" and rep["is_disk"] == "true"
    assert rep["tb_upper_bound"] == "-2"
    perm = [int(x) for x in rep["permutation"].split()]
    assert sorted(perm) == [0, 1, 2] and all(perm[i] != i for i in range(3))


def test_unknot_disk_is_consistent():
    v = certify_disk_slice(fixture_qp("unknot.qp"))
    assert v.status is Status.Consistent
    v = certify_disk_slice(parse_qp("B2\nW ; I 1\n"))
    assert v.status is Status.Consistent and dict(v.report)["tb_upper_bound"] == "-1"


def test_non_disk_is_refused():
    with pytest.raises(PreconditionError):
        certify_disk_slice(fixture_qp("trefoil.qp"))


def test_verdict_text():
    text = format_verdict(collar_obstruction(CollarScenario(1, concave_side_genus=0)))
    assert text.splitlines() == ["STATUS NonCollarable", "FILLING_GENUS 1",
                                 "CONCAVE_SIDE_GENUS 0", "REASON 4-ball genus mismatch"]
