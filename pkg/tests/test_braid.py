from fractions import Fraction

import pytest

from legcob.braid import (BraidWord, QPFactorization, braid_closure_pd, closure_components,
                          expand, format_qp, parse_braid, parse_qp, self_linking, surface_data)
from legcob.errors import FrontSyntaxError
from legcob.front import parse_front
from legcob.planar import to_planar_diagram
from legcob.polys import jones

M820_QP = "B3\nW -1 -1 -1 ; I 2\nW ; I 2\n"


def test_expand_conjugates():
    q = parse_qp(M820_QP)
    assert expand(q).letters == (-1, -1, -1, 2, 1, 1, 1, 2)
    assert q.k == 2


def test_m820_surface_is_a_disk():
    sd = surface_data(parse_qp(M820_QP))
    assert (sd.n, sd.k, sd.chi) == (3, 2, 1)
    assert sd.is_knot and sd.is_disk
    assert sd.slice_genus == 0
    cl = closure_components(expand(parse_qp(M820_QP)))
    assert cl.component_count == 1
    # a single 3-cycle
    p = cl.permutation
    assert sorted(p) == [0, 1, 2] and p[p[p[0]]] == 0 and p[0] != 0


def test_trefoil_braid_surface():
    q = QPFactorization(2, ((BraidWord(2), 1),) * 3)
    sd = surface_data(q)
    assert sd.chi == -1 and sd.slice_genus == 1 and not sd.is_disk


def test_trivial_factorization():
    sd = surface_data(QPFactorization(1))
    assert sd.is_disk and sd.chi == 1 and sd.slice_genus == 0


def test_two_component_closure_has_no_genus():
    sd = surface_data(QPFactorization(2, ((BraidWord(2), 1),) * 2))
    assert not sd.is_knot and sd.slice_genus is None


def test_closure_jones_matches_front():
    pd = braid_closure_pd(BraidWord(2, (1, 1, 1)))
    assert pd.writhe() == 3
    assert jones(pd) == jones(to_planar_diagram(parse_front("L1 L3 X2 X2 X2 R1 R1")))


def test_inverse_word_closure_is_mirror():
    b = BraidWord(3, (1, -2, 1, 1))
    # the inverse word closes up to the mirror with all strands reversed
    assert jones(braid_closure_pd(b.inverse())) == jones(braid_closure_pd(b)).substitute_power(-1)
    assert jones(braid_closure_pd(BraidWord(2, (-1, -1, -1)))) == \
        jones(braid_closure_pd(BraidWord(2, (1, 1, 1)))).substitute_power(-1)


def test_self_linking():
    assert self_linking(BraidWord(2, (1, 1, 1))) == 1
    assert self_linking(expand(parse_qp(M820_QP))) == -1


def test_letter_range_checked():
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(3, (0,))


@pytest.mark.parametrize("bad", ["", "3\n1", "B3\nW 1 ; J 2", "B3\nW 1 2", "B3\nW 5 ; I 1",
                                 "B2\nW ; I 2"])
def test_qp_parse_errors(bad):
    with pytest.raises(FrontSyntaxError):
        parse_qp(bad)


def test_qp_round_trip():
    q = parse_qp(M820_QP)
    assert parse_qp(format_qp(q)) == q


def test_braid_file():
    assert parse_braid("# comment\nB3\n1 -2\n1\n").letters == (1, -2, 1)
    assert surface_data(parse_qp("B2\nW ; I 1\n")).slice_genus == Fraction(0)
