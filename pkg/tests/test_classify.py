import random

import pytest

import oracles
from toric_richardson.classify import (
    classify_toric,
    has_two_crown_subinterval,
    interval_as_poset,
    interval_poset_is_lattice,
    is_toric,
    is_two_crown,
)
from toric_richardson.errors import DisagreementBug
from toric_richardson.perm import Permutation, all_intervals, bruhat_leq, interval, interval_poset
from toric_richardson.poset import Poset, is_lattice

P = Permutation.parse
e3, w3 = Permutation.identity(3), Permutation.longest(3)


def test_is_two_crown():
    assert is_two_crown(interval(e3, w3))
    assert not is_two_crown(interval(P("2143"), P("4231")))
    assert not is_two_crown(interval(P("1324"), P("4231")))


def test_two_crown_search():
    assert has_two_crown_subinterval(interval(P("1324"), P("4231"))) is None
    assert has_two_crown_subinterval(interval(e3, w3)) == (e3, w3)
    assert has_two_crown_subinterval(interval(Permutation.identity(4), Permutation.longest(4))) is not None


def test_lattice_examples():
    assert is_lattice(Poset.boolean(4))
    res = is_lattice(interval_as_poset(interval(e3, w3)))
    assert not res.ok
    a, b, kind = res.witness
    assert {str(a), str(b)} == {"132", "213"} and kind == "join"
    assert is_lattice(interval_as_poset(interval(P("2143"), P("4231"))))


def test_verdicts():
    assert classify_toric(P("1324"), P("4231")).is_toric
    bad = classify_toric(e3, w3)
    assert not bad.is_toric and bad.witness == (e3, w3)
    assert classify_toric(P("1324"), P("4231")).is_hypercube
    assert not classify_toric(P("2143"), P("4231")).is_hypercube


def test_s4_toric_count_against_brute_force():
    toric = 0
    for v, w in all_intervals(4):
        verdict = classify_toric(v, w)
        elems = oracles.interval_members(v.window, w.window)
        lattice = oracles.is_lattice_naive(elems, oracles.leq)
        crown_free = not oracles.has_s3_subinterval(v.window, w.window)
        assert verdict.is_toric == lattice == crown_free
        toric += verdict.is_toric
    assert toric == 176


def test_s5_sample_against_brute_force():
    rng = random.Random(11)
    for v, w in rng.sample(all_intervals(5), 120):
        elems = oracles.interval_members(v.window, w.window)
        assert classify_toric(v, w).is_toric == oracles.is_lattice_naive(elems, oracles.leq)


def test_s5_counts():
    pairs = all_intervals(5)
    assert len(pairs) == 3781
    assert sum(is_toric(v, w) for v, w in pairs) == 2491


def test_interval_poset_lattice_agrees():
    for v, w in all_intervals(4):
        I = interval(v, w)
        assert bool(is_lattice(interval_as_poset(I))) == bool(interval_poset_is_lattice(interval_poset(I)))
        assert bool(is_lattice(interval_poset(I).as_poset())) == bool(interval_poset_is_lattice(interval_poset(I)))


def test_subintervals_of_toric_are_toric():
    for v, w in all_intervals(4):
        if not is_toric(v, w):
            continue
        I = interval(v, w)
        for a in I.elements:
            for b in I.elements:
                if bruhat_leq(a, b):
                    assert is_toric(a, b)


def test_disagreement_is_raised(monkeypatch):
    import toric_richardson.classify as cl

    monkeypatch.setattr(cl, "r_poly_toric", lambda v, w, d: False)
    with pytest.raises(DisagreementBug):
        cl.classify_toric(P("1324"), P("4231"))


def test_json_shape():
    js = classify_toric(e3, w3).to_json()
    assert js["witness"] == [[1, 2, 3], [3, 2, 1]]
    assert js["is_toric"] is False


def test_four_tests_agree_on_all_of_s5():
    toric = 0
    for v, w in all_intervals(5):
        verdict = classify_toric(v, w)  # raises DisagreementBug on any split
        assert verdict.by_two_crown == verdict.by_lattice == verdict.by_interval_poset_lattice == verdict.by_r_poly
        toric += verdict.is_toric
    assert toric == 2491
