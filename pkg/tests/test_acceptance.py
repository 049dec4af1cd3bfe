"""One test per acceptance criterion; each prints a PASS/FAIL line.

The lines are also repeated in the terminal summary, so they show up without ``-s``.
"""

import pytest

from toric_richardson import verify

SEED = 7
RESULTS: dict[int, str] = {}


def _report(result):
    line = result.line(timing=True)
    RESULTS[result.number] = line
    print(line)
    assert result.ok, line


def test_criterion_1_classification_equivalence():
    r = verify.check_classification(sn=4, seed=SEED, sample=500)
    _report(r)
    assert r.counts["intervals"] >= 213 + 500


def test_criterion_2_base_case():
    _report(verify.check_base_case())


def test_criterion_3_four_crown():
    _report(verify.check_crown())


def test_criterion_4_lgv_soundness():
    _report(verify.check_lgv(sn=4, seed=SEED, sample=25))


def test_criterion_5_structure_suite():
    _report(verify.check_structure(sn=4, seed=SEED, sample=25))


def test_criterion_6_even_family():
    _report(verify.check_even_family(ns=(4, 6, 8), points=20, seed=SEED))


def test_criterion_7_hypercube_family():
    r = verify.check_hypercube(seed=SEED, nonmembers=1000, big=True)
    _report(r)
    assert r.counts["n3_size"] == 4096


def test_criterion_8_word_independence():
    r = verify.check_word_independence(seed=SEED, count=12)
    _report(r)
    assert r.counts["intervals"] >= 5
