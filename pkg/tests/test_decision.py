"""The two criteria, their agreement, and the Shimoda and Buchsbaum
variants."""

import pytest

from reesgor import corpus, decision, rings
from reesgor.errors import (DepthNotOne, HypothesisNotVerified,
                            NotParameters, WrongDimension)
from reesgor.fields import GF, DEFAULT_PRIME
from reesgor.polys import PolyRing

F = GF(DEFAULT_PRIME)

VERDICTS = {
    "hochster_roberts": True,
    "two_planes": True,
    "idealization_xy": True,
    "idealization_x2y3": True,
    "regular_base": False,
}


def test_decide_on_corpus(corpus_instances):
    for name, (A, q) in corpus_instances.items():
        report = decision.decide(A, q)
        assert report.verdict == VERDICTS[name], name
        assert report.cond2["verdict"] == report.cond3["verdict"], name


def test_decide_certificate_hochster_roberts(hr):
    A, q = hr
    report = decision.decide(A, q)
    assert report.verdict
    assert report.d == 2
    assert report.h1_length == 1
    assert report.h1_socle == 1
    assert rings.ideals_equal(report.conductor, A.maximal_ideal())
    assert rings.ideals_equal(report.sigma, report.conductor)
    assert report.cond3["e_c"] == 2
    assert report.cond3["len_a_mod_c"] == 1
    assert report.cond3["reduction_number"] == 1


def test_decide_consequences_on_true_verdicts(corpus_instances):
    for name, (A, q) in corpus_instances.items():
        if not VERDICTS[name]:
            continue
        report = decision.decide(A, q)
        assert report.consequences is not None, name
        assert all(report.consequences.values()), (name, report.consequences)


def test_decide_negative_control(regular_base):
    A, q = regular_base
    report = decision.decide(A, q)
    assert not report.verdict
    assert report.h1_length == 0
    assert not report.cond2["h1_nonzero"]
    assert not report.cond3["depth_is_1"]
    assert report.cond3["e_c"] is None


def test_decide_rejects_non_parameters(two_planes):
    A, _ = two_planes
    x, y, u, v = A.gens()
    with pytest.raises(NotParameters):
        decision.decide(A, A.ideal([A.reduce(x + u), y]))


def test_decide_rejects_non_standard_parameters(ideal_x2y3):
    A, _ = ideal_x2y3
    with pytest.raises(HypothesisNotVerified):
        decision.decide(A, A.ideal([A.gen(0), A.gen(1)]))


def test_decide_with_oracle_agrees(corpus_instances):
    for name, (A, q) in corpus_instances.items():
        report = decision.decide(A, q, run_oracle=True)
        assert report.oracle_verdict == report.verdict, name


# -- Shimoda ---------------------------------------------------------------

def test_shimoda_matches_decide_in_dimension_two(corpus_instances):
    for name, (A, q) in corpus_instances.items():
        if len(q.gens) != 2:
            continue
        rep = decision.shimoda_check(A, q.gens[0], q.gens[1])
        assert rep["verdict"] == VERDICTS[name], name


def test_shimoda_clauses_on_hochster_roberts(hr):
    A, q = hr
    rep = decision.shimoda_check(A, q.gens[0], q.gens[1])
    assert rep["nonzerodivisors"]
    assert rep["colon_intersection"]
    assert rep["artinian_gorenstein"]


def test_shimoda_negative_on_the_plane(regular_base):
    A, q = regular_base
    rep = decision.shimoda_check(A, q.gens[0], q.gens[1])
    assert not rep["verdict"]
    assert not rep["artinian_gorenstein"]   # socle dimension 2 quotient


def test_shimoda_zerodivisor_fails_first_clause():
    # a plane with an embedded nilpotent direction: x + z kills z
    amb = PolyRing(("x", "y", "z"), (1, 1, 1), F)
    x, y, z = amb.gens()
    A = rings.PresentedGradedRing.from_ambient(amb, [z * z, x * z])
    rep = decision.shimoda_check(A, A.reduce(x + z), y)
    assert not rep["nonzerodivisors"]
    assert not rep["verdict"]


def test_shimoda_needs_dimension_two():
    A = rings.PresentedGradedRing(("x", "y", "z"), (1, 1, 1), [], field=F)
    with pytest.raises(WrongDimension):
        decision.shimoda_check(A, A.gen(0), A.gen(1))


# -- Buchsbaum -------------------------------------------------------------

def test_buchsbaum_two_planes(two_planes):
    A, q = two_planes
    rep = decision.buchsbaum_criterion(A, q)
    assert rep.e_m == 2
    assert rep.reduction_number == 1
    assert rep.len_b == 2
    assert rep.verdict
    assert decision.decide(A, q).verdict == rep.verdict


def test_buchsbaum_rejects_non_parameters(two_planes):
    A, _ = two_planes
    x, y, u, v = A.gens()
    with pytest.raises(NotParameters):
        decision.buchsbaum_criterion(A, A.ideal([A.reduce(x + u), y]))


def test_buchsbaum_needs_depth_one(regular_base):
    A, q = regular_base
    with pytest.raises(DepthNotOne):
        decision.buchsbaum_criterion(A, q)
