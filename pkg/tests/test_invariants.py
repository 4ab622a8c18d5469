"""Krull dimension, depth, type, multiplicity, reductions."""

import pytest

from reesgor import invariants, rings
from reesgor.errors import NotArtinian, NotContained
from reesgor.fields import GF, DEFAULT_PRIME
from reesgor.polys import PolyRing

F = GF(DEFAULT_PRIME)


def test_dimensions_on_corpus(corpus_instances):
    for name, (A, _) in corpus_instances.items():
        assert invariants.krull_dim(A) == 2, name


def test_depth_and_type_frozen_values(corpus_instances):
    want = {
        "hochster_roberts": (1, 3, False, 1),
        "two_planes": (1, 3, False, 1),
        "idealization_xy": (1, 3, False, 1),
        "idealization_x2y3": (1, 3, False, 1),
        "regular_base": (2, 0, True, 1),
    }
    for name, (A, _) in corpus_instances.items():
        rep = invariants.depth_and_type(A)
        depth, pd, cm, rtype = want[name]
        assert (rep.depth, rep.pd, rep.cm, rep.type) == \
            (depth, pd, cm, rtype), name


def test_artinian_length_of_parameter_quotients(corpus_instances):
    want = {
        "hochster_roberts": 3,
        "two_planes": 3,
        "idealization_xy": 3,
        "idealization_x2y3": 18,
        "regular_base": 1,
    }
    for name, (A, q) in corpus_instances.items():
        assert invariants.artinian_length(A, q) == want[name], name


def test_artinian_length_needs_finite_quotient():
    A = rings.PresentedGradedRing(("x", "y"), (1, 1), [], field=F)
    with pytest.raises(NotArtinian):
        invariants.artinian_length(A, A.ideal([A.gen(0)]))


def test_multiplicity_of_maximal_ideal(two_planes, hr):
    for (A, _), e in ((two_planes, 2), (hr, 2)):
        assert invariants.multiplicity(A, A.maximal_ideal()) == e


def test_multiplicity_weighted_polynomial_ring():
    # e((x, y); k[x, y]) = 1; parameters of higher degree scale it
    A = rings.PresentedGradedRing(("x", "y"), (1, 1), [], field=F)
    x, y = A.gens()
    assert invariants.multiplicity(A, A.ideal([x, y])) == 1
    assert invariants.multiplicity(A, A.ideal([x * x, y])) == 2
    assert invariants.multiplicity(A, A.ideal([x * x, y ** 3])) == 6


def test_is_reduction_of_the_maximal_ideal(two_planes):
    A, q = two_planes
    assert invariants.is_reduction(q, A.maximal_ideal()) == 1


def test_is_reduction_not_found():
    A = rings.PresentedGradedRing(("x", "y"), (1, 1), [], field=F)
    x, y = A.gens()
    got = invariants.is_reduction(A.ideal([x]), A.ideal([x, y]), r_max=4)
    assert got == invariants.NOT_FOUND


def test_is_reduction_requires_containment():
    A = rings.PresentedGradedRing(("x", "y"), (1, 1), [], field=F)
    x, y = A.gens()
    with pytest.raises(NotContained):
        invariants.is_reduction(A.ideal([x + y, y]), A.ideal([x]))


def test_artinian_gorenstein_detection():
    A = rings.PresentedGradedRing(("x", "y"), (1, 1), [], field=F)
    x, y = A.gens()
    assert invariants.artinian_gorenstein(A, A.ideal([x * x, y * y]))
    assert invariants.artinian_gorenstein(A, A.ideal([x, y]))
    assert not invariants.artinian_gorenstein(
        A, A.ideal([x * x, x * y, y * y]))


def test_type_via_last_betti_for_cm_quotient():
    # k[x,y,z]/(xy, yz, xz) is CM of type 2
    amb = PolyRing(("x", "y", "z"), (1, 1, 1), F)
    x, y, z = amb.gens()
    A = rings.PresentedGradedRing.from_ambient(amb, [x * y, y * z, x * z])
    rep = invariants.depth_and_type(A)
    assert rep.cm
    assert rep.type == 2
