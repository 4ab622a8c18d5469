"""Fields, orders, polynomials, Groebner bases, Hilbert numerators."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from reesgor.fields import GF, QQ, DEFAULT_PRIME
from reesgor.groebner import (groebner_basis, is_member, lift_combination,
                              normal_form)
from reesgor.hilbert import (count_standard_monomials, dimension_from_numerator,
                             finite_length, hilbert_numerator, quotient_series,
                             upoly_eval_one, upoly_mul)
from reesgor.inputfmt import parse_poly
from reesgor.orders import GrevlexOrder, LexOrder
from reesgor.polys import PolyRing
from reesgor.errors import NotAMember, NotDivisible

F = GF(DEFAULT_PRIME)


def ring2():
    return PolyRing(("x", "y"), (1, 1), F)


def ring3():
    return PolyRing(("x", "y", "z"), (1, 1, 1), F)


# -- fields ----------------------------------------------------------------

@given(st.integers(min_value=1, max_value=DEFAULT_PRIME - 1))
def test_prime_field_inverse(a):
    assert F.mul(a, F.inv(a)) == F.one


@given(st.integers(), st.integers())
def test_prime_field_add_commutes(a, b):
    assert F.add(F.of(a), F.of(b)) == F.add(F.of(b), F.of(a))


def test_rational_field_exact():
    third = QQ.div(QQ.of(1), QQ.of(3))
    assert QQ.mul(third, QQ.of(3)) == QQ.one


def test_gf_rejects_composites():
    with pytest.raises(ValueError):
        GF(12)


# -- monomial orders -------------------------------------------------------

exps3 = st.tuples(*[st.integers(min_value=0, max_value=6)] * 3)


@given(exps3, exps3, exps3)
def test_grevlex_is_multiplicative(a, b, c):
    order = GrevlexOrder((1, 2, 1))
    if order.key(a) < order.key(b):
        ac = tuple(x + y for x, y in zip(a, c))
        bc = tuple(x + y for x, y in zip(b, c))
        assert order.key(ac) < order.key(bc)


@given(exps3)
def test_orders_bottom_at_one(e):
    for order in (GrevlexOrder((1, 1, 1)), LexOrder((1, 1, 1))):
        if e != (0, 0, 0):
            assert order.key(e) > order.key((0, 0, 0))


def test_grevlex_weighted_degree_dominates():
    order = GrevlexOrder((2, 1))
    # x has weighted degree 2, y only 1
    assert order.key((1, 0)) > order.key((0, 1))


# -- polynomial arithmetic -------------------------------------------------

def rand_poly(ring, rng, max_terms=4, max_deg=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(0, max_deg) for _ in range(ring.n))
        terms[exp] = ring.field.of(rng.randint(-5, 5))
    return ring.from_dict(terms)


@given(st.integers(min_value=0, max_value=10 ** 6))
def test_poly_distributive(seed):
    rng = random.Random(seed)
    R = ring3()
    f, g, h = (rand_poly(R, rng) for _ in range(3))
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h


@given(st.integers(min_value=0, max_value=10 ** 6))
def test_poly_str_parse_roundtrip(seed):
    rng = random.Random(seed)
    R = ring3()
    f = rand_poly(R, rng)
    assert parse_poly(str(f), R) == f


def test_poly_power_and_exact_div():
    R = ring2()
    x, y = R.gens()
    f = x + y
    assert f ** 3 == x ** 3 + 3 * x * x * y + 3 * x * y * y + y ** 3
    g = (x + y) * (x - y)
    assert g.exact_div(x + y) == x - y
    with pytest.raises(NotDivisible):
        (x * x + y).exact_div(x)


def test_homogeneity_with_weights():
    R = PolyRing(("a", "b"), (2, 1), F)
    a, b = R.gens()
    assert (a + b * b).is_homogeneous()
    assert not (a + b).is_homogeneous()
    assert (a * b).degree() == 3


# -- Groebner bases --------------------------------------------------------

def test_known_basis_twisted_cubic():
    R = PolyRing(("x", "y", "z"), (1, 1, 1), F)
    x, y, z = R.gens()
    # a single binomial is its own basis, stored monic with lead y^2
    gb = groebner_basis([x * z - y * y])
    assert gb == [y * y - x * z]


def test_reduced_basis_is_autoreduced():
    R = ring2()
    x, y = R.gens()
    gb = groebner_basis([x * x + y * y, x * y, y ** 3])
    for i, g in enumerate(gb):
        assert g.lead_coeff() == F.one
        others = gb[:i] + gb[i + 1:]
        for exp, _ in g.terms:
            for h in others:
                divides = all(le <= e for le, e in zip(h.lead_exp(), exp))
                assert not divides


def test_determinism_under_permutation(corpus_instances):
    for name, (A, _) in corpus_instances.items():
        gens = A.defining
        if not gens:
            continue
        ref = groebner_basis(gens)
        for perm in itertools.islice(itertools.permutations(gens), 8):
            assert groebner_basis(list(perm)) == ref, name


def test_membership_on_random_combinations(corpus_instances):
    rng = random.Random(7)
    for name, (A, _) in corpus_instances.items():
        gens = A.defining
        if not gens:
            continue
        gb = groebner_basis(gens)
        R = A.ambient
        for _ in range(100):
            f = R.zero
            for g in gens:
                f = f + rand_poly(R, rng, max_terms=2, max_deg=2) * g
            assert is_member(f, gb), name


def test_normal_form_is_idempotent(hr):
    A, _ = hr
    gb = A.gb()
    R = A.ambient
    rng = random.Random(3)
    for _ in range(25):
        f = rand_poly(R, rng)
        r = normal_form(f, gb)
        assert normal_form(r, gb) == r
        assert is_member(f - r, gb)


def test_lift_combination_reexpands(hr):
    A, _ = hr
    R = A.ambient
    gens = A.defining
    f = gens[0] * R.gen(1) + gens[2]
    coeffs = lift_combination(f, gens)
    acc = R.zero
    for c, g in zip(coeffs, gens):
        acc = acc + c * g
    assert acc == f


def test_lift_combination_rejects_nonmembers():
    R = ring2()
    x, y = R.gens()
    with pytest.raises(NotAMember):
        lift_combination(y, [x * x, x * y])


# -- Hilbert series --------------------------------------------------------

def brute_count(exps, weights, up_to):
    """Standard monomials by direct enumeration (small cases only)."""
    n = len(weights)
    counts = [0] * (up_to + 1)
    bound = up_to + 1
    ranges = [range(0, bound // w + 1) for w in weights]
    for e in itertools.product(*ranges):
        deg = sum(a * w for a, w in zip(e, weights))
        if deg > up_to:
            continue
        if any(all(a >= b for a, b in zip(e, le)) for le in exps):
            continue
        counts[deg] += 1
    return counts


@pytest.mark.parametrize("exps,weights", [
    ([(2, 0), (0, 3)], (1, 1)),
    ([(1, 1)], (1, 1)),
    ([(2, 1), (0, 4)], (1, 2)),
    ([(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)], (1, 1, 1)),
    ([(2, 0, 1)], (2, 1, 3)),
])
def test_numerator_expansion_matches_enumeration(exps, weights):
    num = hilbert_numerator(exps, weights)
    series = [0] * 13
    # expand num / prod(1 - t^w) to degree 12 by polynomial division
    denom_roots = list(weights)
    cur = dict(num)
    for w in denom_roots:
        # multiply series by 1/(1 - t^w): prefix-sum with stride w
        nxt = [0] * 13
        for d in range(13):
            nxt[d] = cur.get(d, 0) + (nxt[d - w] if d >= w else 0)
        cur = {d: v for d, v in enumerate(nxt)}
    got = [cur.get(d, 0) for d in range(13)]
    assert got == brute_count(exps, weights, 12)


def test_count_standard_monomials_agrees():
    exps = [(2, 0), (1, 1), (0, 3)]
    weights = (1, 2)
    brute = brute_count(exps, weights, 12)
    assert count_standard_monomials(exps, weights, 12) == \
        {d: v for d, v in enumerate(brute) if v}


def test_dimension_and_length():
    weights = (1, 1)
    num_artin = hilbert_numerator([(2, 0), (0, 2)], weights)
    assert dimension_from_numerator(num_artin, weights) == 0
    assert finite_length(num_artin, weights) == 4
    num_curve = hilbert_numerator([(1, 1)], weights)
    assert dimension_from_numerator(num_curve, weights) == 1


def test_quotient_series_of_finite_quotient():
    weights = (1, 1)
    num = hilbert_numerator([(1, 0), (0, 2)], weights)
    series = quotient_series(num, weights)
    assert upoly_eval_one(series) == 2
