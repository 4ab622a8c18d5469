"""Presented graded rings A = P/I and their ideals.

Ideals of A are stored as preimages in the ambient polynomial ring P:
every A-level operation becomes a P-level operation on generator lists
that always carry the defining ideal I along.
"""

from .errors import (NonPositiveWeight, NotAMember, NotDivisible,
                     NotParameters, OwnerMismatch)
from .groebner import groebner_basis, is_member, lift_combination, normal_form
from .hilbert import dimension_from_numerator, hilbert_numerator
from . import idealops
from .polys import PolyRing


class PresentedGradedRing:
    """A = P/I for a weighted polynomial ring P and homogeneous ideal I."""

    def __init__(self, names, weights, ideal_gens, field=None, label=None):
        self.ambient = PolyRing(names, weights, field)
        self.defining = []
        for g in ideal_gens:
            if g.ring != self.ambient:
                g = self.ambient.transfer(g)
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError("inhomogeneous defining generator: %s" % g)
            self.defining.append(g)
        self.label = label
        self._gb = None
        self._dim = None

    @classmethod
    def from_ambient(cls, ambient, ideal_gens, label=None):
        ring = cls.__new__(cls)
        ring.ambient = ambient
        ring.defining = []
        for g in ideal_gens:
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError("inhomogeneous defining generator: %s" % g)
            ring.defining.append(g)
        ring.label = label
        ring._gb = None
        ring._dim = None
        return ring

    # -- cached invariants -------------------------------------------------

    def gb(self):
        if self._gb is None:
            self._gb = groebner_basis(self.defining) if self.defining else []
        return self._gb

    def dim(self):
        if self._dim is None:
            num = hilbert_numerator([g.lead_exp() for g in self.gb()],
                                    self.ambient.weights)
            self._dim = dimension_from_numerator(num, self.ambient.weights)
        return self._dim

    @property
    def names(self):
        return self.ambient.names

    @property
    def weights(self):
        return self.ambient.weights

    @property
    def field(self):
        return self.ambient.field

    def gen(self, i):
        return self.ambient.gen(i)

    def gens(self):
        return self.ambient.gens()

    # -- ideals ------------------------------------------------------------

    def ideal(self, gens):
        return Ideal(self, gens)

    def zero_ideal(self):
        return Ideal(self, [])

    def unit_ideal(self):
        return Ideal(self, [self.ambient.one])

    def maximal_ideal(self):
        return Ideal(self, self.ambient.gens())

    def reduce(self, f):
        """Normal form of f modulo the defining ideal."""
        return normal_form(f, self.gb())

    def is_zero_element(self, f):
        return self.reduce(f).is_zero()

    def is_regular_element(self, a):
        """True when a is a non-zerodivisor on A: (I : a) = I in P."""
        c = idealops.colon(self.ambient, self._full(self.defining), [a])
        return idealops.ideals_equal(self.ambient, c, self.defining or [])

    def _full(self, gens):
        return [g for g in gens if not g.is_zero()] + self.defining

    def __eq__(self, other):
        return (isinstance(other, PresentedGradedRing)
                and other.ambient == self.ambient
                and [g.terms for g in other.defining]
                == [g.terms for g in self.defining])

    def __hash__(self):
        return hash((self.ambient, tuple(g.terms for g in self.defining)))

    def __repr__(self):
        base = repr(self.ambient)
        if not self.defining:
            return base
        return "%s/(%s)" % (base, ", ".join(str(g) for g in self.defining))


class Ideal:
    """Ideal of a presented ring, stored as a preimage generator list."""

    def __init__(self, owner, gens):
        self.owner = owner
        self.gens = []
        for g in gens:
            if g.ring != owner.ambient:
                raise OwnerMismatch("generator from a different ring")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError("inhomogeneous ideal generator: %s" % g)
            self.gens.append(g)
        self._gb = None
        self._dim = None

    def preimage_gens(self):
        """Generators of the full preimage in P (defining ideal included)."""
        return list(self.gens) + list(self.owner.defining)

    def gb(self):
        if self._gb is None:
            full = self.preimage_gens()
            self._gb = groebner_basis(full) if full else []
        return self._gb

    def contains(self, f):
        if f.is_zero():
            return True
        gb = self.gb()
        return bool(gb) and is_member(f, gb)

    def contains_ideal(self, other):
        _check_owner(self, other)
        return all(self.contains(g) for g in other.gens)

    def quotient_dim(self):
        """Krull dimension of A / this ideal."""
        if self._dim is None:
            num = hilbert_numerator([g.lead_exp() for g in self.gb()],
                                    self.owner.ambient.weights)
            self._dim = dimension_from_numerator(num,
                                                 self.owner.ambient.weights)
        return self._dim

    def is_zero(self):
        """True when the ideal is zero in A (preimage equals I)."""
        return all(self.owner.is_zero_element(g) for g in self.gens)

    def is_unit(self):
        return self.contains(self.owner.ambient.one)

    def minimal_gens(self):
        """The stored generators with redundant ones greedily dropped (in A)."""
        kept = list(self.gens)
        i = 0
        while i < len(kept):
            rest = self.owner._full(kept[:i] + kept[i + 1:])
            if rest and is_member(kept[i], groebner_basis(rest)):
                del kept[i]
            else:
                i += 1
        return kept

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.gens)


def _check_owner(a, b):
    if a.owner != b.owner:
        raise OwnerMismatch("ideals from different rings")


def ideal_combine(ia, ib, op, n=None):
    """Sum, product, or power of ideals of the same ring."""
    if op == "power":
        A = ia.owner
        gens = idealops.ideal_power(A.ambient, ia.gens, n)
        return Ideal(A, gens)
    _check_owner(ia, ib)
    A = ia.owner
    if op == "sum":
        return Ideal(A, idealops.ideal_sum(A.ambient, ia.gens, ib.gens))
    if op == "product":
        return Ideal(A, idealops.ideal_product(A.ambient, ia.gens, ib.gens))
    raise ValueError("unknown op %r" % op)


def intersect(ia, ib):
    _check_owner(ia, ib)
    A = ia.owner
    out = idealops.intersect(A.ambient, ia.preimage_gens(), ib.preimage_gens())
    return Ideal(A, out)


def colon(ia, by):
    """ia : by, where by is an Ideal or a single ring element."""
    A = ia.owner
    if isinstance(by, Ideal):
        _check_owner(ia, by)
        divs = by.gens
    else:
        divs = [by]
    out = idealops.colon(A.ambient, ia.preimage_gens(), divs)
    return Ideal(A, out)


def saturate(ia, by, cap=64):
    """(stable iterated colon, first stabilization index)."""
    A = ia.owner
    if isinstance(by, Ideal):
        _check_owner(ia, by)
        divs = by.gens
    else:
        divs = [by]
    out, idx = idealops.saturate(A.ambient, ia.preimage_gens(), divs, cap=cap)
    return Ideal(A, out), idx


def ideals_equal(ia, ib):
    _check_owner(ia, ib)
    return idealops.ideals_equal(ia.owner.ambient, ia.preimage_gens(),
                                 ib.preimage_gens())


def eliminate(ia, block):
    """Contract an ambient-ring ideal to the subring without `block`.

    The owner must have a trivial presentation (an honest polynomial
    ring); returns the contracted Ideal over the restricted ring.
    """
    A = ia.owner
    if A.defining:
        raise ValueError("eliminate expects an ideal of a polynomial ring")
    sub, out = idealops.eliminate(A.ambient, ia.gens, block)
    target = PresentedGradedRing.from_ambient(sub, [])
    return Ideal(target, out)


def ring_map_kernel(targets, source_names, target_ring):
    """Kernel of k[source_names] -> target_ring, s_i |-> targets[i].

    Source weights are the weighted degrees of the targets.  Returns the
    kernel as an Ideal of the (freely presented) source ring.
    """
    amb = target_ring.ambient
    weights = []
    for t in targets:
        if t.is_zero() or not t.is_homogeneous():
            raise NonPositiveWeight("targets must be nonzero homogeneous")
        w = t.degree()
        if w <= 0:
            raise NonPositiveWeight("target of non-positive degree: %s" % t)
        weights.append(w)
    names = tuple(source_names)
    big = amb.extend(names, tuple(weights))
    gens = [g for g in (big.transfer(g) for g in target_ring.defining)]
    for i, t in enumerate(targets):
        gens.append(big.gen(amb.n + i) - big.transfer(t))
    sub, out = idealops.eliminate(big, gens, tuple(range(amb.n)))
    source = PresentedGradedRing.from_ambient(sub, [])
    return Ideal(source, out)


def sigma_tilde(a_list, A):
    """The colon-sum ideal sum_i ((a_1,..,a_i-hat,..,a_d) : a_i) of A."""
    q = Ideal(A, a_list)
    if q.quotient_dim() != 0 or len(a_list) != A.dim():
        raise NotParameters("elements are not a system of parameters")
    amb = A.ambient
    total = []
    for i, ai in enumerate(a_list):
        rest = [a for j, a in enumerate(a_list) if j != i]
        ci = idealops.colon(amb, A._full(rest), [ai])
        total.extend(ci)
    return Ideal(A, idealops.reduced_gens(amb, total))


def ring_division(f, a, A):
    """g with a*g = f in A, for a regular on A; NotDivisible otherwise."""
    try:
        coeffs = lift_combination(f, [a] + A.defining)
    except NotAMember:
        raise NotDivisible("%s is not divisible by %s in the ring" % (f, a))
    return A.reduce(coeffs[0])
