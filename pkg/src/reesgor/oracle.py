"""Direct oracle for Gorensteinness of R(q^n) = A[q^n t].

The Rees algebra is presented as a graded quotient of P[T_0..T_s] by
eliminating t from I + (T_j - g_j t), where the g_j run over all
degree-n monomials in the parameters.  Gorensteinness of the quotient is
Cohen-Macaulayness plus last Betti number one, which is valid because
every presentation here is connected graded over the base field.
"""

import itertools

from .errors import DepthNotOne, EquivalenceViolation, InternalInconsistency, NotParameters
from . import idealops, invariants, rings
from .groebner import groebner_basis, normal_form


class ReesPresentation:
    def __init__(self, base, q, n, power_gens, ring):
        self.base = base            # the PresentedGradedRing A
        self.q = q
        self.n = n
        self.power_gens = power_gens  # generators of q^n, in order
        self.ring = ring            # R(q^n) as a PresentedGradedRing


def power_monomials(q_gens, n):
    """All degree-n monomials in the parameters, in a fixed order."""
    d = len(q_gens)
    out = []
    for combo in itertools.combinations_with_replacement(range(d), n):
        g = q_gens[combo[0]]
        for i in combo[1:]:
            g = g * q_gens[i]
        out.append(g)
    return out


def rees_presentation(A, q, n):
    """Present R(q^n) by elimination, with a substitution check."""
    if n < 1:
        raise ValueError("power must be at least 1")
    d = A.dim()
    if len(q.gens) != d or q.quotient_dim() != 0:
        raise NotParameters("q must be a parameter ideal")
    amb = A.ambient
    gens_n = power_monomials(q.gens, n)
    t_names = tuple(_t_name(amb, j) for j in range(len(gens_n)))
    t_weights = tuple(g.degree() + 1 for g in gens_n)
    helper = "@t"
    big = amb.extend(t_names + (helper,), t_weights + (1,))
    t = big.gen(big.n - 1)
    work = [big.transfer(g) for g in A.defining]
    for j, g in enumerate(gens_n):
        work.append(big.gen(amb.n + j) - big.transfer(g) * t)
    sub, out = idealops.eliminate(big, work, (big.n - 1,))
    ring = rings.PresentedGradedRing.from_ambient(sub, out)
    rp = ReesPresentation(A, q, n, gens_n, ring)
    _verify_substitution(rp)
    if ring.dim() != d + 1:
        raise InternalInconsistency(
            "Rees presentation has dimension %d, expected %d"
            % (ring.dim(), d + 1))
    return rp


def _t_name(ring, j):
    name = "T%d" % j
    while name in ring.names:
        name += "_"
    return name


def _verify_substitution(rp):
    """Every defining generator must die under T_j -> g_j * t mod I."""
    A = rp.base
    amb = A.ambient
    ext = amb.extend(("@t",), (1,))
    t = ext.gen(ext.n - 1)
    images = [ext.transfer(g) * t for g in rp.power_gens]
    gb = [ext.transfer(g) for g in A.gb()]
    gb = groebner_basis(gb) if gb else []
    sub = rp.ring.ambient
    for f in rp.ring.defining:
        acc = ext.zero
        for exp, c in f.terms:
            term = ext.const(c)
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                if i < amb.n:
                    term = term * ext.gen(i) ** e
                else:
                    term = term * images[i - amb.n] ** e
            acc = acc + term
        if gb:
            acc = normal_form(acc, gb)
        if not acc.is_zero():
            raise InternalInconsistency(
                "substitution check failed for %s" % f)


def graded_gorenstein_oracle(rp, length_cap=None):
    """CM and type from the minimal resolution of the presentation."""
    rep = invariants.depth_and_type(rp.ring, length_cap=length_cap)
    cm = rep.cm
    gorenstein = bool(cm and rep.type == 1)
    return {"gorenstein": gorenstein, "cm": cm,
            "type": rep.type if cm else None,
            "pd": rep.pd, "dim": rep.dim}


def n_neq_d_suite(A, q, d, trials, criteria_verdict=None):
    """Oracle verdicts per power n; only n = d may be Gorenstein.

    When the criteria verdict for (A, q) is supplied, the n = d oracle
    outcome must match it.
    """
    rep = invariants.depth_and_type(A)
    if rep.depth != 1:
        raise DepthNotOne("the power dichotomy needs depth 1")
    out = {}
    for n in trials:
        rp = rees_presentation(A, q, n)
        verdict = graded_gorenstein_oracle(rp)["gorenstein"]
        out[n] = verdict
        if n != d and verdict:
            raise EquivalenceViolation(
                "oracle reports Gorenstein at power %d != dim %d" % (n, d))
        if n == d and criteria_verdict is not None \
                and verdict != criteria_verdict:
            raise EquivalenceViolation(
                "oracle disagrees with the criteria verdict at n = d")
    return out
