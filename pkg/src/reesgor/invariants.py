"""Numerical invariants of a presented graded ring at the irrelevant ideal:
dimension, depth, type, Artinian lengths, Hilbert-Samuel multiplicity,
reduction numbers, and the Artinian Gorenstein test.
"""

from .errors import NoStabilization, NotArtinian, NotContained
from . import idealops
from .hilbert import INFINITE
from .resolutions import ext_dualizing, resolve_quotient_ring
from . import rings

NOT_FOUND = "NOT_FOUND"


class InvariantReport:
    """dim/depth/pd/CM classification of a ring, with its type when defined."""

    def __init__(self, dim, depth, pd, cm, ring_type=None, notes=""):
        self.dim = dim
        self.depth = depth
        self.pd = pd
        self.cm = cm
        self.type = ring_type
        self.notes = notes

    def __repr__(self):
        return ("InvariantReport(dim=%s, depth=%s, pd=%s, cm=%s, type=%s)"
                % (self.dim, self.depth, self.pd, self.cm, self.type))


def krull_dim(A):
    return A.dim()


def depth_and_type(A, length_cap=None):
    """Depth via Auslander-Buchsbaum on the minimal resolution of A over P.

    For CM rings the type is the rank of the last resolution step.  For
    depth-1 non-CM rings the type r_A(A) is the socle dimension of
    Ext^{n-1}_P(A, omega_P), the Matlis dual of H^1 of the ring.
    """
    amb = A.ambient
    res = resolve_quotient_ring(amb, A.defining, length_cap=length_cap)
    pd = res.pd
    depth = amb.n - pd
    dim = A.dim()
    cm = (dim == depth)
    ring_type = None
    notes = ""
    if cm:
        ring_type = res.betti()[-1] if pd > 0 else 1
    elif depth == 1:
        ring_type = ext_dualizing(res, amb.n - 1).socle_dim()
        notes = "type from the socle of the dual of first cohomology"
    return InvariantReport(dim, depth, pd, cm, ring_type, notes)


def artinian_length(A, J):
    """Length of A/J for an Artinian quotient."""
    l = idealops.ideal_length(A.ambient, J.preimage_gens())
    if l == INFINITE:
        raise NotArtinian("A/J has positive dimension")
    return l


def multiplicity(A, J, cap=30):
    """Hilbert-Samuel multiplicity e_J(A) by d-th difference stabilization.

    Computes l(A/J^n) for n = 1, 2, ... and returns the d-th finite
    difference once three consecutive values agree (d = dim A).
    """
    if J.quotient_dim() != 0:
        raise NotArtinian("multiplicity needs an m-primary ideal")
    d = A.dim()
    amb = A.ambient
    lengths = []
    power = list(J.gens)
    streak = []
    for n in range(1, cap + 1):
        l = idealops.ideal_length(amb, A._full(power))
        if l == INFINITE:
            raise NotArtinian("power of J is not m-primary")
        lengths.append(l)
        if len(lengths) >= d + 1:
            diffs = list(lengths)
            for _ in range(d):
                diffs = [y - x for x, y in zip(diffs, diffs[1:])]
            streak.append(diffs[-1])
            if len(streak) >= 3 and streak[-1] == streak[-2] == streak[-3]:
                return streak[-1]
        power = idealops.ideal_product(amb, power, J.gens)
    raise NoStabilization("difference scheme did not settle within %d steps"
                          % cap)


def is_reduction(q, c, r_max=10):
    """Least r with c^(r+1) = q * c^r, or NOT_FOUND.

    Requires q contained in c (as ideals of their common ring).
    """
    if not c.contains_ideal(q):
        raise NotContained("q is not contained in c")
    A = q.owner
    amb = A.ambient
    c_pow = [amb.one]  # c^0
    for r in range(r_max + 1):
        c_next = idealops.ideal_product(amb, c_pow, c.gens) or []
        q_side = idealops.ideal_product(amb, q.gens, c_pow) or []
        if idealops.ideals_equal(amb, A._full(c_next), A._full(q_side)):
            return r
        c_pow = c_next
    return NOT_FOUND


def artinian_gorenstein(A, J):
    """True iff the Artinian ring A/J is Gorenstein (socle of length one)."""
    base = artinian_length(A, J)
    soc = rings.colon(J, A.maximal_ideal())
    upper = artinian_length(A, soc)
    return base - upper == 1
