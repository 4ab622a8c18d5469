"""Free modules over a polynomial ring and module Groebner machinery.

A Vec is an element of a free module F = sum_i P(-shift_i), stored as
((component, exponent), coefficient) terms sorted descending in a
position-over-term order extending the ring's monomial order.  The
Buchberger loop here optionally tracks representations of basis elements
in terms of the input generators.  Syzygies are computed separately by a
Groebner basis of the graph module {(g_i, e_i)} in F + F^s under the
position-over-term order, reading off elements supported in the second
block.
"""

import heapq

from .errors import NotAMember, OwnerMismatch, ResourceExceeded
from .polys import Poly, _exp_div, _exp_lcm, _exp_mul


class FreeModule:
    """Graded free module of finite rank with per-component degree shifts."""

    def __init__(self, ring, rank, shifts=None):
        self.ring = ring
        self.rank = rank
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank

    def key(self, comp, exp):
        # position over term: earlier components dominate
        return (-comp,) + self.ring.order.key(exp)

    def zero(self):
        return Vec(self, ())

    def basis_vec(self, i, poly=None):
        if poly is None:
            poly = self.ring.one
        return self.from_poly_list([(i, poly)])

    def from_poly_list(self, pairs):
        """Build a Vec from (component, Poly) pairs."""
        d = {}
        F = self.ring.field
        for comp, p in pairs:
            if p.ring != self.ring:
                raise OwnerMismatch("polynomial from a different ring")
            for e, c in p.terms:
                k = (comp, e)
                d[k] = F.add(d.get(k, F.zero), c)
        return self.from_dict(d)

    def from_dict(self, d):
        zero = self.ring.field.zero
        items = [(ce, c) for ce, c in d.items() if c != zero]
        items.sort(key=lambda t: self.key(*t[0]), reverse=True)
        return Vec(self, tuple(items))

    def from_columns(self, polys):
        """Vec from a list of polynomial entries, one per component."""
        return self.from_poly_list(list(enumerate(polys)))

    def __eq__(self, other):
        return (isinstance(other, FreeModule) and other.ring == self.ring
                and other.rank == self.rank and other.shifts == self.shifts)

    def __hash__(self):
        return hash((self.ring, self.rank, self.shifts))


class Vec:
    """Immutable element of a FreeModule."""

    __slots__ = ("module", "terms", "_hash")

    def __init__(self, module, terms):
        self.module = module
        self.terms = terms
        self._hash = None

    def is_zero(self):
        return not self.terms

    def lead(self):
        """((comp, exp), coeff) of the largest term."""
        return self.terms[0]

    def component(self, i):
        """The polynomial entry in component i."""
        d = {e: c for (comp, e), c in self.terms if comp == i}
        return self.module.ring.from_dict(d)

    def components(self):
        polys = [dict() for _ in range(self.module.rank)]
        for (comp, e), c in self.terms:
            polys[comp][e] = c
        return [self.module.ring.from_dict(d) for d in polys]

    def degree(self):
        """Common weighted degree (with shifts) when homogeneous, else max."""
        if not self.terms:
            return -1
        ring = self.module.ring
        sh = self.module.shifts
        return max(ring.wdeg(e) + sh[comp] for (comp, e), _ in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        ring = self.module.ring
        sh = self.module.shifts
        degs = {ring.wdeg(e) + sh[comp] for (comp, e), _ in self.terms}
        return len(degs) == 1

    def __add__(self, other):
        F = self.module.ring.field
        d = dict(self.terms)
        for k, c in other.terms:
            d[k] = F.add(d.get(k, F.zero), c)
        return self.module.from_dict(d)

    def __sub__(self, other):
        F = self.module.ring.field
        d = dict(self.terms)
        for k, c in other.terms:
            d[k] = F.sub(d.get(k, F.zero), c)
        return self.module.from_dict(d)

    def __neg__(self):
        F = self.module.ring.field
        return Vec(self.module, tuple((k, F.neg(c)) for k, c in self.terms))

    def scale(self, c):
        F = self.module.ring.field
        if c == F.zero:
            return self.module.zero()
        return Vec(self.module, tuple((k, F.mul(cc, c)) for k, cc in self.terms))

    def mul_term(self, exp, coeff):
        F = self.module.ring.field
        return Vec(self.module,
                   tuple(((comp, _exp_mul(e, exp)), F.mul(c, coeff))
                         for (comp, e), c in self.terms))

    def mul_poly(self, p):
        F = self.module.ring.field
        d = {}
        for e1, c1 in p.terms:
            for (comp, e2), c2 in self.terms:
                k = (comp, _exp_mul(e1, e2))
                d[k] = F.add(d.get(k, F.zero), F.mul(c1, c2))
        return self.module.from_dict(d)

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.module.ring.field.inv(self.terms[0][1]))

    def __eq__(self, other):
        return (isinstance(other, Vec) and other.module == self.module
                and other.terms == self.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.module.rank, self.module.shifts, self.terms))
        return self._hash

    def __repr__(self):
        return "<Vec %s>" % (tuple(str(p) for p in self.components()),)


def _neg_tuple(t):
    return tuple(-x for x in t)


def vec_nf(f, basis, track=False):
    """Fully reduced normal form of f against basis (monic leads assumed).

    Returns (remainder, quotients); quotients[i] is the Poly q_i with
    f = sum q_i * basis_i + remainder.  quotients is None unless track.
    """
    module = f.module
    ring = module.ring
    F = ring.field
    by_comp = {}
    for idx, b in enumerate(basis):
        (comp, e), _ = b.lead()
        by_comp.setdefault(comp, []).append((e, idx))
    work = dict(f.terms)
    heap = [(_neg_tuple(module.key(comp, e)), comp, e) for (comp, e) in work]
    heapq.heapify(heap)
    rem = {}
    quots = [dict() for _ in basis] if track else None
    while heap:
        _, comp, e = heapq.heappop(heap)
        c = work.pop((comp, e), None)
        if c is None or c == F.zero:
            continue
        hit = None
        for le, idx in by_comp.get(comp, ()):
            q = _exp_div(e, le)
            if q is not None:
                hit = (q, idx)
                break
        if hit is None:
            rem[(comp, e)] = c
            continue
        q, idx = hit
        # basis is monic, so the cofactor coefficient is just c
        if track:
            quots[idx][q] = F.add(quots[idx].get(q, F.zero), c)
        for (bcomp, be), bc in basis[idx].terms:
            k = (bcomp, _exp_mul(be, q))
            old = work.get(k)
            if old is None:
                nc = F.neg(F.mul(c, bc))
                if k == (comp, e):
                    nc = F.add(c, nc)
            else:
                nc = F.sub(old, F.mul(c, bc))
            if nc == F.zero:
                work.pop(k, None)
            else:
                if old is None and k != (comp, e):
                    heapq.heappush(heap, (_neg_tuple(module.key(*k)), k[0], k[1]))
                work[k] = nc
    remainder = module.from_dict(rem)
    if track:
        quots = [ring.from_dict(d) for d in quots]
    return remainder, quots


def _rep_add(F, ring, target, src, factor_poly=None, exp=None, coeff=None):
    """target += rep * factor, where factor is a Poly or a single term."""
    for idx, p in src.items():
        if factor_poly is not None:
            q = p * factor_poly
        else:
            q = p.mul_term(exp, coeff)
        if idx in target:
            target[idx] = target[idx] + q
        else:
            target[idx] = q
    return target


class GroebnerData:
    """Result bundle of a module Buchberger run."""

    def __init__(self, basis, reps, gens, module):
        self.basis = basis          # reduced Groebner basis, monic, sorted
        self.reps = reps            # rep dicts parallel to basis, or None
        self.gens = gens
        self.module = module


def module_buchberger(gens, track_reps=False, pair_cap=None):
    """Reduced module Groebner basis with optional representation tracking."""
    if not gens:
        raise ValueError("empty generator list")
    module = gens[0].module
    ring = module.ring
    F = ring.field
    track = track_reps
    rank1 = module.rank == 1
    basis = []
    reps = []
    for i, g in enumerate(gens):
        if g.module != module:
            raise OwnerMismatch("generators from different modules")
        if g.is_zero():
            continue
        lc = g.lead()[1]
        basis.append(g.scale(F.inv(lc)))
        reps.append({i: ring.const(F.inv(lc))} if track else None)

    pairs = []
    done = set()

    def push_pairs(j):
        (compj, ej), _ = basis[j].lead()
        for i in range(j):
            (compi, ei), _ = basis[i].lead()
            if compi != compj:
                continue
            lcm = _exp_lcm(ei, ej)
            # normal strategy: smallest lcm in the module order first
            heapq.heappush(pairs, (module.key(compi, lcm), i, j, lcm))

    for j in range(len(basis)):
        push_pairs(j)

    processed = 0
    while pairs:
        processed += 1
        if pair_cap is not None and processed > pair_cap:
            raise ResourceExceeded("pair queue cap %d exceeded" % pair_cap)
        _, i, j, lcm = heapq.heappop(pairs)
        (comp, ei), _ = basis[i].lead()
        ej = basis[j].lead()[0][1]
        # product criterion (valid for ideals only)
        if rank1 and _exp_mul(ei, ej) == lcm:
            done.add((i, j))
            continue
        # chain criterion
        skip = False
        for k, b in enumerate(basis):
            if k == i or k == j:
                continue
            (compk, ek), _ = b.lead()
            if compk != comp:
                continue
            if _exp_div(lcm, ek) is None:
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik in done and pjk in done:
                skip = True
                break
        if skip:
            done.add((i, j))
            continue
        ui = _exp_div(lcm, ei)
        uj = _exp_div(lcm, ej)
        sp = basis[i].mul_term(ui, F.one) - basis[j].mul_term(uj, F.one)
        h, quots = vec_nf(sp, basis, track=track)
        done.add((i, j))
        if h.is_zero():
            continue
        lc = h.lead()[1]
        inv = F.inv(lc)
        basis.append(h.scale(inv))
        if track:
            rep = {}
            _rep_add(F, ring, rep, reps[i], exp=ui, coeff=F.one)
            _rep_add(F, ring, rep, reps[j], exp=uj, coeff=F.neg(F.one))
            for idx, q in enumerate(quots):
                if not q.is_zero():
                    _rep_add(F, ring, rep, reps[idx], factor_poly=-q)
            rep = {k: p.scale(inv) for k, p in rep.items() if not p.is_zero()}
            reps.append(rep)
        else:
            reps.append(None)
        push_pairs(len(basis) - 1)

    # interreduce: keep elements whose leads minimally generate the lead module
    keep = []
    for i, b in enumerate(basis):
        (comp, e), _ = b.lead()
        redundant = False
        for j, b2 in enumerate(basis):
            if i == j:
                continue
            (comp2, e2), _ = b2.lead()
            if comp2 == comp and _exp_div(e, e2) is not None:
                if e2 != e or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(i)
    reduced = []
    red_reps = []
    for i in keep:
        others = [basis[j] for j in keep if j != i]
        if others:
            r, quots = vec_nf(basis[i], others, track=track)
        else:
            r, quots = basis[i], None
        rep = None
        if track:
            rep = dict(reps[i])
            if quots:
                pos = 0
                for j in keep:
                    if j == i:
                        continue
                    q = quots[pos]
                    pos += 1
                    if not q.is_zero():
                        _rep_add(F, ring, rep, reps[j], factor_poly=-q)
            rep = {k: p for k, p in rep.items() if not p.is_zero()}
        reduced.append(r)
        red_reps.append(rep)
    order = sorted(range(len(reduced)),
                   key=lambda i: module.key(*reduced[i].lead()[0]),
                   reverse=True)
    reduced = [reduced[i] for i in order]
    red_reps = [red_reps[i] for i in order] if track else None

    return GroebnerData(reduced, red_reps, list(gens), module)


def module_syzygies(gens):
    """Generators of the first syzygy module of `gens` (Vecs in F^len).

    Computed by the graph trick: a Groebner basis of the module spanned
    by (g_i, e_i) inside F + F_s, with the F block dominant; the basis
    elements supported entirely in the e block are a Groebner basis of
    the syzygy module (elimination theorem for submodules).
    """
    module = gens[0].module
    ring = module.ring
    rank = module.rank
    s = len(gens)
    gen_shifts = tuple(g.degree() if not g.is_zero() else 0 for g in gens)
    GM = FreeModule(ring, rank + s, module.shifts + gen_shifts)
    work = []
    for i, g in enumerate(gens):
        d = {key: c for key, c in g.terms}
        d[(rank + i, ring.zero_exp)] = ring.field.one
        work.append(GM.from_dict(d))
    data = module_buchberger(work)
    SF = FreeModule(ring, s, gen_shifts)
    out = []
    for b in data.basis:
        if b.lead()[0][0] >= rank:
            # the order eliminates the F block: lead there means no F part
            out.append(SF.from_dict({(comp - rank, e): c
                                     for (comp, e), c in b.terms}))
    return out


def module_lift(f, gens, gb_data=None):
    """Coefficients c with f = sum c_i * gens_i; NotAMember otherwise."""
    if gb_data is None:
        gb_data = module_buchberger(gens, track_reps=True)
    r, quots = vec_nf(f, gb_data.basis, track=True)
    if not r.is_zero():
        raise NotAMember("vector is not in the submodule")
    ring = f.module.ring
    coeffs = {}
    for idx, q in enumerate(quots):
        if q.is_zero():
            continue
        _rep_add(ring.field, ring, coeffs, gb_data.reps[idx], factor_poly=q)
    out = [coeffs.get(i, ring.zero) for i in range(len(gens))]
    return out
