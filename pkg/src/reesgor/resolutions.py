"""Minimal graded free resolutions, Ext against the dualizing module, and
finite-module invariants (length, minimal generators, annihilator, socle).

Modules are subquotients (im gens)/(im rels) of a graded free module.
Resolutions are built by iterated syzygies; after each syzygy step the new
differential is minimalized by pivoting away unit (degree-zero) entries,
so every stored differential has all entries in the irrelevant ideal.
"""

from .errors import NotFiniteLength, ResourceExceeded
from .groebner import groebner_basis
from .hilbert import (INFINITE, dimension_from_numerator, finite_length,
                      hilbert_numerator, upoly_eval_one)
from .idealops import intersect as intersect_ideals
from .modules import FreeModule, Vec, module_buchberger, module_syzygies, vec_nf
from .polys import _exp_div, _exp_mul


def _column_entry(vec, comp):
    d = {e: c for (cc, e), c in vec.terms if cc == comp}
    return vec.module.ring.from_dict(d)


def _drop_component(vecs, comp, new_module):
    out = []
    for v in vecs:
        d = {}
        for (cc, e), c in v.terms:
            if cc == comp:
                continue
            d[(cc - 1 if cc > comp else cc, e)] = c
        out.append(new_module.from_dict(d))
    return out


def _unit_entry(vec):
    """(component, coeff) of a nonzero constant entry, or None."""
    zero_exp = vec.module.ring.zero_exp
    for (comp, e), c in vec.terms:
        if e == zero_exp:
            return comp, c
    return None


def minimalize_step(prev_cols, s_cols):
    """Pivot unit entries out of the differential s_cols : F_{k+1} -> F_k.

    prev_cols are the columns of d_k (generators of F_k's target image);
    a unit entry (i, c) lets us delete generator i of F_k and column c.
    Returns the reduced (prev_cols, s_cols).
    """
    prev_cols = list(prev_cols)
    s_cols = list(s_cols)
    while True:
        hit = None
        for c, col in enumerate(s_cols):
            u = _unit_entry(col)
            if u is not None:
                hit = (c, u[0], u[1])
                break
        if hit is None:
            break
        c, i, u = hit
        ring = s_cols[0].module.ring
        F = s_cols[0].module
        pivot = s_cols[c]
        inv = ring.field.inv(u)
        new_cols = []
        for c2, col in enumerate(s_cols):
            if c2 == c:
                continue
            alpha = _column_entry(col, i)
            if not alpha.is_zero():
                col = col - pivot.mul_poly(alpha.scale(inv))
            new_cols.append(col)
        del prev_cols[i]
        new_shifts = F.shifts[:i] + F.shifts[i + 1:]
        newF = FreeModule(ring, F.rank - 1, new_shifts)
        s_cols = [v for v in _drop_component(new_cols, i, newF)
                  if not v.is_zero()]
        if not s_cols:
            break
    return prev_cols, s_cols


class GradedResolution:
    """Chain F_0 <- F_1 <- ... with minimal graded differentials."""

    def __init__(self, ring, f0_shifts, diffs):
        self.ring = ring
        self.f0_shifts = tuple(f0_shifts)
        self.diffs = diffs  # diffs[k]: columns of d_{k+1} as Vecs in F_k

    @property
    def pd(self):
        return len(self.diffs)

    def betti(self):
        """Ranks (b_0, b_1, ..., b_pd)."""
        out = [len(self.f0_shifts)]
        for cols in self.diffs:
            out.append(len(cols))
        return out

    def shifts(self, k):
        if k == 0:
            return self.f0_shifts
        return tuple(v.degree() for v in self.diffs[k - 1])

    def matrix(self, k):
        """Entries of d_k as rows x cols of Poly (k >= 1)."""
        cols = self.diffs[k - 1]
        rank = len(self.shifts(k - 1))
        return [[_column_entry(col, i) for col in cols] for i in range(rank)]

    def is_minimal(self):
        return all(_unit_entry(col) is None
                   for cols in self.diffs for col in cols)

    def composes_to_zero(self):
        for k in range(1, self.pd):
            prev = self.diffs[k - 1]
            for col in self.diffs[k]:
                acc = None
                for (comp, e), c in col.terms:
                    term = prev[comp].mul_term(e, c)
                    acc = term if acc is None else acc + term
                if acc is not None and not acc.is_zero():
                    return False
        return True


def minimal_free_resolution(cols, f0, length_cap=None, minimalize_f0=False):
    """Minimal graded free resolution of coker(cols : F_1 -> f0).

    cols are Vecs in f0.  With minimalize_f0 the generators of the module
    itself are minimalized first (used for abstract presentations).
    """
    ring = f0.ring
    cols = [c for c in cols if not c.is_zero()]
    f0_shifts = list(f0.shifts)
    if minimalize_f0 and cols:
        virtual = list(range(len(f0_shifts)))
        vcols, cols = minimalize_step(virtual, cols)
        f0_shifts = [f0_shifts[i] for i in range(len(f0.shifts))
                     if i in set(vcols)]
    if not cols:
        return GradedResolution(ring, f0_shifts, [])
    diffs = [cols]
    while True:
        if length_cap is not None and len(diffs) > length_cap:
            raise ResourceExceeded("resolution length cap exceeded")
        syz = module_syzygies(diffs[-1])
        prev, syz = minimalize_step(diffs[-1], syz)
        diffs[-1] = prev
        if not prev:
            # the whole step died: previous module was free
            diffs.pop()
            break
        if not syz:
            break
        diffs.append(syz)
    return GradedResolution(ring, f0_shifts, diffs)


class ModulePresentation:
    """Graded subquotient (im gens)/(im rels) of a free module."""

    def __init__(self, ambient, gens, rels):
        self.ambient = ambient
        self.gens = list(gens)
        self.rels = [r for r in rels if not r.is_zero()]
        self._free_pres = None
        self._resolution = None

    @classmethod
    def cokernel(cls, ambient, rels):
        gens = [ambient.basis_vec(i) for i in range(ambient.rank)]
        return cls(ambient, gens, rels)

    def free_presentation(self):
        """(F0, presentation columns) with self = coker(cols : F1 -> F0)."""
        if self._free_pres is not None:
            return self._free_pres
        ring = self.ambient.ring
        s = len(self.gens)
        shifts = tuple(g.degree() if not g.is_zero() else 0 for g in self.gens)
        f0 = FreeModule(ring, s, shifts)
        if s == 0:
            self._free_pres = (f0, [])
            return self._free_pres
        all_cols = self.gens + self.rels
        if all(v.is_zero() for v in all_cols):
            syz = []
            cols = [f0.basis_vec(i) for i, g in enumerate(self.gens)
                    if g.is_zero()]
        else:
            syz = module_syzygies(all_cols)
            cols = []
            for v in syz:
                d = {}
                for (comp, e), c in v.terms:
                    if comp < s:
                        d[(comp, e)] = c
                w = f0.from_dict(d)
                if not w.is_zero():
                    cols.append(w)
        self._free_pres = (f0, cols)
        return self._free_pres

    def resolution(self, length_cap=None):
        if self._resolution is None:
            f0, cols = self.free_presentation()
            self._resolution = minimal_free_resolution(
                cols, f0, length_cap=length_cap, minimalize_f0=True)
        return self._resolution

    def pd(self, length_cap=None):
        return self.resolution(length_cap).pd

    def _lead_data(self):
        f0, cols = self.free_presentation()
        ring = self.ambient.ring
        leads = [[] for _ in range(f0.rank)]
        if cols:
            data = module_buchberger(cols)
            for b in data.basis:
                (comp, e), _ = b.lead()
                leads[comp].append(e)
        return f0, leads

    def length(self):
        """k-dimension, or INFINITE."""
        f0, leads = self._lead_data()
        ring = self.ambient.ring
        total = 0
        for comp in range(f0.rank):
            num = hilbert_numerator(leads[comp], ring.weights)
            l = finite_length(num, ring.weights)
            if l == INFINITE:
                return INFINITE
            total += l
        return total

    def is_zero(self):
        return self.length() == 0

    def min_generators(self):
        """Number of minimal generators (graded Nakayama)."""
        f0, cols = self.free_presentation()
        if f0.rank == 0:
            return 0
        field = self.ambient.ring.field
        zero_exp = self.ambient.ring.zero_exp
        rows = []
        for col in cols:
            row = [field.zero] * f0.rank
            any_const = False
            for (comp, e), c in col.terms:
                if e == zero_exp:
                    row[comp] = c
                    any_const = True
            if any_const:
                rows.append(row)
        return f0.rank - _field_rank(field, rows)

    def annihilator_gens(self):
        """Generators of {f in P : f * self = 0}."""
        ring = self.ambient.ring
        result = None
        for g in self.gens:
            if g.is_zero():
                continue
            cols = [g] + self.rels
            syz = module_syzygies(cols)
            ann = []
            for v in syz:
                p = _column_entry_rep(v, 0)
                if not p.is_zero():
                    ann.append(p)
            ann = groebner_basis(ann) if ann else []
            result = ann if result is None else intersect_ideals(ring, result, ann)
        if result is None:
            return [ring.one]  # zero module
        return result

    def socle_dim(self):
        """Length of (0 :_M m) for finite-length M, by linear algebra.

        M has a finite standard-monomial basis; the socle is the joint
        kernel of the multiplication maps by the variables.
        """
        if self.length() == INFINITE:
            raise NotFiniteLength("socle needs a finite-length module")
        f0, cols = self.free_presentation()
        ring = self.ambient.ring
        field = ring.field
        if f0.rank == 0:
            return 0
        gb = module_buchberger(cols).basis if cols else []
        basis = _standard_module_basis(f0, gb)
        if not basis:
            return 0
        index = {be: i for i, be in enumerate(basis)}
        rows = []
        for k in range(ring.n):
            exp_k = tuple(1 if i == k else 0 for i in range(ring.n))
            for _ in basis:
                rows.append([field.zero] * len(basis))
            base = len(rows) - len(basis)
            for j, (comp, e) in enumerate(basis):
                shifted = f0.from_dict({(comp, _exp_mul(e, exp_k)): field.one})
                nf, _ = vec_nf(shifted, gb, track=False) if gb else (shifted, None)
                for (c2, e2), coeff in nf.terms:
                    rows[base + index[(c2, e2)]][j] = coeff
        # socle = kernel of the stacked multiplication matrix
        return len(basis) - _field_rank(field, rows)


def _standard_module_basis(f0, gb):
    """All (component, exponent) pairs outside the lead module (finite)."""
    ring = f0.ring
    n = ring.n
    leads = [[] for _ in range(f0.rank)]
    for b in gb:
        (comp, e), _ = b.lead()
        leads[comp].append(e)
    out = []
    for comp in range(f0.rank):
        L = leads[comp]
        bounds = []
        for i in range(n):
            pure = [e[i] for e in L
                    if all(e[j] == 0 for j in range(n) if j != i)]
            if not pure:
                raise NotFiniteLength("component has infinite colength")
            bounds.append(min(pure))

        def rec(i, exp):
            if i == n:
                t = tuple(exp)
                if not any(_exp_div(t, e) is not None for e in L):
                    out.append((comp, t))
                return
            for v in range(bounds[i]):
                rec(i + 1, exp + [v])

        rec(0, [])
    return out


def _column_entry_rep(vec, comp):
    d = {e: c for (cc, e), c in vec.terms if cc == comp}
    return vec.module.ring.from_dict(d)


def _field_rank(field, rows):
    if not rows:
        return 0
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    rank = 0
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        piv = None
        for rr in range(r, len(rows)):
            if rows[rr][col] != field.zero:
                piv = rr
                break
        if piv is None:
            col += 1
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = [field.mul(x, inv) for x in rows[r]]
        for rr in range(len(rows)):
            if rr != r and rows[rr][col] != field.zero:
                f = rows[rr][col]
                rows[rr] = [field.sub(a, field.mul(f, b))
                            for a, b in zip(rows[rr], rows[r])]
        rank += 1
        r += 1
        col += 1
    return rank


def resolve_quotient_ring(ring, ideal_gens, length_cap=None):
    """Minimal free resolution of P/(ideal_gens) as a P-module."""
    f0 = FreeModule(ring, 1, (0,))
    gb = groebner_basis(ideal_gens) if ideal_gens else []
    cols = [f0.from_poly_list([(0, g)]) for g in gb]
    return minimal_free_resolution(cols, f0, length_cap=length_cap)


def dual_columns(resolution, k):
    """Columns of the dual map Hom(d_k, omega): F_{k-1}^* -> F_k^*.

    omega = P(-sum of weights); dual shifts are c - shift.  k between 1
    and pd; the columns are indexed by the basis of F_{k-1}^*.
    """
    ring = resolution.ring
    c = sum(ring.weights)
    src_shifts = resolution.shifts(k - 1)
    tgt_shifts = resolution.shifts(k)
    dualF = FreeModule(ring, len(tgt_shifts), tuple(c - s for s in tgt_shifts))
    cols = []
    mat = resolution.matrix(k)  # rows: F_{k-1}, cols: F_k
    for i in range(len(src_shifts)):
        col = dualF.from_poly_list([(j, mat[i][j])
                                    for j in range(len(tgt_shifts))])
        cols.append(col)
    return dualF, cols


def ext_dualizing(resolution, i):
    """Ext^i_P(M, omega_P) as a ModulePresentation, from M's resolution."""
    ring = resolution.ring
    c = sum(ring.weights)
    pd = resolution.pd
    if i < 0 or i > pd:
        empty = FreeModule(ring, 0, ())
        return ModulePresentation(empty, [], [])
    shifts_i = resolution.shifts(i)
    dualF = FreeModule(ring, len(shifts_i), tuple(c - s for s in shifts_i))
    if i < pd:
        _, out_cols = dual_columns(resolution, i + 1)
        kernel = module_syzygies(out_cols)
        # kernel vectors are coefficient vectors over the dual basis of F_i
        gens = []
        for v in kernel:
            d = {}
            for (comp, e), cc in v.terms:
                d[(comp, e)] = cc
            gens.append(dualF.from_dict(d))
    else:
        gens = [dualF.basis_vec(j) for j in range(dualF.rank)]
    if i >= 1:
        _, img_cols = dual_columns(resolution, i)
        rels = img_cols
    else:
        rels = []
    return ModulePresentation(dualF, gens, rels)
