"""Brute-force invariants by dense graded linear algebra only.

Every value the Gröbner engine produces is recomputed here from raw
coordinate matrices: graded pieces are spanned by monomial multiples of
the generators and everything reduces to rank/kernel computations over
F_p.  Nothing in this module touches the Gröbner machinery - that
independence is the point - so it is slow and restricted to desk-scale
inputs (n <= 4, degrees <= 12 in the test suite).
"""

import numpy as np

from . import linalg
from .errors import ParameterError
from .invariants import BettiTable
from .ring import RingContext, monomials_of_degree


class GradedPieceBasis:
    """Ordered monomial basis of S_d (descending in the ring's order)."""

    __slots__ = ("degree", "monomials", "index")

    def __init__(self, ring: RingContext, degree: int):
        self.degree = degree
        self.monomials = monomials_of_degree(ring.n, degree, ring.order.kind)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def row_of(self, f, p, mult=None):
        """Dense coordinates of f (optionally times a monomial)."""
        row = [0] * len(self.monomials)
        for exps, c in f.terms:
            if mult is not None:
                exps = tuple(a + b for a, b in zip(exps, mult))
            row[self.index[exps]] = (row[self.index[exps]] + c) % p
        return row


def _ideal_piece_rows(ideal, d, basis):
    """Rows spanning I_d: all monomial multiples of the generators."""
    ring = ideal.ring
    p = ring.field.p
    rows = []
    for f in ideal.generators:
        df = f.homogeneous_degree()
        if df > d:
            continue
        for mult in monomials_of_degree(ring.n, d - df, ring.order.kind):
            rows.append(basis.row_of(f, p, mult))
    return rows


def hf_bruteforce(ideal, d: int) -> int:
    """dim (S/I)_d = dim S_d - rank of the generator-multiple matrix."""
    if d < 0:
        raise ParameterError(f"degree must be >= 0, got {d}")
    ring = ideal.ring
    basis = GradedPieceBasis(ring, d)
    rows = _ideal_piece_rows(ideal, d, basis)
    rk = linalg.rank(linalg.as_matrix(rows, len(basis)), ring.field.p) if rows else 0
    return len(basis) - rk


class _QuotientPiece:
    """(S/I)_d in coordinates: RREF of I_d plus the non-pivot monomials."""

    def __init__(self, ideal, d):
        ring = ideal.ring
        self.p = ring.field.p
        self.basis = GradedPieceBasis(ring, d)
        rows = _ideal_piece_rows(ideal, d, self.basis)
        self.rref, _, self.pivots = linalg.rref(
            linalg.as_matrix(rows, len(self.basis)), self.p
        )
        pivset = set(self.pivots)
        self.free_cols = [c for c in range(len(self.basis)) if c not in pivset]

    @property
    def dim(self):
        return len(self.free_cols)

    def project(self, row):
        """Quotient coordinates of a dense S_d row (reduce, keep free cols)."""
        v = np.array(row, dtype=np.int64) % self.p
        for k, pc in enumerate(self.pivots):
            c = int(v[pc])
            if c:
                v = (v - c * self.rref[k]) % self.p
        return [int(v[c]) for c in self.free_cols]

    def lift_monomials(self):
        """Monomials representing the free coordinates."""
        return [self.basis.monomials[c] for c in self.free_cols]


def _module_unknowns(ring, shifts, e):
    """Coordinates of (⊕_j S(-δ_j))_e as (slot, monomial) pairs."""
    out = []
    for j, dj in enumerate(shifts):
        if e >= dj:
            for m in monomials_of_degree(ring.n, e - dj, ring.order.kind):
                out.append((j, m))
    return out


def syzygies_bruteforce(ideal, degree_bound: int):
    """Per-degree bases of syzygies of the generator sequence.

    Returns {e: [vector, ...]} where each vector is a tuple of
    polynomials (a_1..a_s) with sum(a_j f_j) = 0 exactly.
    """
    ring = ideal.ring
    p = ring.field.p
    gens = ideal.generators
    out = {}
    if not gens:
        return out
    degs = [f.homogeneous_degree() for f in gens]
    if degree_bound < max(degs):
        raise ParameterError("degree_bound below the maximal generator degree")
    for e in range(min(degs), degree_bound + 1):
        unknowns = _module_unknowns(ring, degs, e)
        if not unknowns:
            continue
        target = GradedPieceBasis(ring, e)
        rows = []
        for j, mult in unknowns:
            rows.append(target.row_of(gens[j], p, mult))
        mat = linalg.as_matrix(rows, len(target)).T  # columns = unknowns
        ns = linalg.nullspace(mat, p)
        vectors = []
        for k in range(ns.shape[1]):
            coeffs = [dict() for _ in gens]
            for idx, (j, m) in enumerate(unknowns):
                c = int(ns[idx, k])
                if c:
                    coeffs[j][m] = c
            vectors.append(tuple(ring._from_dict(d) for d in coeffs))
        out[e] = vectors
    return out


def tangent_bruteforce(ideal, degree_bound: int) -> int:
    """dim Hom(I, S/I)_0 by the syzygy-lift criterion, one kernel rank.

    Unknowns are quotient classes per generator; each brute-force syzygy
    of degree <= degree_bound contributes the linear condition that the
    generator images annihilate it modulo I.
    """
    ring = ideal.ring
    gens = ideal.generators
    if not gens:
        return 0
    p = ring.field.p
    degs = [f.homogeneous_degree() for f in gens]
    quotient = {d: _QuotientPiece(ideal, d) for d in sorted(set(degs))}
    unknowns = []
    for j, d in enumerate(degs):
        for m in quotient[d].lift_monomials():
            unknowns.append((j, m))
    if not unknowns:
        return 0
    syz = syzygies_bruteforce(ideal, degree_bound)
    rows = []
    for e in sorted(syz):
        target = _QuotientPiece(ideal, e)
        if target.dim == 0 or not syz[e]:
            continue
        sbasis = GradedPieceBasis(ring, e)
        for vec in syz[e]:
            cols = []
            for j, m in unknowns:
                f = vec[j]
                if f.is_zero():
                    cols.append([0] * target.dim)
                else:
                    cols.append(target.project(sbasis.row_of(f, p, m)))
            block = np.array(cols, dtype=np.int64).T
            if block.size:
                rows.append(block)
    if not rows:
        return len(unknowns)
    mat = np.vstack(rows)
    return len(unknowns) - linalg.rank(mat, p)


def betti_bruteforce(ideal, max_step: int, degree_bound: int) -> BettiTable:
    """Graded Betti numbers from iterated brute-force syzygy modules.

    beta_{i,j} counts degree-j kernel elements independent of the
    monomial multiples of lower-degree ones (Nakayama by rank); the
    chosen representatives feed the next homological level.
    """
    ring = ideal.ring
    p = ring.field.p
    entries = {}
    gens = list(ideal.generators)
    if not gens:
        return BettiTable({})

    # level 0: minimal generators of the ideal among monomial multiples
    degs = sorted({f.homogeneous_degree() for f in gens})
    chosen, chosen_degs = [], []
    for e in range(min(degs), degree_bound + 1):
        basis = GradedPieceBasis(ring, e)
        rows = []
        for g, dg in zip(chosen, chosen_degs):
            for mult in monomials_of_degree(ring.n, e - dg, ring.order.kind):
                rows.append(basis.row_of(g, p, mult))
        nbase = len(rows)
        cands = [f for f in gens if f.homogeneous_degree() == e]
        for f in cands:
            rows.append(basis.row_of(f, p))
        if not rows:
            continue
        keep = set(linalg.greedy_independent_rows(linalg.as_matrix(rows, len(basis)), p))
        new = [f for k, f in enumerate(cands) if nbase + k in keep]
        if new:
            entries[(0, e)] = len(new)
            chosen.extend(new)
            chosen_degs.extend([e] * len(new))

    level_vectors = [(f,) for f in chosen]
    level_shifts = (0,)
    vec_degs = list(chosen_degs)

    for step in range(1, max_step + 1):
        if not level_vectors:
            break
        shifts = tuple(vec_degs)
        kernel_by_degree = {}
        for e in range(min(vec_degs, default=0), degree_bound + 1):
            unknowns = _module_unknowns(ring, shifts, e)
            if not unknowns:
                continue
            # target: one block of S_{e - s} per ambient component
            blocks = [GradedPieceBasis(ring, e - s) if e >= s else None for s in level_shifts]
            width = sum(len(b) for b in blocks if b is not None)
            rows = []
            for j, mult in unknowns:
                row = []
                vec = level_vectors[j]
                for comp, b in enumerate(blocks):
                    if b is None:
                        continue
                    f = vec[comp]
                    row.extend(b.row_of(f, p, mult) if not f.is_zero() else [0] * len(b))
                rows.append(row)
            mat = linalg.as_matrix(rows, width).T
            ns = linalg.nullspace(mat, p)
            cols = [ns[:, k] for k in range(ns.shape[1])]
            kernel_by_degree[e] = (unknowns, cols)

        next_vectors, next_degs = [], []
        for e in sorted(kernel_by_degree):
            unknowns, cols = kernel_by_degree[e]
            if not cols:
                continue
            prev = kernel_by_degree.get(e - 1)
            rows = []
            if prev is not None and prev[1]:
                prev_unknowns, prev_cols = prev
                index = {u: i for i, u in enumerate(unknowns)}
                for col in prev_cols:
                    for v in range(ring.n):
                        row = [0] * len(unknowns)
                        for idx, (j, m) in enumerate(prev_unknowns):
                            c = int(col[idx])
                            if c:
                                m2 = tuple(a + (1 if t == v else 0) for t, a in enumerate(m))
                                row[index[(j, m2)]] = (row[index[(j, m2)]] + c) % p
                        rows.append(row)
            nbase = len(rows)
            for col in cols:
                rows.append([int(x) for x in col])
            keep = set(
                linalg.greedy_independent_rows(linalg.as_matrix(rows, len(unknowns)), p)
            )
            new_cols = [col for k, col in enumerate(cols) if nbase + k in keep]
            if new_cols:
                entries[(step, e)] = len(new_cols)
                for col in new_cols:
                    coeffs = [dict() for _ in level_vectors]
                    for idx, (j, m) in enumerate(unknowns):
                        c = int(col[idx])
                        if c:
                            coeffs[j][m] = c
                    next_vectors.append(tuple(ring._from_dict(d) for d in coeffs))
                    next_degs.append(e)
        level_shifts = shifts
        level_vectors, vec_degs = next_vectors, next_degs

    return BettiTable(entries)
