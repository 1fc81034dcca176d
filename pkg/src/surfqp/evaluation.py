"""Exact evaluation of coordinate functions at rational representation
points, and the fused bivector built from one standard two-form per handle
and one per annulus, whose bracket of functions must reproduce the
quasi-Poisson bracket (the independent evaluation-level oracle).

All vector fields in play are generated by elementary matrices acting on a
single generator slot from the left, the right, or by conjugation:

    L(f_rs) x_ij = x_ir delta_sj      (right translation x -> x f_rs)
    R(f_rs) x_ij = -delta_ir x_sj     (left translation  x -> -f_rs x)
    C = L + R                         (conjugation)

Every wedge term below pairs a field taking f_rs with one taking f_sr,
summed over all r, s: that is the contraction of dual bases of the matrix
Lie algebra under the trace form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .matrices import Matrix, mat, mat_det
from .poly import Poly
from .repalgebra import EntryVar, RepAlgebra, RepElem
from .words import SurfaceSignature, Word, trial_rng

L, R, CONJ = "L", "R", "C"


@dataclass(frozen=True)
class RepPoint:
    """A rational point of the representation space: one invertible matrix
    per generator, in the global generator order."""

    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        for m in self.matrices:
            if not mat_det(m):
                raise ValueError("representation point needs invertible matrices")

    @staticmethod
    def from_lists(rows: Sequence[Sequence[Sequence]]) -> "RepPoint":
        return RepPoint(tuple(mat(m) for m in rows))


def sample_rep_point(rng: random.Random, sig: SurfaceSignature, dim: int,
                     low: int = -3, high: int = 3) -> RepPoint:
    """Integer matrices with entries uniform on [low, high], resampled until
    invertible."""
    mats = []
    for _ in range(sig.rank):
        while True:
            m = mat([[rng.randint(low, high) for _ in range(dim)] for _ in range(dim)])
            if mat_det(m):
                break
        mats.append(m)
    return RepPoint(tuple(mats))


def evaluate(alg: RepAlgebra, P: RepElem, pt: RepPoint) -> Fraction:
    """Evaluate at a point; determinant denominators become exact divisions."""
    assign = {}
    for var in P.num.variables():
        u, i, j = var
        assign[var] = pt.matrices[u][i][j]
    value = P.num.evaluate(assign)
    for u, k in enumerate(P.den):
        if k:
            value /= mat_det(pt.matrices[u]) ** k
    return value


@dataclass(frozen=True)
class TaggedField:
    """A vector field acting on one generator slot by side L, R or C, with a
    fixed elementary matrix f_rs."""

    slot: int
    side: str
    r: int
    s: int


def field_on_entry(f: TaggedField, var: EntryVar, pt: RepPoint) -> Fraction:
    """Derivative of the entry coordinate x^u_ij along the field, at pt."""
    u, i, j = var
    if u != f.slot:
        return Fraction(0)
    m = pt.matrices[u]
    out = Fraction(0)
    if f.side in (L, CONJ) and f.s == j:
        out += m[i][f.r]
    if f.side in (R, CONJ) and f.r == i:
        out -= m[f.s][j]
    return out


def field_on_det(f: TaggedField, u: int, pt: RepPoint) -> Fraction:
    """Derivative of det(x^u): tr(f_rs) det for L, minus that for R, 0 for C."""
    if u != f.slot or f.side == CONJ or f.r != f.s:
        return Fraction(0)
    d = mat_det(pt.matrices[u])
    return d if f.side == L else -d


def field_apply(alg: RepAlgebra, f: TaggedField, P: RepElem, pt: RepPoint) -> Fraction:
    """Directional derivative of the function ev(P) at pt: product rule over
    each monomial, quotient rule over the determinant denominator."""
    assign = {var: pt.matrices[var[0]][var[1]][var[2]] for var in P.num.variables()}
    dvar = {var: field_on_entry(f, var, pt) for var in assign}
    num_val = Fraction(0)
    dnum_val = Fraction(0)
    for mono, coeff in P.num.items():
        total = coeff
        for var, e in mono:
            total *= assign[var] ** e
        num_val += total
        for idx, (var, e) in enumerate(mono):
            if not dvar[var]:
                continue
            part = coeff * e * assign[var] ** (e - 1) * dvar[var]
            for var2, e2 in mono[:idx] + mono[idx + 1:]:
                part *= assign[var2] ** e2
            dnum_val += part
    den_val = Fraction(1)
    dden_val = Fraction(0)
    for u, k in enumerate(P.den):
        if not k:
            continue
        d = mat_det(pt.matrices[u])
        den_val *= d ** k
        dd = field_on_det(f, u, pt)
        if dd:
            # derivative of d^k contributes k d^(k-1) dd times the other factors
            rest = Fraction(1)
            for v, kv in enumerate(P.den):
                if kv and v != u:
                    rest *= mat_det(pt.matrices[v]) ** kv
            dden_val += k * d ** (k - 1) * dd * rest
    return (dnum_val * den_val - num_val * dden_val) / den_val ** 2


def field_apply_sym(alg: RepAlgebra, f: TaggedField, P: RepElem) -> RepElem:
    """The same derivation applied symbolically, for whole-polynomial
    comparisons.  Routed through the algebra's partial derivatives."""
    parts = []
    for var in alg.variables(P):
        d = alg.d_dvar(P, var)
        if d.is_zero():
            continue
        u, i, j = var
        if u != f.slot:
            continue
        val = Poly.zero()
        if f.side in (L, CONJ) and f.s == j:
            val = val + Poly.var((u, i, f.r))
        if f.side in (R, CONJ) and f.r == i:
            val = val - Poly.var((u, f.s, j))
        if not val.is_zero():
            parts.append(d * RepElem(alg, val, alg.zero_den))
    return alg.accumulate(parts)


@dataclass(frozen=True)
class WedgeTerm:
    """coeff * sum_{r,s} V(f_rs) wedge W(f_sr) for single-slot sides V, W."""

    coeff: int
    v_slot: int
    v_side: str
    w_slot: int
    w_side: str


@dataclass(frozen=True)
class FusionBivector:
    """Wedge expansion of the fused bivector on a product of matrix groups."""

    sig: SurfaceSignature
    dim: int
    terms: tuple[WedgeTerm, ...]


def build_fusion_bivector(sig: SurfaceSignature, dim: int,
                          with_fusion_terms: bool = True) -> FusionBivector:
    """One double-slot bivector per handle, one single-slot bivector per
    annulus, fused left to right; each fusion step subtracts the
    conjugation-conjugation coupling between everything before and the new
    factor.  with_fusion_terms=False drops the couplings (for tests that
    need the wrong answer)."""
    terms: list[WedgeTerm] = []
    factors: list[tuple[int, ...]] = []
    for u in range(sig.genus):
        a, b = 2 * u, 2 * u + 1
        terms += [
            WedgeTerm(-1, a, L, b, R),
            WedgeTerm(-1, a, R, b, L),
            WedgeTerm(-1, a, R, b, R),
            WedgeTerm(+1, a, L, b, L),
            WedgeTerm(+1, a, L, a, R),
            WedgeTerm(-1, b, L, b, R),
        ]
        factors.append((a, b))
    for v in range(sig.punctures):
        z = 2 * sig.genus + v
        terms.append(WedgeTerm(+1, z, L, z, R))
        factors.append((z,))
    if with_fusion_terms:
        for k in range(1, len(factors)):
            earlier = [s for f in factors[:k] for s in f]
            for s1 in earlier:
                for s2 in factors[k]:
                    terms.append(WedgeTerm(-1, s1, CONJ, s2, CONJ))
    return FusionBivector(sig, dim, tuple(terms))


def bivector_bracket(alg: RepAlgebra, biv: FusionBivector, P: RepElem,
                     Q: RepElem, pt: RepPoint) -> Fraction:
    """Pointwise bracket <dP ^ dQ, bivector> by exact directional
    derivatives."""
    total = Fraction(0)
    N = alg.dim
    for term in biv.terms:
        for r in range(N):
            for s in range(N):
                v = TaggedField(term.v_slot, term.v_side, r, s)
                w = TaggedField(term.w_slot, term.w_side, s, r)
                vp = field_apply(alg, v, P, pt)
                wq = field_apply(alg, w, Q, pt)
                vq = field_apply(alg, v, Q, pt)
                wp = field_apply(alg, w, P, pt)
                total += term.coeff * (vp * wq - vq * wp)
    return total


def bivector_bracket_sym(alg: RepAlgebra, biv: FusionBivector, P: RepElem,
                         Q: RepElem) -> RepElem:
    """Symbolic version of the bivector bracket, for outright polynomial
    equality with the quasi-Poisson bracket."""
    parts = []
    N = alg.dim
    for term in biv.terms:
        for r in range(N):
            for s in range(N):
                v = TaggedField(term.v_slot, term.v_side, r, s)
                w = TaggedField(term.w_slot, term.w_side, s, r)
                vp = field_apply_sym(alg, v, P)
                wq = field_apply_sym(alg, w, Q)
                vq = field_apply_sym(alg, v, Q)
                wp = field_apply_sym(alg, w, P)
                parts.append((vp * wq - vq * wp).scale(term.coeff))
    return alg.accumulate(parts)


@dataclass
class AksmReport:
    """Outcome of comparing the derivation-rule bracket with the fused
    bivector bracket at sampled points."""

    ok: bool
    points: int
    pairs: int
    seed: int
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {"ok": self.ok, "points": self.points, "pairs": self.pairs, "seed": self.seed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def compare_constructions(sig: SurfaceSignature, dim: int, trials: int, seed: int,
                          extra_words: Iterable[tuple[Word, Word]] = (),
                          biv: Optional[FusionBivector] = None) -> AksmReport:
    """At `trials` random rational points, compare the two brackets on every
    ordered generator-entry pair, plus entries of any supplied word pairs."""
    from .words import format_word

    alg = RepAlgebra(sig, dim)
    biv = biv if biv is not None else build_fusion_bivector(sig, dim)
    coords = [(Word.generator(u), i, j)
              for u in range(sig.rank) for i in range(1, dim + 1) for j in range(1, dim + 1)]
    for (wa, wb) in extra_words:
        coords.append((wa, 1, dim))
        coords.append((wb, dim, 1))
    points = [sample_rep_point(trial_rng(seed, "aksm", k), sig, dim) for k in range(trials)]
    pair_count = 0
    for (wa, ia, ja) in coords:
        Pa = alg.entry(wa, ia, ja)
        for (wb, ib, jb) in coords:
            Pb = alg.entry(wb, ib, jb)
            pair_count += 1
            bracket = alg.qp_bracket(Pa, Pb)
            for k, pt in enumerate(points):
                lhs = evaluate(alg, bracket, pt)
                rhs = bivector_bracket(alg, biv, Pa, Pb, pt)
                if lhs != rhs:
                    return AksmReport(False, k + 1, pair_count, seed, witness={
                        "point_index": k,
                        "point": [[[str(x) for x in row] for row in m] for m in pt.matrices],
                        "left": [format_word(wa, sig), ia, ja],
                        "right": [format_word(wb, sig), ib, jb],
                        "bracket_value": str(lhs),
                        "bivector_value": str(rhs),
                    })
    return AksmReport(True, trials, pair_count, seed)
