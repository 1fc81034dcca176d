"""The commutative algebra of matrix-entry coordinates on the space of
N-dimensional representations of a surface group, with its quasi-Poisson
bracket.

An element is a fraction: a sparse polynomial in the entry symbols
x^u_{ij} of the generator matrices, over a product of generator
determinants with nonnegative exponents.  Inverse generators enter
through adjugate/determinant, never through polynomial division, and
equality is decided by cross-multiplication.

The bracket is pinned on generator entries by the surface double bracket,

    {a_ij, b_kl} = sum  dbl(a,b)^(1)_kj dbl(a,b)^(2)_il,

and extended to everything else as a derivation in each slot; the
determinant denominators ride along via {1/d, -} = -(1/d^2) {d, -}.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .algebra import AlgElem, Tensor2
from .dbracket import SurfaceDoubleBracket
from .matrices import Matrix, mat_inv
from .poly import Poly, Var
from .words import SurfaceSignature, Word

ElemLike = Union[AlgElem, Word]
LieMatrix = Sequence[Sequence[Fraction]]

# an entry symbol is keyed by (generator index, row, col), zero-based
EntryVar = tuple[int, int, int]


def _as_elem(x: ElemLike) -> AlgElem:
    return x if isinstance(x, AlgElem) else AlgElem.from_word(x)


class RepElem:
    """num / prod_u det(x^u)^den[u], bound to its parent algebra."""

    __slots__ = ("alg", "num", "den")

    def __init__(self, alg: "RepAlgebra", num: Poly, den: tuple[int, ...]):
        if num.is_zero():
            den = alg.zero_den
        self.alg = alg
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _aligned(self, other: "RepElem") -> tuple[Poly, Poly, tuple[int, ...]]:
        den = tuple(max(a, b) for a, b in zip(self.den, other.den))
        return (
            self.alg.raise_den(self.num, self.den, den),
            self.alg.raise_den(other.num, other.den, den),
            den,
        )

    def __add__(self, other: "RepElem") -> "RepElem":
        n1, n2, den = self._aligned(other)
        return RepElem(self.alg, n1 + n2, den)

    def __sub__(self, other: "RepElem") -> "RepElem":
        n1, n2, den = self._aligned(other)
        return RepElem(self.alg, n1 - n2, den)

    def __neg__(self) -> "RepElem":
        return RepElem(self.alg, -self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, RepElem):
            return RepElem(self.alg, self.num * other.num,
                           tuple(a + b for a, b in zip(self.den, other.den)))
        return self.scale(other)

    def __rmul__(self, other) -> "RepElem":
        return self.scale(other)

    def scale(self, k) -> "RepElem":
        return RepElem(self.alg, self.num.scale(k), self.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepElem):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        n1, n2, _ = self._aligned(other)
        return n1 == n2

    def __repr__(self) -> str:
        return f"RepElem(num={self.num!r}, den={self.den!r})"


class RepAlgebra:
    """Coordinate algebra of N-dimensional representations for one surface,
    carrying the quasi-Poisson bracket and the group/Lie-algebra actions."""

    def __init__(self, sig: SurfaceSignature, dim: int,
                 dbl: Optional[SurfaceDoubleBracket] = None):
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        self.sig = sig
        self.dim = dim
        self.dbl = dbl if dbl is not None else SurfaceDoubleBracket(sig)
        self.zero_den = (0,) * sig.rank
        self._det: dict[int, Poly] = {}
        self._adj: dict[int, tuple[tuple[Poly, ...], ...]] = {}
        self._word_matrix: dict[Word, tuple[tuple[RepElem, ...], ...]] = {}
        self._gen_bracket: dict[tuple[EntryVar, EntryVar], RepElem] = {}

    # --- element constructors ----------------------------------------

    def zero(self) -> RepElem:
        return RepElem(self, Poly.zero(), self.zero_den)

    def scalar(self, k) -> RepElem:
        return RepElem(self, Poly.const(k), self.zero_den)

    def one(self) -> RepElem:
        return self.scalar(1)

    def sym(self, u: int, i: int, j: int) -> RepElem:
        """Entry symbol x^u_{ij}, zero-based indices."""
        n, N = self.sig.rank, self.dim
        if not (0 <= u < n and 0 <= i < N and 0 <= j < N):
            raise IndexError(f"entry symbol out of range: ({u}, {i}, {j})")
        return RepElem(self, Poly.var((u, i, j)), self.zero_den)

    def det_inverse(self, u: int) -> RepElem:
        den = list(self.zero_den)
        den[u] = 1
        return RepElem(self, Poly.const(1), tuple(den))

    # --- determinant bookkeeping --------------------------------------

    def det_poly(self, u: int) -> Poly:
        hit = self._det.get(u)
        if hit is None:
            hit = _sym_det([[Poly.var((u, i, j)) for j in range(self.dim)]
                            for i in range(self.dim)])
            self._det[u] = hit
        return hit

    def adj_poly(self, u: int) -> tuple[tuple[Poly, ...], ...]:
        hit = self._adj.get(u)
        if hit is None:
            hit = _sym_adjugate([[Poly.var((u, i, j)) for j in range(self.dim)]
                                 for i in range(self.dim)])
            self._adj[u] = hit
        return hit

    def raise_den(self, num: Poly, frm: tuple[int, ...], to: tuple[int, ...]) -> Poly:
        for u, (a, b) in enumerate(zip(frm, to)):
            if b < a:
                raise ValueError("cannot lower a denominator exponent")
            for _ in range(b - a):
                num = num * self.det_poly(u)
        return num

    # --- entries and traces -------------------------------------------

    def word_matrix(self, w: Word) -> tuple[tuple[RepElem, ...], ...]:
        hit = self._word_matrix.get(w)
        if hit is not None:
            return hit
        N = self.dim
        if w.is_identity():
            out = tuple(tuple(self.scalar(1 if i == j else 0) for j in range(N))
                        for i in range(N))
        else:
            (u, e) = w.letters[0]
            head = self._letter_matrix(u, e)
            rest = Word(w.letters[1:], _reduced=True)
            if rest.is_identity():
                out = head
            else:
                tail = self.word_matrix(rest)
                out = tuple(
                    tuple(_dot(head, tail, i, j, N) for j in range(N))
                    for i in range(N)
                )
        self._word_matrix[w] = out
        return out

    def _letter_matrix(self, u: int, e: int) -> tuple[tuple[RepElem, ...], ...]:
        N = self.dim
        if e > 0:
            return tuple(tuple(self.sym(u, i, j) for j in range(N)) for i in range(N))
        adj = self.adj_poly(u)
        den = list(self.zero_den)
        den[u] = 1
        den = tuple(den)
        return tuple(tuple(RepElem(self, adj[i][j], den) for j in range(N))
                     for i in range(N))

    def entry(self, a: ElemLike, i: int, j: int) -> RepElem:
        """The (i, j) entry coordinate of a, one-based indices."""
        N = self.dim
        if not (1 <= i <= N and 1 <= j <= N):
            raise IndexError(f"entry index out of range for dim {N}: ({i}, {j})")
        out = self.zero()
        for w, c in _as_elem(a).items():
            out = out + self.word_matrix(w)[i - 1][j - 1].scale(c)
        return out

    def trace(self, a: ElemLike) -> RepElem:
        out = self.zero()
        for i in range(1, self.dim + 1):
            out = out + self.entry(a, i, i)
        return out

    def trace_cyclic(self, x) -> RepElem:
        """Trace of a linear combination of conjugacy classes."""
        out = self.zero()
        for cw, c in x.items():
            out = out + self.trace(cw.representative()).scale(c)
        return out

    # --- the bracket ----------------------------------------------------

    def variables(self, P: RepElem) -> list[EntryVar]:
        """Entry symbols P depends on: those in the numerator plus every
        entry of any generator appearing in the denominator."""
        out = set(P.num.variables())
        N = self.dim
        for u, k in enumerate(P.den):
            if k:
                out.update((u, i, j) for i in range(N) for j in range(N))
        return sorted(out)

    def d_dvar(self, P: RepElem, var: EntryVar) -> RepElem:
        """Partial derivative, treating det denominators by the chain rule."""
        u, i, j = var
        out = RepElem(self, P.num.diff(var), P.den)
        k = P.den[u]
        if k and not P.num.is_zero():
            # d(det^-k)/dx_ij = -k det^-(k+1) adj_ji
            den = list(P.den)
            den[u] += 1
            out = out + RepElem(self, P.num * self.adj_poly(u)[j][i] * Fraction(-k),
                                tuple(den))
        return out

    def gen_bracket(self, a: EntryVar, b: EntryVar) -> RepElem:
        """Bracket of two generator entry symbols, from the double-bracket
        table of the corresponding generator pair."""
        hit = self._gen_bracket.get((a, b))
        if hit is not None:
            return hit
        (u, i, j), (v, k, l) = a, b
        out = self.entry_pair_image(self.dbl.base(u, v), i, j, k, l)
        self._gen_bracket[(a, b)] = out
        return out

    def entry_pair_image(self, t: Tensor2, i: int, j: int, k: int, l: int) -> RepElem:
        """Send a tensor sum(c w1 (x) w2) to sum(c (w1)_kj (w2)_il); this is
        how a double bracket value becomes a bracket of entries.  Indices
        are zero-based here."""
        out = self.zero()
        for (w1, w2), c in t.items():
            out = out + (self.word_matrix(w1)[k][j] * self.word_matrix(w2)[i][l]).scale(c)
        return out

    def qp_bracket(self, P: RepElem, Q: RepElem) -> RepElem:
        """The quasi-Poisson bracket, extended from generator entries as a
        derivation in each slot (left-to-right over monomials)."""
        dP = [(a, self.d_dvar(P, a)) for a in self.variables(P)]
        dQ = [(b, self.d_dvar(Q, b)) for b in self.variables(Q)]
        parts = []
        for a, dPa in dP:
            if dPa.is_zero():
                continue
            for b, dQb in dQ:
                if dQb.is_zero():
                    continue
                parts.append(dPa * dQb * self.gen_bracket(a, b))
        return self.accumulate(parts)

    def accumulate(self, parts: Iterable[RepElem]) -> RepElem:
        """Sum many elements, aligning denominators once per distinct
        denominator instead of once per addition."""
        buckets: dict[tuple[int, ...], dict] = {}
        for part in parts:
            if part.is_zero():
                continue
            bucket = buckets.setdefault(part.den, {})
            for m, c in part.num.items():
                acc = bucket.get(m, 0) + c
                if acc:
                    bucket[m] = acc
                else:
                    del bucket[m]
        buckets = {den: terms for den, terms in buckets.items() if terms}
        if not buckets:
            return self.zero()
        target = tuple(max(den[u] for den in buckets) for u in range(self.sig.rank))
        total: dict = {}
        for den, terms in sorted(buckets.items()):
            raised = self.raise_den(Poly(terms), den, target)
            for m, c in raised.items():
                acc = total.get(m, 0) + c
                if acc:
                    total[m] = acc
                else:
                    del total[m]
        return RepElem(self, Poly(total), target)

    def qp_bracket_entries(self, a: ElemLike, i: int, j: int,
                           b: ElemLike, k: int, l: int) -> RepElem:
        """Alternative route for {a_ij, b_kl}: evaluate the double bracket of
        the group-algebra elements, then take entries.  One-based indices.
        Must agree with qp_bracket on the corresponding entry coordinates."""
        t = self.dbl(_as_elem(a), _as_elem(b))
        return self.entry_pair_image(t, i - 1, j - 1, k - 1, l - 1)

    # --- group and Lie algebra actions -----------------------------------

    def lie_value(self, w: LieMatrix, var: EntryVar) -> RepElem:
        """Action of w on one entry symbol: (x^u w)_ij - (w x^u)_ij."""
        u, i, j = var
        N = self.dim
        out = Poly.zero()
        for s in range(N):
            if w[s][j]:
                out = out + Poly.var((u, i, s)).scale(w[s][j])
            if w[i][s]:
                out = out - Poly.var((u, s, j)).scale(w[i][s])
        return RepElem(self, out, self.zero_den)

    def gl_action(self, w: LieMatrix, P: RepElem) -> RepElem:
        parts = []
        for var in self.variables(P):
            d = self.d_dvar(P, var)
            if not d.is_zero():
                parts.append(d * self.lie_value(w, var))
        return self.accumulate(parts)

    def elem_action(self, k: int, l: int, P: RepElem) -> RepElem:
        """Action of the elementary matrix with a single 1 at (k, l)."""
        w = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        w[k][l] = Fraction(1)
        return self.gl_action(w, P)

    def group_action(self, g: Matrix, P: RepElem) -> RepElem:
        """Conjugation automorphism: substitutes g^-1 x^u g for each x^u.
        Determinants are fixed, so the denominator rides along."""
        ginv = mat_inv(g)  # raises on singular g
        N = self.dim
        images: dict[Var, Poly] = {}
        for var in P.num.variables():
            u, i, j = var
            img = Poly.zero()
            for k in range(N):
                if not ginv[i][k]:
                    continue
                for l in range(N):
                    coeff = ginv[i][k] * g[l][j]
                    if coeff:
                        img = img + Poly.var((u, k, l)).scale(coeff)
            images[var] = img
        return RepElem(self, P.num.subs(images), P.den)

    def phi_action(self, P: RepElem, Q: RepElem, R: RepElem) -> RepElem:
        """The Cartan trivector acting on a triple: the cyclic-Jacobi defect
        of the bracket."""
        N = self.dim
        eP = {(k, l): self.elem_action(k, l, P) for k in range(N) for l in range(N)}
        eQ = {(k, l): self.elem_action(k, l, Q) for k in range(N) for l in range(N)}
        eR = {(k, l): self.elem_action(k, l, R) for k in range(N) for l in range(N)}
        parts = [(eP[t1] * eQ[t2] * eR[t3]).scale(c)
                 for (t1, t2, t3), c in cartan_trivector(N).items()]
        return self.accumulate(parts)

    # --- serialization ----------------------------------------------------

    def var_name(self, var: EntryVar) -> str:
        u, i, j = var
        return f"{self.sig.gen_name(u)}_{i + 1}_{j + 1}"

    def to_json(self, P: RepElem) -> dict:
        terms = []
        for mono, coeff in P.num.items():
            if mono:
                text = "*".join(
                    self.var_name(v) + (f"^{e}" if e != 1 else "") for v, e in mono
                )
            else:
                text = "1"
            terms.append({"coeff": str(coeff), "monomial": text})
        terms.sort(key=lambda t: t["monomial"])
        return {"den": list(P.den), "terms": terms}


ElemMatrix = tuple[int, int]  # elementary matrix, 1 at (row, col)


def cartan_trivector(dim: int) -> dict[tuple[ElemMatrix, ElemMatrix, ElemMatrix], Fraction]:
    """The skew invariant trivector dual to (u, v, w) -> tr(u [v, w]) under
    the trace pairing, expanded over elementary-matrix triples:
    sum over i,j,k of  -f_ij (x) f_jk (x) f_ki  +  f_jk (x) f_ij (x) f_ki."""
    out: dict = {}
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                for key, c in ((((i, j), (j, k), (k, i)), Fraction(-1)),
                               (((j, k), (i, j), (k, i)), Fraction(1))):
                    acc = out.get(key, 0) + c
                    if acc:
                        out[key] = acc
                    else:
                        del out[key]
    return out


def _dot(a, b, i: int, j: int, n: int) -> RepElem:
    out = a[i][0] * b[0][j]
    for k in range(1, n):
        out = out + a[i][k] * b[k][j]
    return out


def _sym_det(m: list[list[Poly]]) -> Poly:
    n = len(m)
    if n == 1:
        return m[0][0]
    out = Poly.zero()
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _sym_det(minor)
        out = out + term if j % 2 == 0 else out - term
    return out


def _sym_adjugate(m: list[list[Poly]]) -> tuple[tuple[Poly, ...], ...]:
    n = len(m)
    if n == 1:
        return ((Poly.const(1),),)
    adj = [[Poly.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [m[r][c] for c in range(n) if c != j]
                for r in range(n) if r != i
            ]
            cof = _sym_det(minor)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return tuple(tuple(row) for row in adj)
