"""Double and triple brackets on the group algebra of a surface group.

Two independent routes compute the surface double bracket: a generator
table extended by the derivation rules (fast default, class
SurfaceDoubleBracket) and the general pairing-to-bracket formula applied
to the skew pairing eta^s (dbl_from_pairing, the oracle).  The module
also provides the associated triple bracket, the canonical eight-term
triple bracket it must match for the quasi-Poisson property, the induced
single bracket, and the Goldman bracket on conjugacy classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from .algebra import AlgElem, Tensor2, Tensor3, m2, permute, tensor3
from .foxpairing import Pairing, SurfaceFoxPairing
from .words import CyclicWord, SurfaceSignature, Word, sample_word, trial_rng

ElemLike = Union[AlgElem, Word]


def _as_elem(x: ElemLike) -> AlgElem:
    return x if isinstance(x, AlgElem) else AlgElem.from_word(x)


def dbl_from_pairing(rho: Pairing, a: ElemLike, b: ElemLike) -> Tensor2:
    """Double bracket induced by a Fox pairing.

    On group-like arguments v, w this is sum_u c_u (w u^-1 v) (x) u over the
    expansion rho(v, w) = sum_u c_u u, extended bilinearly.  It is an honest
    double bracket exactly when rho is skew-symmetric.
    """
    a, b = _as_elem(a), _as_elem(b)
    out: dict = {}
    for v, cv in a.items():
        ev = AlgElem.from_word(v)
        for w, cw in b.items():
            val = rho(ev, AlgElem.from_word(w))
            cvw = cv * cw
            for u, cu in val.items():
                key = (w * u.inverse() * v, u)
                acc = out.get(key, 0) + cvw * cu
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
    return Tensor2(out)


def dbl_from_inner(e: ElemLike, a: ElemLike, b: ElemLike) -> Tensor2:
    """Closed form of the bracket of an inner pairing rho_e: for group-like
    a, b and e = sum_u c_u u it is
    sum_u c_u [ u^-1 (x) a u b + b u^-1 a (x) u - b u^-1 (x) a u - u^-1 a (x) u b ].
    """
    e, a, b = _as_elem(e), _as_elem(a), _as_elem(b)
    out: dict = {}
    for u, cu in e.items():
        ui = u.inverse()
        for v, cv in a.items():
            for w, cw in b.items():
                c = cu * cv * cw
                for key, coeff in (
                    ((ui, v * u * w), c),
                    ((w * ui * v, u), c),
                    ((w * ui, v * u), -c),
                    ((ui * v, u * w), -c),
                ):
                    acc = out.get(key, 0) + coeff
                    if acc:
                        out[key] = acc
                    else:
                        del out[key]
    return Tensor2(out)


# word-level outer/inner actions, used heavily by the recursion
def _outer_left(y: Word, t: Tensor2) -> Tensor2:
    return Tensor2({(y * k1, k2): c for (k1, k2), c in t.items()})


def _outer_right(t: Tensor2, y: Word) -> Tensor2:
    out: dict = {}
    for (k1, k2), c in t.items():
        key = (k1, k2 * y)
        acc = out.get(key, 0) + c
        if acc:
            out[key] = acc
        else:
            out.pop(key, None)
    return Tensor2(out)


def _inner_left(x: Word, t: Tensor2) -> Tensor2:
    # x * (a1 (x) a2) = a1 (x) x a2
    return Tensor2({(k1, x * k2): c for (k1, k2), c in t.items()})


def _inner_right(t: Tensor2, x: Word) -> Tensor2:
    # (a1 (x) a2) * x = a1 x (x) a2
    out: dict = {}
    for (k1, k2), c in t.items():
        key = (k1 * x, k2)
        acc = out.get(key, 0) + c
        if acc:
            out[key] = acc
        else:
            out.pop(key, None)
    return Tensor2(out)


class SurfaceDoubleBracket:
    """The surface double bracket, computed from its generator-pair table.

    The table stores the value on every ordered pair of positive generators;
    pairs above the diagonal come from the displayed values, pairs below from
    skew-symmetry.  Longer words are handled by the derivation rule in the
    second slot, its inner-action counterpart in the first slot, and the
    inverse-letter rules.  The memo dict only ever maps a word pair to its
    finished value, so concurrent readers are safe.
    """

    def __init__(self, sig: SurfaceSignature):
        self.sig = sig
        self._table: dict[tuple[int, int], Tensor2] = {}
        for i in range(sig.rank):
            for j in range(i, sig.rank):
                self._table[(i, j)] = self._display_value(i, j)
        for i in range(sig.rank):
            for j in range(i):
                self._table[(i, j)] = -permute(self._table[(j, i)], (2, 1))
        self._memo: dict[tuple[Word, Word], Tensor2] = {}

    def _display_value(self, i: int, j: int) -> Tensor2:
        sig = self.sig
        one = Word.identity()
        x, y = Word.generator(i), Word.generator(j)
        if i == j:
            sq = x * x
            if sig.letter_kind(i) == "q":
                return Tensor2({(one, sq): 1, (sq, one): -1})
            return Tensor2({(sq, one): 1, (one, sq): -1})
        if sig.is_handle_pair(i, j):
            return Tensor2({(one, x * y): 1, (y * x, one): 1, (x, y): -1, (y, x): 1})
        return Tensor2({(one, x * y): 1, (y * x, one): 1, (x, y): -1, (y, x): -1})

    def base(self, i: int, j: int) -> Tensor2:
        return self._table[(i, j)]

    def __call__(self, a: ElemLike, b: ElemLike) -> Tensor2:
        a, b = _as_elem(a), _as_elem(b)
        out = Tensor2.zero()
        for v, cv in a.items():
            for w, cw in b.items():
                out = out + self._words(v, w).scale(cv * cw)
        return out

    def _words(self, v: Word, w: Word) -> Tensor2:
        if v.is_identity() or w.is_identity():
            return Tensor2.zero()
        key = (v, w)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if len(v) > 1:
            x = Word.generator(*v.letters[0])
            rest = Word(v.letters[1:], _reduced=True)
            out = _inner_left(x, self._words(rest, w)) + _inner_right(self._words(x, w), rest)
        elif len(w) > 1:
            y = Word.generator(*w.letters[0])
            rest = Word(w.letters[1:], _reduced=True)
            out = _outer_left(y, self._words(v, rest)) + _outer_right(self._words(v, y), rest)
        else:
            out = self._letters(v, w)
        self._memo[key] = out
        return out

    def _letters(self, v: Word, w: Word) -> Tensor2:
        (i, ei), = v.letters
        (j, ej), = w.letters
        if ei < 0:
            t = self._words(v.inverse(), w)
            return -_inner_left(v, _inner_right(t, v))
        if ej < 0:
            t = self._words(v, w.inverse())
            return -_outer_left(w, _outer_right(t, w))
        return self._table[(i, j)]


def make_dbl_s(sig: SurfaceSignature) -> SurfaceDoubleBracket:
    return SurfaceDoubleBracket(sig)


def dbl_s_via_pairing(sig: SurfaceSignature, a: ElemLike, b: ElemLike) -> Tensor2:
    """Oracle route: the pairing-to-bracket formula applied to eta^s."""
    pairing = SurfaceFoxPairing(sig)
    return dbl_from_pairing(pairing.skew, a, b)


DoubleBracket = Callable[[ElemLike, ElemLike], Tensor2]


def _left_extend(dbl: DoubleBracket, x: AlgElem, t: Tensor2) -> Tensor3:
    """Apply dbl against the first factor of t, keep the second: the
    building block of the triple bracket."""
    out: dict = {}
    for (k1, k2), c in t.items():
        inner = dbl(x, AlgElem.from_word(k1))
        for (m1, m2), d in inner.items():
            key = (m1, m2, k2)
            acc = out.get(key, 0) + c * d
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return Tensor3(out)


def triple(dbl: DoubleBracket, a: ElemLike, b: ElemLike, c: ElemLike) -> Tensor3:
    """Triple bracket of a double bracket: the cyclic sum
    sum_i P_312^i (dbl (x) id)(id (x) dbl) P_312^-i applied to a (x) b (x) c."""
    a, b, c = _as_elem(a), _as_elem(b), _as_elem(c)
    t0 = _left_extend(dbl, a, dbl(b, c))
    t1 = permute(_left_extend(dbl, b, dbl(c, a)), (3, 1, 2))
    t2 = permute(_left_extend(dbl, c, dbl(a, b)), (2, 3, 1))
    return t0 + t1 + t2


def triple_e(a: ElemLike, b: ElemLike, c: ElemLike) -> Tensor3:
    """The canonical triple bracket of the exchange derivation
    a -> a (x) 1 - 1 (x) a; a quasi-Poisson double bracket must reproduce it."""
    a, b, c = _as_elem(a), _as_elem(b), _as_elem(c)
    one = AlgElem.one()
    return (
        tensor3(a, one, b * c)
        + tensor3(one, a * b, c)
        + tensor3(c * a, b, one)
        + tensor3(c, a, b)
        - tensor3(one, a, b * c)
        - tensor3(a, b, c)
        - tensor3(c * a, one, b)
        - tensor3(c, a * b, one)
    )


def angle(dbl: DoubleBracket, a: ElemLike, b: ElemLike) -> AlgElem:
    """The induced single bracket: multiply the two output factors."""
    return m2(dbl(_as_elem(a), _as_elem(b)))


class CyclicAlgElem:
    """Rational linear combination of conjugacy classes."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[CyclicWord, Fraction] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @staticmethod
    def zero() -> "CyclicAlgElem":
        return CyclicAlgElem()

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return self.terms.items()

    def __add__(self, other: "CyclicAlgElem") -> "CyclicAlgElem":
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k, 0) + c
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
        return CyclicAlgElem(out)

    def __sub__(self, other: "CyclicAlgElem") -> "CyclicAlgElem":
        return self + other.scale(-1)

    def scale(self, k) -> "CyclicAlgElem":
        k = Fraction(k)
        if not k:
            return CyclicAlgElem.zero()
        return CyclicAlgElem({w: k * c for w, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclicAlgElem) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"CyclicAlgElem({self.terms!r})"


def project_cyclic(x: AlgElem) -> CyclicAlgElem:
    """Quotient map onto conjugacy classes (kills commutators)."""
    out: dict[CyclicWord, Fraction] = {}
    for w, c in x.items():
        key = CyclicWord.of(w)
        acc = out.get(key, 0) + c
        if acc:
            out[key] = acc
        else:
            out.pop(key, None)
    return CyclicAlgElem(out)


def goldman(dbl_s: DoubleBracket, a: CyclicWord, b: CyclicWord) -> CyclicAlgElem:
    """Goldman bracket of two free homotopy classes: half the projected
    single bracket of any representatives."""
    val = angle(dbl_s, a.representative(), b.representative())
    return project_cyclic(val).scale(Fraction(1, 2))


def moment_power_rhs(mu: Word, a: Word, m: int) -> Tensor2:
    """The double bracket a moment element must give against a, for the m-th
    power of the element:  sigma_{0,m} + sigma_{m,0} + 2 sum_{0<k<m}
    sigma_{k,m-k}, where sigma_{k,m-k} = a mu^k (x) mu^{m-k} - mu^k (x) mu^{m-k} a."""
    if m < 1:
        raise ValueError("power must be >= 1")
    out = Tensor2.zero()
    for k in range(m + 1):
        weight = 1 if k in (0, m) else 2
        muk, murest = mu ** k, mu ** (m - k)
        out = out + Tensor2.pure(a * muk, murest, weight) - Tensor2.pure(muk, murest * a, weight)
    return out


def moment_rhs(mu: Word, a: Word) -> Tensor2:
    """a (x) mu + a mu (x) 1 - mu (x) a - 1 (x) mu a, the defining shape."""
    return moment_power_rhs(mu, a, 1)


def moment_neg_power_rhs(mu: Word, a: Word, m: int) -> Tensor2:
    """Negative powers flip the overall sign and run over the inverse."""
    return -moment_power_rhs(mu.inverse(), a, m)


@dataclass
class QuasiPoissonReport:
    """Outcome of sampling-based verification that a double bracket is
    quasi-Poisson (its triple bracket matches the canonical one)."""

    ok: bool
    trials: int
    seed: int
    max_len: int
    witness: Optional[tuple[Word, Word, Word]] = None

    def to_dict(self, sig: SurfaceSignature) -> dict:
        from .words import format_word
        out = {
            "ok": self.ok,
            "trials": self.trials,
            "seed": self.seed,
            "max_len": self.max_len,
        }
        if self.witness is not None:
            out["witness"] = [format_word(w, sig) for w in self.witness]
        return out


def is_quasi_poisson(dbl: DoubleBracket, sig: SurfaceSignature, trials: int,
                     seed: int, max_len: int = 4) -> QuasiPoissonReport:
    """Sample random word triples and compare the triple bracket of dbl with
    the canonical one; stops at the first counterexample."""
    for k in range(trials):
        rng = trial_rng(seed, "qp", k)
        a = sample_word(rng, sig, max_len)
        b = sample_word(rng, sig, max_len)
        c = sample_word(rng, sig, max_len)
        if triple(dbl, a, b, c) != triple_e(a, b, c):
            return QuasiPoissonReport(False, k + 1, seed, max_len, (a, b, c))
    return QuasiPoissonReport(True, trials, seed, max_len)
