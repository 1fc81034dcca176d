"""Reduced words in a free surface group.

The fundamental group of a compact oriented surface of genus g with m+1
boundary components is free on 2g+m generators, with the fixed order
p1 < q1 < ... < pg < qg < z1 < ... < zm.  A word is a tuple of letters
(generator index, exponent) with exponent +1 or -1, kept freely reduced.
Conjugacy classes are represented by the lexicographically minimal
rotation of the cyclic reduction, so conjugate words normalize to equal
objects.

String grammar (also used for serialization)::

    word := "1" | token (sep token)*
    sep  := "*" | whitespace
    token := gen ("^" signed-int)?
    gen  := ("p"|"q"|"z") positive-int
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Letter = tuple[int, int]


class WordParseError(ValueError):
    """Malformed word string; carries the offending position (0-based)."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


@dataclass(frozen=True)
class SurfaceSignature:
    """Genus and puncture count; fixes the generator alphabet and its order."""

    genus: int
    punctures: int

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise ValueError("genus and punctures must be nonnegative")

    @property
    def rank(self) -> int:
        return 2 * self.genus + self.punctures

    def gen_name(self, index: int) -> str:
        if not 0 <= index < self.rank:
            raise IndexError(f"generator index {index} out of range")
        if index < 2 * self.genus:
            u, r = divmod(index, 2)
            return f"{'pq'[r]}{u + 1}"
        return f"z{index - 2 * self.genus + 1}"

    def gen_names(self) -> list[str]:
        return [self.gen_name(i) for i in range(self.rank)]

    def gen_index(self, name: str) -> int:
        m = re.fullmatch(r"([pqz])([1-9][0-9]*)", name)
        if m is None:
            raise KeyError(name)
        kind, num = m.group(1), int(m.group(2))
        if kind in "pq":
            index = 2 * (num - 1) + (0 if kind == "p" else 1)
            if num > self.genus:
                raise KeyError(name)
        else:
            index = 2 * self.genus + num - 1
            if num > self.punctures:
                raise KeyError(name)
        return index

    def is_handle_pair(self, i: int, j: int) -> bool:
        """True when (i, j) are the p/q letters of one handle, in order."""
        return j == i + 1 and i % 2 == 0 and j < 2 * self.genus

    def letter_kind(self, index: int) -> str:
        if index >= 2 * self.genus:
            return "z"
        return "pq"[index % 2]


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, exp in letters:
        if exp not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {exp}")
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


class Word:
    """A freely reduced word.  Immutable and hashable; the empty word is 1."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = (), *, _reduced: bool = False):
        if _reduced:
            self.letters = tuple(letters)
        else:
            self.letters = _free_reduce(letters)

    @staticmethod
    def identity() -> "Word":
        return _IDENTITY

    @staticmethod
    def generator(index: int, exp: int = 1) -> "Word":
        return Word(((index, exp),), _reduced=True)

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        # only the seam can cancel when both factors are reduced
        left = list(self.letters)
        right = list(other.letters)
        while left and right and left[-1][0] == right[0][0] and left[-1][1] == -right[0][1]:
            left.pop()
            right.pop(0)
        return Word(tuple(left) + tuple(right), _reduced=True)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)), _reduced=True)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word.identity()
        for _ in range(n):
            out = out * self
        return out

    def conjugate_by(self, u: "Word") -> "Word":
        return u * self * u.inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def sort_key(self) -> tuple:
        return (len(self.letters), tuple(_letter_key(l) for l in self.letters))

    def __repr__(self) -> str:
        return f"Word({self.letters!r})"


_IDENTITY = Word((), _reduced=True)


def _letter_key(letter: Letter) -> tuple[int, int]:
    # x < x^-1 for each generator, generators by global index
    gen, exp = letter
    return (gen, 0 if exp > 0 else 1)


class CyclicWord:
    """Conjugacy class of a word: cyclic reduction, minimal rotation."""

    __slots__ = ("letters",)

    def __init__(self, letters: Sequence[Letter], *, _canonical: bool = False):
        if _canonical:
            self.letters = tuple(letters)
            return
        reduced = list(_free_reduce(letters))
        while len(reduced) > 1 and reduced[0][0] == reduced[-1][0] and reduced[0][1] == -reduced[-1][1]:
            reduced = reduced[1:-1]
        self.letters = _min_rotation(tuple(reduced))

    @staticmethod
    def of(word: Word) -> "CyclicWord":
        return CyclicWord(word.letters)

    def representative(self) -> Word:
        return Word(self.letters, _reduced=True)

    def is_identity(self) -> bool:
        return not self.letters

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclicWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(("cyc", self.letters))

    def sort_key(self) -> tuple:
        return (len(self.letters), tuple(_letter_key(l) for l in self.letters))

    def __repr__(self) -> str:
        return f"CyclicWord({self.letters!r})"


def _min_rotation(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    if len(letters) < 2:
        return letters
    keyed = [tuple(_letter_key(l) for l in letters[i:] + letters[:i]) for i in range(len(letters))]
    best = min(range(len(letters)), key=lambda i: keyed[i])
    return letters[best:] + letters[:best]


def conjugacy_class(word: Word) -> CyclicWord:
    return CyclicWord.of(word)


# --- parsing / formatting -------------------------------------------------

_TOKEN_RE = re.compile(r"([pqz])([0-9]+)(?:\^(-?[0-9]+))?")


def parse_word(text: str, sig: SurfaceSignature) -> Word:
    """Parse the word grammar; raises WordParseError with a position."""
    s = text.strip()
    if s == "1":
        return Word.identity()
    if not s:
        raise WordParseError("empty word string, use '1' for the identity", 0)
    letters: list[Letter] = []
    pos = 0
    expect_token = True
    while pos < len(text):
        ch = text[pos]
        if ch.isspace() or ch == "*":
            if ch == "*" and expect_token:
                raise WordParseError("expected generator token before '*'", pos)
            expect_token = expect_token or ch == "*"
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise WordParseError(f"expected generator token, found {text[pos]!r}", pos)
        name = m.group(1) + m.group(2)
        try:
            index = sig.gen_index(name)
        except KeyError:
            raise WordParseError(f"unknown generator {name!r} for genus {sig.genus}, "
                                 f"punctures {sig.punctures}", pos) from None
        exp = 1 if m.group(3) is None else int(m.group(3))
        sign = 1 if exp >= 0 else -1
        letters.extend((index, sign) for _ in range(abs(exp)))
        pos = m.end()
        expect_token = False
    if expect_token:
        raise WordParseError("trailing separator", len(text) - 1)
    return Word(letters)


def format_word(word: Word, sig: SurfaceSignature) -> str:
    """Serialize back to the word grammar, collapsing runs into powers."""
    if word.is_identity():
        return "1"
    parts: list[str] = []
    run_gen, run_exp = word.letters[0]
    count = run_exp
    for gen, exp in word.letters[1:]:
        if gen == run_gen and (exp > 0) == (count > 0):
            count += exp
        else:
            parts.append(_format_run(run_gen, count, sig))
            run_gen, count = gen, exp
    parts.append(_format_run(run_gen, count, sig))
    return "*".join(parts)


def _format_run(gen: int, exp: int, sig: SurfaceSignature) -> str:
    name = sig.gen_name(gen)
    return name if exp == 1 else f"{name}^{exp}"


def format_cyclic(cw: CyclicWord, sig: SurfaceSignature) -> str:
    return format_word(cw.representative(), sig)


def boundary_word(sig: SurfaceSignature) -> Word:
    """The distinguished boundary element [p1,q1]...[pg,qg] z1...zm with
    commutator [a,b] = a b a^-1 b^-1.

    Pinned as the word whose (verified, see the moment-map suite) double
    bracket against every element has the moment-map shape; its inverse
    does not.
    """
    out = Word.identity()
    for u in range(sig.genus):
        p, q = Word.generator(2 * u), Word.generator(2 * u + 1)
        out = out * p * q * p.inverse() * q.inverse()
    for v in range(sig.punctures):
        out = out * Word.generator(2 * sig.genus + v)
    return out


# --- seeded sampling ------------------------------------------------------

def sample_word(rng: random.Random, sig: SurfaceSignature, max_len: int = 4) -> Word:
    """Random reduced word: length uniform on 0..max_len, letters uniform
    over the signed alphabet, then freely reduced.  Deterministic in rng."""
    if sig.rank == 0:
        return Word.identity()
    length = rng.randint(0, max_len)
    letters = [(rng.randrange(sig.rank), rng.choice((1, -1))) for _ in range(length)]
    return Word(letters)


def trial_rng(seed: int, label: str, trial: int) -> random.Random:
    """Per-trial PRNG stream derived from (seed, label, trial index)."""
    return random.Random(f"{seed}:{label}:{trial}")
