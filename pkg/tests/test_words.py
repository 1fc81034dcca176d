"""Free reduction, word arithmetic, conjugacy normal forms, the grammar."""

import random

import pytest

from surfqp.words import (CyclicWord, SurfaceSignature, Word, WordParseError,
                          boundary_word, conjugacy_class, format_cyclic, format_word,
                          parse_word, sample_word)

SIG = SurfaceSignature(2, 2)


def w(text, sig=SIG):
    return parse_word(text, sig)


def test_signature_alphabet_order():
    sig = SurfaceSignature(2, 1)
    assert sig.gen_names() == ["p1", "q1", "p2", "q2", "z1"]
    assert sig.rank == 5
    assert sig.gen_index("q2") == 3
    with pytest.raises(KeyError):
        sig.gen_index("z2")
    with pytest.raises(ValueError):
        SurfaceSignature(-1, 0)


def test_reduce_cancellation():
    assert w("p1*p1^-1*q1") == w("q1")
    assert w("1") == Word.identity()
    assert w("p1*q1*q1^-1*p1") == w("p1^2")


def test_multiply():
    assert w("p1") * w("p1^-1") == Word.identity()
    assert w("p1*q1") * w("q1^-1*z1") == w("p1*z1")
    assert Word.identity() * w("q2*z1") == w("q2*z1")


def test_invert():
    assert w("p1*q1").inverse() == w("q1^-1*p1^-1")
    assert Word.identity().inverse() == Word.identity()
    assert w("p1^-1").inverse() == w("p1")


def test_power():
    assert w("p1") ** 3 == w("p1^3")
    assert w("p1*q1") ** -2 == (w("p1*q1") ** 2).inverse()
    assert w("z1") ** 0 == Word.identity()


def test_conjugacy_class():
    assert conjugacy_class(w("q1*p1*q1^-1")) == conjugacy_class(w("p1"))
    assert conjugacy_class(Word.identity()) == CyclicWord(())
    assert conjugacy_class(w("p1*q1")) == conjugacy_class(w("q1*p1"))


def test_cyclic_representative_is_minimal_rotation():
    # p1 precedes q1, so the class of q1*p1 prints from p1
    assert format_cyclic(conjugacy_class(w("q1*p1")), SIG) == "p1*q1"
    # generator order comes before exponent sign, so p1^-1 precedes q1
    assert format_cyclic(conjugacy_class(w("q1*p1^-2")), SIG) == "p1^-2*q1"
    # cyclic reduction strips the conjugating letters first
    assert format_cyclic(conjugacy_class(w("z1*q1*z1^-1")), SIG) == "q1"


def test_word_properties_random():
    rng = random.Random(7)
    for _ in range(300):
        a = sample_word(rng, SIG, 6)
        b = sample_word(rng, SIG, 6)
        c = sample_word(rng, SIG, 6)
        assert Word(a.letters) == a  # reduction is idempotent
        assert (a * b) * c == a * (b * c)
        assert a.inverse().inverse() == a
        assert a * a.inverse() == Word.identity()


def test_conjugation_invariance_random():
    rng = random.Random(11)
    for _ in range(300):
        u = sample_word(rng, SIG, 5)
        x = sample_word(rng, SIG, 5)
        assert conjugacy_class(u * x * u.inverse()) == conjugacy_class(x)


def test_parse_format_round_trip():
    rng = random.Random(13)
    for _ in range(200):
        x = sample_word(rng, SIG, 8)
        assert parse_word(format_word(x, SIG), SIG) == x


def test_grammar_forms():
    assert w("p1 q1^-1 z2") == w("p1*q1^-1*z2")
    assert w("p1^2") == w("p1*p1")
    assert w("p1^-2") == w("p1^-1*p1^-1")
    assert w("z2^0") == Word.identity()
    assert format_word(Word.identity(), SIG) == "1"


@pytest.mark.parametrize("bad", ["p1**q1", "w1", "p9", "z3", "p1*", "*p1", "p1^x", ""])
def test_parse_errors_carry_position(bad):
    with pytest.raises(WordParseError) as err:
        parse_word(bad, SIG)
    assert err.value.position >= 0


def test_boundary_word():
    assert format_word(boundary_word(SurfaceSignature(1, 1)), SurfaceSignature(1, 1)) \
        == "p1*q1*p1^-1*q1^-1*z1"
    assert format_word(boundary_word(SurfaceSignature(0, 2)), SurfaceSignature(0, 2)) \
        == "z1*z2"
    assert boundary_word(SurfaceSignature(0, 0)) == Word.identity()


def test_sampling_is_deterministic():
    a = [sample_word(random.Random(5), SIG, 4) for _ in range(10)]
    b = [sample_word(random.Random(5), SIG, 4) for _ in range(10)]
    assert a == b
