"""Group-algebra arithmetic, Hopf structure, tensor actions."""

import random
from fractions import Fraction

import pytest

from surfqp.algebra import (AlgElem, Tensor2, Tensor3, inner_act, m2, m3, outer_act,
                            permute, tensor2, tensor3)
from surfqp.words import SurfaceSignature, Word, parse_word, sample_word

SIG = SurfaceSignature(1, 1)


def w(text):
    return parse_word(text, SIG)


def e(text):
    return AlgElem.from_word(w(text))


def rand_elem(rng, max_len=3, terms=3):
    out = AlgElem.zero()
    for _ in range(rng.randint(0, terms)):
        out = out + AlgElem.from_word(sample_word(rng, SIG, max_len),
                                      Fraction(rng.randint(-3, 3)))
    return out


def test_product_distributes():
    lhs = (e("p1") + e("q1")) * (e("p1") - e("q1"))
    rhs = e("p1^2") - e("p1*q1") + e("q1*p1") - e("q1^2")
    assert lhs == rhs
    x = e("p1*z1")
    assert AlgElem.one() * x == x
    assert AlgElem.zero() * x == AlgElem.zero()


def test_counit():
    assert (e("p1").scale(2) - e("q1").scale(3)).counit() == -1
    assert AlgElem.one().counit() == 1
    assert (e("p1") - AlgElem.one()).counit() == 0
    rng = random.Random(0)
    for _ in range(50):
        x, y = rand_elem(rng), rand_elem(rng)
        assert (x * y).counit() == x.counit() * y.counit()


def test_antipode():
    assert e("p1*q1").antipode() == e("q1^-1*p1^-1")
    assert (e("p1").scale(2) + e("q1")).antipode() == e("p1^-1").scale(2) + e("q1^-1")
    rng = random.Random(1)
    for _ in range(50):
        x = rand_elem(rng)
        assert x.antipode().antipode() == x


def test_comultiply():
    assert e("p1").comultiply() == tensor2(e("p1"), e("p1"))
    assert (e("p1") + e("q1")).comultiply() == \
        tensor2(e("p1"), e("p1")) + tensor2(e("q1"), e("q1"))
    assert AlgElem.one().comultiply() == tensor2(AlgElem.one(), AlgElem.one())


def test_hopf_axioms_random():
    rng = random.Random(2)
    one = AlgElem.one()
    for _ in range(50):
        x = rand_elem(rng)
        delta = x.comultiply()
        # (counit (x) id) after comultiplication recovers the element
        recovered = AlgElem.zero()
        antipode_leg = AlgElem.zero()
        for (a, b), c in delta.items():
            recovered = recovered + AlgElem.from_word(b, c)
            antipode_leg = antipode_leg + AlgElem.from_word(a.inverse()) * AlgElem.from_word(b, c)
        assert recovered == x
        assert antipode_leg == one.scale(x.counit())
    for _ in range(30):
        x, y = rand_elem(rng), rand_elem(rng)
        lhs = (x * y).comultiply()
        rhs = Tensor2()
        for (a, b), c in x.comultiply().items():
            for (u, v), d in y.comultiply().items():
                rhs = rhs + Tensor2.pure(a * u, b * v, c * d)
        assert lhs == rhs


def test_permute():
    t = tensor2(e("p1"), e("q1"))
    assert permute(t, (2, 1)) == tensor2(e("q1"), e("p1"))
    t3 = tensor3(e("p1"), e("q1"), e("z1"))
    assert permute(t3, (3, 1, 2)) == tensor3(e("z1"), e("p1"), e("q1"))
    rng = random.Random(3)
    for _ in range(30):
        t3 = tensor3(rand_elem(rng), rand_elem(rng), rand_elem(rng))
        assert permute(permute(permute(t3, (3, 1, 2)), (3, 1, 2)), (3, 1, 2)) == t3
    with pytest.raises(ValueError):
        permute(t, (1, 1))


def test_outer_action():
    t = tensor2(e("p1"), e("q1"))
    assert outer_act(e("z1"), t, e("z1^-1")) == tensor2(e("z1*p1"), e("q1*z1^-1"))
    assert outer_act(AlgElem.one(), t, AlgElem.one()) == t
    rng = random.Random(4)
    for _ in range(20):
        l1, l2, r = rand_elem(rng), rand_elem(rng), rand_elem(rng)
        t = tensor2(rand_elem(rng), rand_elem(rng))
        assert outer_act(l1 + l2, t, r) == outer_act(l1, t, r) + outer_act(l2, t, r)


def test_inner_action():
    t = tensor2(e("p1"), e("q1"))
    assert inner_act(e("z1"), t, e("p1")) == tensor2(e("p1^2"), e("z1*q1"))
    assert inner_act(AlgElem.one(), t, AlgElem.one()) == t
    rng = random.Random(5)
    for _ in range(20):
        l1, l2 = rand_elem(rng), rand_elem(rng)
        t = tensor2(rand_elem(rng), rand_elem(rng))
        lhs = inner_act(l1 * l2, t, AlgElem.one())
        rhs = inner_act(l1, inner_act(l2, t, AlgElem.one()), AlgElem.one())
        assert lhs == rhs


def test_multiplication_maps():
    t3 = tensor3(e("p1"), e("q1"), e("z1"))
    assert m3(t3) == e("p1*q1*z1")
    assert m3(tensor3(AlgElem.one(), AlgElem.one(), AlgElem.one())) == AlgElem.one()
    assert m2(tensor2(e("p1"), e("p1^-1"))) == AlgElem.one()
    rng = random.Random(6)
    for _ in range(20):
        a, b, c = rand_elem(rng), rand_elem(rng), rand_elem(rng)
        assert m3(tensor3(a, b, c)) == a * b * c
