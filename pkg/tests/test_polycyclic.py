import pytest

from polymon.polycyclic import (
    BicyclicElem,
    GenString,
    PElement,
    ball,
    bicyclic_mul,
    embed_bicyclic,
    genstring,
    invert,
    is_idempotent,
    iter_ball,
    multiply,
    nat_leq,
    reduce,
    render,
)
from polymon.words import AlphabetError, Word

from helpers import ONE, ZERO, el


def via_oracle(x, y):
    return reduce(genstring(x) + genstring(y))


def test_multiply_examples():
    for y in ball(2, 2):
        assert multiply(ONE, y) == y
    x, y = el("e", "p2"), el("p1p2", "p1")
    assert multiply(x, y) == el("p1", "p1") == via_oracle(x, y)
    x, y = el("e", "p1"), el("p2", "e")
    assert multiply(x, y) == ZERO == via_oracle(x, y)


def test_multiply_cases_against_oracle():
    cases = [
        (el("p1", "p2"), el("p1p2", "e")),   # b is a suffix of c
        (el("p1", "p2p1"), el("p1", "p2")),  # c is a suffix of b
        (el("p1", "p2"), el("p1", "e")),     # neither
        (ZERO, el("e", "e")),
    ]
    for x, y in cases:
        assert multiply(x, y) == via_oracle(x, y)
    assert multiply(el("p1", "p2"), el("p1p2", "e")) == el("p1p1", "e")
    assert multiply(el("p1", "p2p1"), el("p1", "p2")) == el("p1", "p2p2")


def test_alphabet_mismatch():
    with pytest.raises(AlphabetError):
        multiply(PElement.one(2), PElement.one(3))
    with pytest.raises(AlphabetError):
        PElement(Word((), 2), Word((), 3))


def test_invert():
    assert invert(el("p1", "p2")) == el("p2", "p1")
    assert invert(ZERO) == ZERO
    assert invert(el("p2p1", "p2p1")) == el("p2p1", "p2p1")


def test_is_idempotent():
    assert is_idempotent(el("p1p2", "p1p2"))
    x = el("p1", "p2")
    assert multiply(x, x) == ZERO
    assert not is_idempotent(x)
    assert is_idempotent(ZERO)


def test_nat_leq():
    e, f = el("p2p1", "p2p1"), el("p1", "p1")
    assert multiply(e, f) == e
    assert nat_leq(e, f)
    assert not nat_leq(el("p1", "p1"), el("p2", "p2"))
    assert nat_leq(ZERO, ONE)
    assert not nat_leq(ONE, ZERO)


def test_reduce_examples():
    assert reduce(GenString([(1, False), (1, True)])) == ONE
    assert reduce(GenString([(1, False), (2, True)])) == ZERO
    assert reduce(GenString([(1, True), (1, False)])) == el("p1", "p1")
    assert reduce(GenString([(1, False)], zero=True)) == ZERO


def test_reduce_scan_order_agrees():
    s = GenString([(2, True), (1, True), (1, False), (1, False), (1, True), (2, False)])
    assert reduce(s, "left") == reduce(s, "right")
    with pytest.raises(ValueError):
        reduce(s, "middle")


def test_genstring_layout():
    assert genstring(el("p1p2", "p2")).tokens == ((2, True), (1, True), (2, False))
    assert genstring(ZERO).zero


def test_render():
    assert render(ZERO) == "0"
    assert render(ONE) == "e^-1 e"
    assert render(el("p1p2", "p1")) == "(p1p2)^-1 p1"
    assert render(el("p2", "p2p1")) == "p2^-1 p2p1"


def test_json_round_trip():
    for x in ball(2, 2):
        assert PElement.from_json(x.to_json()) == x
    assert ZERO.to_json() == {"kind": "zero"}


def test_bicyclic():
    assert bicyclic_mul(BicyclicElem(2, 3), BicyclicElem(1, 1)) == (2, 3)
    x = BicyclicElem(4, 1)
    assert bicyclic_mul(BicyclicElem(0, 0), x) == x
    assert bicyclic_mul(BicyclicElem(0, 1), BicyclicElem(1, 0)) == (0, 0)
    with pytest.raises(ValueError):
        BicyclicElem(-1, 0)


def test_embed_bicyclic():
    assert embed_bicyclic(BicyclicElem(0, 0)) == PElement.one(1)
    assert embed_bicyclic(BicyclicElem(2, 3)) == PElement(Word((1, 1), 1), Word((1, 1, 1), 1))
    a, b = BicyclicElem(2, 3), BicyclicElem(1, 1)
    assert multiply(embed_bicyclic(a), embed_bicyclic(b)) == embed_bicyclic(bicyclic_mul(a, b))


def test_embedding_is_a_homomorphism_on_a_grid():
    grid = [BicyclicElem(k, l) for k in range(5) for l in range(5)]
    for a in grid:
        for b in grid:
            assert multiply(embed_bicyclic(a), embed_bicyclic(b)) == embed_bicyclic(bicyclic_mul(a, b))


def test_ball_counts():
    assert len(ball(2, 3)) == 226
    assert len(ball(2, 3, include_zero=False)) == 225
    assert list(iter_ball(2, 2)) == ball(2, 2)
