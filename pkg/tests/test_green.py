import pytest

from polymon.green import (
    ChainSpec,
    chain_prefix,
    d_witness,
    green_D,
    green_H,
    green_L,
    green_R,
    is_omega_chain_prefix,
    ll,
    rr,
)
from polymon.polycyclic import ball, multiply, nat_leq
from polymon.words import Word

from helpers import ONE, ZERO, el, w


def test_projections():
    x = el("p1", "p2")
    assert rr(x) == el("p1", "p1") == multiply(x, ~x)
    assert ll(x) == el("p2", "p2") == multiply(~x, x)
    assert rr(ZERO) == ZERO


def test_green_relations():
    assert green_R(el("p1", "p2"), el("p1", "e"))
    assert not green_H(el("p1", "p2"), el("p1", "e"))
    assert green_L(el("p2", "p1"), el("e", "p1"))
    assert green_D(el("p1", "p2"), ONE)
    assert not green_D(ZERO, ONE)


def test_combinatorial():
    xs = ball(2, 2, include_zero=False)
    for x in xs:
        for y in xs:
            if green_H(x, y):
                assert x == y


def test_d_witness_examples():
    wit = d_witness(ONE, ONE)
    assert wit.b == ONE and wit.s == wit.s_prime == wit.t == wit.t_prime == ONE
    x, y = el("p1", "p2"), el("p2", "p1")
    wit = d_witness(x, y)
    assert wit.b == el("p1", "p1") and wit.holds_for(x, y)
    wit = d_witness(ONE, el("p1p2", "e"))
    assert wit.b == ONE and wit.t == el("p1p2", "e") and wit.holds_for(ONE, el("p1p2", "e"))


def test_d_witness_on_ball():
    xs = ball(2, 2, include_zero=False)
    for x in xs:
        for y in xs:
            wit = d_witness(x, y)
            assert wit.holds_for(x, y)
            assert green_R(x, wit.b) and green_L(wit.b, y)


def test_d_witness_rejects_zero():
    with pytest.raises(ValueError):
        d_witness(ZERO, ONE)


def test_chain_prefix_examples():
    assert chain_prefix(ChainSpec(w("e"), w("p1")), 2) == [ONE, el("p1", "p1"), el("p1p1", "p1p1")]
    assert chain_prefix(ChainSpec(w("p2"), w("p1")), 2) == [ONE, el("p2", "p2"), el("p1p2", "p1p2")]


def test_chain_descends():
    es = chain_prefix(ChainSpec(w("p2p1"), w("p1p2")), 8)
    for hi, lo in zip(es, es[1:]):
        assert nat_leq(lo, hi) and not nat_leq(hi, lo)


def test_is_omega_chain_prefix():
    assert is_omega_chain_prefix(chain_prefix(ChainSpec(w("e"), w("p2")), 10))
    assert not is_omega_chain_prefix([ONE, ONE])
    gap = [ONE, el("p1p1", "p1p1")]
    between = el("p1", "p1")
    assert nat_leq(gap[1], between) and nat_leq(between, gap[0])
    assert between not in gap
    assert not is_omega_chain_prefix(gap)
    assert not is_omega_chain_prefix([el("p1", "p1")])


def test_chain_spec_json_and_validation():
    spec = ChainSpec(w("p2"), w("p1p2"))
    assert spec.to_json() == {"preperiod": [2], "period": [1, 2]}
    assert ChainSpec.from_json(spec.to_json()) == spec
    with pytest.raises(ValueError):
        ChainSpec(w("p1"), Word.empty())
