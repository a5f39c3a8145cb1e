import pytest

from polymon.green import ChainSpec
from polymon.polycyclic import PElement, invert, multiply
from polymon.topology import (
    BasicNbhd,
    chain_intersection_check,
    coarseness_failure,
    coarseness_identity_check,
    find_left_inclusion_failure,
    find_product_inclusion_failure,
    find_right_inclusion_failure,
    hausdorff_witness,
    inversion_witness_check,
    left_translation_witness,
    multiplication_witness,
    projections,
    right_translation_witness,
    u_member,
    unstrengthened_left_witness,
    unstrengthened_right_witness,
)
from polymon.words import AlphabetError

from helpers import ONE, ZERO, el, w


def nb(*words):
    return BasicNbhd(frozenset(w(x) for x in words))


def ws(*words):
    return frozenset(w(x) for x in words)


def test_membership():
    assert u_member(nb("p1"), el("p2", "p2p2"))
    assert not u_member(nb("p1"), el("p1", "p2"))
    for A in (nb(), nb("e"), nb("p1", "p2p2")):
        assert ZERO in A


def test_membership_alphabet_mismatch():
    with pytest.raises(AlphabetError):
        u_member(nb("p1"), PElement.one(3))


def test_hausdorff_witness():
    for x, A in [(el("p1", "p2"), ws("p1", "p2")), (ONE, ws("e")), (el("p1p2", "p1p2"), ws("p1p2"))]:
        H = hausdorff_witness(x)
        assert H.A == A
        assert not u_member(H, x)
    with pytest.raises(ValueError):
        hausdorff_witness(ZERO)


@pytest.mark.parametrize("method", ["factored", "brute"])
def test_right_witness_examples(method):
    x, A = el("p1", "p1"), nb("p2")
    B = right_translation_witness(x, A)
    assert B.A == ws("p2", "e", "p1")
    assert find_right_inclusion_failure(x, A, B, 5, method) is None
    B = right_translation_witness(ONE, nb("p1"))
    assert B.A >= ws("p1", "e")
    assert find_right_inclusion_failure(ONE, nb("p1"), B, 5, method) is None


@pytest.mark.parametrize("method", ["factored", "brute"])
def test_left_witness_examples(method):
    x, A = el("p1", "p1"), nb("p2")
    D = left_translation_witness(x, A)
    assert D.A == ws("p2", "e", "p1")
    assert find_left_inclusion_failure(x, A, D, 5, method) is None
    x, A = el("p2", "e"), nb("e")
    D = left_translation_witness(x, A)
    assert D.A == ws("e", "p2")
    assert find_left_inclusion_failure(x, A, D, 5, method) is None


def test_unstrengthened_witnesses_fail():
    x, A = el("p1", "p1"), nb("p2")
    y = el("p2p1", "p2")
    B = unstrengthened_right_witness(x, A)
    assert u_member(B, y)
    assert multiply(x, y) == el("p2p1", "p2")
    assert not u_member(A, multiply(x, y))
    D = unstrengthened_left_witness(x, A)
    assert u_member(D, invert(y)) and not u_member(A, multiply(invert(y), x))
    for method in ("factored", "brute"):
        assert find_right_inclusion_failure(x, A, B, 4, method) is not None
        assert find_left_inclusion_failure(x, A, D, 4, method) is not None


def test_translation_by_zero_is_rejected():
    with pytest.raises(ValueError):
        right_translation_witness(ZERO, nb("p1"))


@pytest.mark.parametrize("method", ["factored", "brute"])
def test_multiplication_witness(method):
    assert multiplication_witness(nb("p1p2")).A == ws("p1p2", "p2", "e")
    assert multiplication_witness(nb("e")).A == ws("e")
    A = nb("p1")
    assert find_product_inclusion_failure(A, multiplication_witness(A), 3, method) is None
    # A alone is too small: <e|p2><p2|p1> = <e|p1>
    bad = find_product_inclusion_failure(A, A, 3, method)
    assert bad is not None and not u_member(A, bad[2])


def test_factored_search_matches_brute_on_a_family():
    sets = [nb(), nb("e"), nb("p2"), nb("p1", "p2p1"), nb("e", "p1p2")]
    xs = [el("e", "p1"), el("p2", "e"), el("p1", "p2p1"), el("p2p2", "p1")]
    for A in sets:
        for B in sets:
            for x in xs:
                f = find_right_inclusion_failure(x, A, B, 3, "factored")
                b = find_right_inclusion_failure(x, A, B, 3, "brute")
                assert (f is None) == (b is None)
                f = find_left_inclusion_failure(x, A, B, 3, "factored")
                b = find_left_inclusion_failure(x, A, B, 3, "brute")
                assert (f is None) == (b is None)
            f = find_product_inclusion_failure(A, B, 3, "factored")
            b = find_product_inclusion_failure(A, B, 3, "brute")
            assert (f is None) == (b is None)


def test_inversion():
    assert inversion_witness_check(nb("p1"), 4)
    assert inversion_witness_check(nb("e"), 4)
    assert inversion_witness_check(nb(), 4)


def test_coarseness():
    assert coarseness_identity_check(nb("p1"), 4)
    assert coarseness_identity_check(nb("e", "p2"), 4)
    assert coarseness_identity_check(nb(), 4)
    proj = projections([el("p1", "p2")])
    assert proj == [(el("p1", "p2"), el("p1", "p1"), el("p2", "p2"))]
    assert coarseness_failure(nb("p2"), 2, proj) is None


def test_chain_intersection():
    spec = ChainSpec(w("e"), w("p1"))
    assert chain_intersection_check(nb("p1"), spec, 10) == (10, 1)
    assert chain_intersection_check(nb(), spec, 10)[1] == 0
    assert chain_intersection_check(nb("p2"), spec, 10)[1] == 0


def test_json():
    A = nb("p2", "e")
    assert A.to_json() == {"A": [[], [2]]}
    assert BasicNbhd.from_json(A.to_json()) == A
