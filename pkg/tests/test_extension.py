import pytest

from polymon import extension as ext
from polymon.extension import Filter, SNbhd, s_multiply
from polymon.matrixunits import BElement, b_multiply
from polymon.polycyclic import multiply

from helpers import ONE, ZERO, F, el, w


def test_filter_validation():
    with pytest.raises(ValueError):
        F("p1", "e")
    with pytest.raises(ValueError):
        F("e", "p1p2")


def test_normalize_filter():
    assert ext.normalize_filter(w("p1p2"), w("p2")) == F("p2", "p2")
    assert ext.normalize_filter(w("p2"), w("p2")) == F("p2", "p2")
    assert ext.normalize_filter(w("p1p1"), w("e")) == F("e", "e")


def test_rule_examples():
    assert s_multiply(F("p2", "p2"), F("p2", "e")) == F("p2", "e")
    assert s_multiply(F("p2", "e"), F("p2", "e")) == ZERO
    assert s_multiply(el("e", "p2"), F("p2p2", "p2")) == F("p2", "p2")
    assert s_multiply(el("p1", "p2"), F("p2", "p2")) == F("e", "p2")
    assert s_multiply(el("p1p2", "p1p2"), F("p2", "e")) == F("p2", "e")
    assert s_multiply(ZERO, F("p2", "e")) == ZERO
    assert s_multiply(F("e", "e"), ONE) == F("e", "e")


def test_rules_agree_with_limits():
    cases = [
        (el("e", "p2"), F("p2p2", "p2")),
        (el("p1", "p2"), F("p2", "p2")),
        (el("p1p2", "p1p2"), F("p2", "e")),
        (el("p2", "p1p1"), F("e", "p2")),
    ]
    for x, f in cases:
        target = s_multiply(x, f)
        nb = SNbhd(target, 2)
        for k in range(8, 12):
            for m in range(8, 12):
                assert ext.un_member(nb, multiply(x, ext.base_element(f, k, m)))


def test_invert():
    assert ext.s_invert(F("p2", "e")) == F("e", "p2")
    assert ext.s_invert(el("p1", "p2")) == el("p2", "p1")
    assert ext.s_invert(F("p2p1", "p2p1")) == F("p2p1", "p2p1")
    assert ext.s_is_idempotent(F("p2", "p2"))
    assert not ext.s_is_idempotent(F("p2", "e"))


def test_membership():
    nb = SNbhd(F("p2", "p2"), 2)
    assert ext.un_member(nb, el("p1p1p1p2", "p1p1p1p1p2"))
    assert not ext.un_member(nb, el("p1p1p2", "p1p1p1p2"))
    assert ext.un_member(SNbhd(F("p2", "p2"), 1), F("p2", "p2"))
    assert not ext.un_member(nb, F("p2", "e"))
    assert not ext.un_member(nb, ZERO)
    with pytest.raises(ValueError):
        SNbhd(F("e", "e"), 0)
    with pytest.raises(ValueError):
        nb.base_element(2, 5)


def test_decompose():
    assert ext.decompose(el("p1p1p2", "p1")) == (2, 1, F("p2", "e"))
    assert ext.decompose(ZERO) is None


def test_right_continuity_witness():
    assert ext.right_continuity_witness(el("e", "p2"), F("p2p2", "p2"), 3) == 3
    assert ext.right_continuity_witness(el("p1p2", "p1p2"), F("p2", "e"), 3) == 4
    for x, f, n in [(el("e", "p2"), F("p2p2", "p2"), 3), (el("p1p2", "p1p2"), F("p2", "e"), 3)]:
        assert ext.right_continuity_failure(x, f, n) is None


def test_zero_case_needs_a_longer_witness():
    # x F[e|e] = 0, yet x <p1p1|p1p1> = x is not zero
    x, f = el("e", "p2p1p1"), F("e", "e")
    assert s_multiply(x, f) == ZERO
    y = ext.base_element(f, 2, 2)
    assert multiply(x, y) == x
    assert ext.right_continuity_failure(x, f, 1, m=1) == (y, x)
    assert ext.right_continuity_witness(x, f, 1) == 3
    assert ext.right_continuity_failure(x, f, 1) is None


def test_left_continuity():
    for x in (el("p2", "e"), el("p1", "p2"), el("p2p1", "p1p2")):
        for f in ext.filters(2):
            assert ext.left_continuity_failure(x, f, 2) is None


def test_mul_continuity_witness():
    assert ext.mul_continuity_witness(F("p2", "p2"), F("p2", "e"), 5) == (5, 5)
    assert ext.mul_continuity_failure(F("p2", "p2"), F("p2", "e"), 5, span=10) is None
    assert ext.mul_continuity_witness(F("e", "e"), F("e", "e"), 1) == (1, 1)
    assert ext.mul_continuity_failure(F("e", "e"), F("e", "e"), 1) is None
    f, g = F("p2", "p2"), F("p2p1", "e")
    assert s_multiply(f, g) == ZERO
    assert ext.mul_continuity_witness(f, g, 3) == (3, 3)
    assert ext.mul_continuity_failure(f, g, 3) is None


def test_mismatched_product_overlaps_for_small_n():
    f, g = F("e", "p2"), F("p2p1p1p2", "e")
    assert s_multiply(f, g) == ZERO
    y, z = ext.base_element(f, 2, 2), ext.base_element(g, 2, 2)
    assert multiply(y, z) != ZERO
    assert ext.mul_continuity_witness(f, g, 1) == (4, 4)
    assert ext.mul_continuity_failure(f, g, 1) is None


def test_limit_checks_agree_with_direct_checks():
    xs = [el("e", "p2"), el("p1", "e"), el("p1p2", "p1p2"), el("p2", "p1p1"), el("p2p1", "p2")]
    for x in xs:
        for f in ext.filters(2):
            for n in (1, 2):
                a = ext.right_continuity_failure(x, f, n, span=6)
                b = ext.right_limit_failure(x, f, n, span=6)
                assert (a is None) == (b is None)
                a = ext.left_continuity_failure(x, f, n, span=6)
                b = ext.left_limit_failure(x, f, n, span=6)
                assert (a is None) == (b is None)


def test_isomorphism():
    assert ext.t_isomorphism(F("e", "e")) == BElement(0, 0)
    assert ext.t_isomorphism(F("p2", "e")) == BElement(ext.filter_word_index(w("p2")), 0)
    assert [str(ext.filter_word(i)) for i in range(5)] == ["e", "p2", "p2p1", "p2p2", "p2p1p1"]
    assert ext.t_isomorphism(ZERO) == BElement.zero()
    with pytest.raises(ValueError):
        ext.t_isomorphism(ONE)
    fs = ext.filters(2)
    for f in fs:
        assert ext.t_inverse(ext.t_isomorphism(f)) == f
        for g in fs:
            assert ext.t_isomorphism(s_multiply(f, g)) == b_multiply(ext.t_isomorphism(f), ext.t_isomorphism(g))


def test_density_and_separation():
    assert ext.density_check(F("p2", "p2"), 3, 100)
    assert ext.density_check(F("e", "p2"), 7, 1)
    fs = ext.filters(2)
    for f in fs:
        for g in fs:
            if f != g:
                assert ext.hausdorff_failure(f, g, 1, span=5) is None


def test_dichotomy():
    assert ext.dichotomy_check(F("p2", "e"))
    assert s_multiply(F("p2", "e"), F("e", "p2")) == F("p2", "p2")
    assert s_multiply(F("e", "p2"), F("p2", "e")) == F("e", "e")
    assert ext.dichotomy_check(F("e", "e"))
    assert ext.dichotomy_check(F("p2p2", "p2"))
    with pytest.raises(ValueError):
        ext.dichotomy_check(ONE)


def test_json():
    for x in (F("p2", "e"), ZERO, el("p1", "p2")):
        assert ext.s_from_json(ext.s_to_json(x)) == x


def test_enumeration():
    assert [str(a) for a in ext.head_free_words(2)] == ["e", "p2", "p2p1", "p2p2"]
    assert len(ext.filters(2)) == 16
