"""Named verification suites run by ``polymon check`` and the acceptance tests.

Each suite returns a ``SuiteReport``; an empty failure list means the
property held on every case examined.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Dict, Optional

from . import extension as ext
from .analysis import (
    COLLAPSED,
    SuiteReport,
    check_associativity,
    check_inverse_axioms,
    check_zero_e_unitary,
    congruence_saturate,
    random_pelement,
    random_triples,
)
from .green import ChainSpec, chain_prefix, is_omega_chain_prefix
from .matrixunits import BElement, b_multiply
from .polycyclic import PElement, ball, genstring, invert, multiply, reduce
from .topology import (
    BasicNbhd,
    chain_intersection_check,
    coarseness_failure,
    find_left_inclusion_failure,
    find_product_inclusion_failure,
    find_right_inclusion_failure,
    inversion_failure,
    left_translation_witness,
    multiplication_witness,
    projections,
    right_translation_witness,
    u_member,
    unstrengthened_left_witness,
    unstrengthened_right_witness,
)
from .words import Word, enumerate_words, strip_head_power, strip_suffix


def _merge(name: str, *reports: SuiteReport, seed=None) -> SuiteReport:
    out = SuiteReport(name, seed=seed)
    for r in reports:
        out.cases += r.cases
        out.failures.extend((r.suite,) + tuple(f) for f in r.failures)
    return out


# -- P_lam --------------------------------------------------------------------

def oracle_suite(max_len: int = 3, lam: int = 2, scan: str = "left") -> SuiteReport:
    """Normal-form product against the rewriting reducer on every pair of the ball."""
    rep = SuiteReport("oracle")
    els = ball(lam, max_len)
    gens = [genstring(x) for x in els]
    for x, gx in zip(els, gens):
        for y, gy in zip(els, gens):
            rep.cases += 1
            if multiply(x, y) != reduce(gx + gy, scan):
                rep.fail(x, y)
    return rep


def s_sample(filter_len: int = 2, finite_len: int = 3) -> list:
    return ext.filters(filter_len) + ball(2, finite_len)


def axioms_suite(max_len: int = 3, lam: int = 2, filter_len: int = 2) -> SuiteReport:
    p = check_inverse_axioms(ball(lam, max_len), multiply, invert, suite="axioms:P")
    s = check_inverse_axioms(s_sample(filter_len, max_len), ext.s_multiply, ext.s_invert,
                             suite="axioms:S")
    return _merge("axioms", p, s)


def random_selement(rng: random.Random):
    """Mix of filter points, finite elements near filter points, and arbitrary
    finite elements, so that all product rules get exercised."""
    r = rng.random()
    hf = ext.head_free_words(2)
    if r < 0.3:
        return ext.Filter(rng.choice(hf), rng.choice(hf))
    if r < 0.75:
        return ext.base_element(ext.Filter(rng.choice(hf), rng.choice(hf)),
                                rng.randint(0, 3), rng.randint(0, 3))
    return random_pelement(rng, 2, 4)


def assoc_suite(samples: int = 100_000, max_len: int = 6, seed: int = 0,
                lam: int = 2) -> SuiteReport:
    p = check_associativity(
        random_triples(lambda rng: random_pelement(rng, lam, max_len), samples, seed),
        multiply, suite="assoc:P", seed=seed)
    s = check_associativity(random_triples(random_selement, samples, seed + 1),
                            ext.s_multiply, suite="assoc:S", seed=seed + 1)
    return _merge("assoc", p, s, seed=seed)


def eunitary_suite(max_len: int = 4, lam: int = 2) -> SuiteReport:
    return check_zero_e_unitary(ball(lam, max_len))


def congruence_suite(pair_len: int = 2, ball_len: int = 10, mult_len: int = 4,
                     lam: int = 2) -> SuiteReport:
    rep = SuiteReport("congruence")
    st = congruence_saturate(PElement.one(lam), PElement.zero(lam), ball_len, mult_len)
    rep.cases += 1
    if st.status != COLLAPSED or st.multiplier_depth != 1:
        rep.fail("(1, 0)", st.status, st.multiplier_depth)
    nonzero = ball(lam, pair_len, include_zero=False)
    for x, y in itertools.combinations(nonzero, 2):
        rep.cases += 1
        st = congruence_saturate(x, y, ball_len, mult_len)
        if st.status != COLLAPSED:
            rep.fail(x, y, st.status)
    return rep


# -- topology tau_mi ----------------------------------------------------------

def neighbourhood_family(word_len: int = 2, max_size: int = 3, lam: int = 2) -> list:
    words = enumerate_words(lam, word_len)
    out = []
    for k in range(max_size + 1):
        out.extend(BasicNbhd(frozenset(c), lam) for c in itertools.combinations(words, k))
    return out


def witness_suite(ball_len: int = 6, word_len: int = 2, max_size: int = 3,
                  elem_len: int = 2, lam: int = 2) -> SuiteReport:
    """Right, left and product witnesses against exhaustive inclusion searches,
    plus inversion symmetry of every neighbourhood."""
    rep = SuiteReport("witnesses")
    family = neighbourhood_family(word_len, max_size, lam)
    xs = ball(lam, elem_len, include_zero=False)
    for nb in family:
        T = multiplication_witness(nb)
        rep.cases += 1
        bad = find_product_inclusion_failure(nb, T, ball_len)
        if bad is not None:
            rep.fail("product", nb, *bad)
        for x in xs:
            rep.cases += 2
            bad = find_right_inclusion_failure(x, nb, right_translation_witness(x, nb), ball_len)
            if bad is not None:
                rep.fail("right", x, nb, *bad)
            bad = find_left_inclusion_failure(x, nb, left_translation_witness(x, nb), ball_len)
            if bad is not None:
                rep.fail("left", x, nb, *bad)
    return rep


def unstrengthened_counterexample() -> dict:
    """The recorded failure of the witness sets without A, right and left."""
    x = PElement.pair((1,), (1,))
    nb = BasicNbhd.of([(2,)])
    y = PElement.pair((2, 1), (2,))
    yl = invert(y)
    return {
        "x": x, "A": nb,
        "B": unstrengthened_right_witness(x, nb),
        "D": unstrengthened_left_witness(x, nb),
        "y": y, "product": multiply(x, y),
        "y_left": yl, "product_left": multiply(yl, x),
    }


def counterexample_suite() -> SuiteReport:
    rep = SuiteReport("unstrengthened")
    cx = unstrengthened_counterexample()
    x, nb, B, D = cx["x"], cx["A"], cx["B"], cx["D"]
    checks = [
        ("B", B.A == frozenset({Word(()), Word((1,))})),
        ("y in U_B", u_member(B, cx["y"])),
        ("x y", cx["product"] == PElement.pair((2, 1), (2,))),
        ("x y outside U_A", not u_member(nb, cx["product"])),
        ("D", D.A == frozenset({Word(()), Word((1,))})),
        ("y' in U_D", u_member(D, cx["y_left"])),
        ("y' x outside U_A", not u_member(nb, cx["product_left"])),
        ("search finds right", find_right_inclusion_failure(x, nb, B, 6) is not None),
        ("search finds left", find_left_inclusion_failure(x, nb, D, 6) is not None),
    ]
    for name, ok in checks:
        rep.cases += 1
        if not ok:
            rep.fail(name)
    return rep


def coarseness_suite(ball_len: int = 6, word_len: int = 2, max_size: int = 3,
                     lam: int = 2) -> SuiteReport:
    rep = SuiteReport("coarseness")
    proj = projections(ball(lam, ball_len))
    for nb in neighbourhood_family(word_len, max_size, lam):
        rep.cases += 1
        bad = coarseness_failure(nb, ball_len, proj)
        if bad is not None:
            rep.fail(nb, bad)
    return rep


def inversion_suite(ball_len: int = 4, word_len: int = 2, max_size: int = 3,
                    lam: int = 2) -> SuiteReport:
    rep = SuiteReport("inversion")
    for nb in neighbourhood_family(word_len, max_size, lam):
        rep.cases += 1
        bad = inversion_failure(nb, ball_len)
        if bad is not None:
            rep.fail(nb, bad)
    return rep


def chain_specs(max_len: int = 2, lam: int = 2) -> list:
    words = enumerate_words(lam, max_len)
    return [ChainSpec(pre, per) for pre in words for per in words if len(per)]


def chain_suite(n: int = 50, spec_len: int = 2, word_len: int = 2, max_size: int = 3,
                lam: int = 2) -> SuiteReport:
    rep = SuiteReport("chains")
    family = neighbourhood_family(word_len, max_size, lam)
    for spec in chain_specs(spec_len, lam):
        rep.cases += 1
        if not is_omega_chain_prefix(chain_prefix(spec, n)):
            rep.fail("not an omega-chain prefix", spec.to_json())
        for nb in family:
            rep.cases += 1
            _, misses = chain_intersection_check(nb, spec, n)
            if misses > len(nb.A):
                rep.fail(spec.to_json(), nb, misses)
    return rep


def topology_suite(max_len: int = 6, lam: int = 2) -> SuiteReport:
    return _merge(
        "topology",
        witness_suite(ball_len=max_len, lam=lam),
        counterexample_suite(),
        coarseness_suite(ball_len=max_len, lam=lam),
        inversion_suite(ball_len=min(max_len, 4), lam=lam),
        chain_suite(lam=lam),
    )


# -- the extension S ----------------------------------------------------------

def disjointness_suite(max_len: int = 6) -> SuiteReport:
    """``c = e b`` and ``b = p1^t c`` (t >= 1) never hold together."""
    rep = SuiteReport("rule-disjointness")
    words = enumerate_words(2, max_len)
    for b in words:
        t, rest = strip_head_power(b, 1)
        for c in words:
            rep.cases += 1
            if strip_suffix(c, b) is not None and t >= 1 and rest == c:
                rep.fail(b, c)
    return rep


def limit_suite(max_len: int = 4, n: int = 1, span: int = 10,
                include_zero: bool = False) -> SuiteReport:
    """For every x and filter point with words <= max_len: the polycyclic
    products of x with base elements of the witness neighbourhood land in
    the n-th neighbourhood of the rule's value, on both sides.

    Pairs whose rule value is zero are only examined with ``include_zero``.
    """
    rep = SuiteReport("limits")
    words = enumerate_words(2, max_len)
    xs = [PElement(u, v) for u in words for v in words]
    fs = ext.filters(max_len)
    for x in xs:
        for f in fs:
            for side in ("right", "left"):
                target = ext.s_multiply(x, f) if side == "right" else ext.s_multiply(f, x)
                if not include_zero and not isinstance(target, ext.Filter):
                    continue
                rep.cases += 1
                check = ext.right_limit_failure if side == "right" else ext.left_limit_failure
                bad = check(x, f, n, span=span)
                if bad is not None:
                    rep.fail(side, x, f, *bad)
    return rep


def continuity_suite(max_len: int = 2, ns=(1, 2, 3), span: int = 10) -> SuiteReport:
    """Right, left and multiplication witnesses, zero cases included."""
    rep = SuiteReport("continuity")
    words = enumerate_words(2, max_len)
    xs = [PElement(u, v) for u in words for v in words]
    fs = ext.filters(max_len)
    for n in ns:
        for f in fs:
            for x in xs:
                rep.cases += 2
                bad = ext.right_continuity_failure(x, f, n, span=span)
                if bad is not None:
                    rep.fail("right", n, x, f, *bad)
                bad = ext.left_continuity_failure(x, f, n, span=span)
                if bad is not None:
                    rep.fail("left", n, x, f, *bad)
            for g in fs:
                rep.cases += 1
                bad = ext.mul_continuity_failure(f, g, n, span=min(span, 6))
                if bad is not None:
                    rep.fail("mul", n, f, g, *bad)
    return rep


def hausdorff_suite(max_len: int = 3, ns=(1, 2, 3), span: int = 6) -> SuiteReport:
    rep = SuiteReport("hausdorff")
    fs = ext.filters(max_len)
    for n in ns:
        members = {f: list(ext.SNbhd(f, n).finite_members(span)) for f in fs}
        owner = {}
        for f in fs:
            for y in members[f]:
                rep.cases += 1
                if y in owner and owner[y] != f:
                    rep.fail(n, owner[y], f, y)
                owner[y] = f
        # membership predicate agrees with the enumeration
        for f in fs:
            nb = ext.SNbhd(f, n)
            for g in fs:
                if g == f:
                    continue
                rep.cases += 1
                if any(ext.un_member(nb, y) for y in members[g]):
                    rep.fail("predicate", n, f, g)
    return rep


def iso_suite(max_index: int = 50) -> SuiteReport:
    """Filter points with zero against matrix units: bijective and multiplicative
    on all indices below max_index."""
    rep = SuiteReport("iso")
    idx = range(max_index)
    words = [ext.filter_word(i) for i in idx]
    seen = set()
    for i in idx:
        rep.cases += 1
        w = words[i]
        if w in seen or ext.filter_word_index(w) != i:
            rep.fail("enumeration", i)
        seen.add(w)
    F = {(i, j): ext.Filter(words[i], words[j]) for i in idx for j in idx}
    for (i, j), f in F.items():
        rep.cases += 1
        if ext.t_isomorphism(f) != BElement(i, j) or ext.t_inverse(BElement(i, j)) != f:
            rep.fail("bijection", i, j)
    zero = PElement.zero(2)
    image = {f: ext.t_isomorphism(f) for f in F.values()}
    image[zero] = ext.t_isomorphism(zero)
    items = list(F.items())
    for (i, j), f in items:
        bf = image[f]
        for (k, l), g in items:
            rep.cases += 1
            if image[ext.s_multiply(f, g)] != b_multiply(bf, image[g]):
                rep.fail("product", i, j, k, l)
        rep.cases += 2
        if ext.s_multiply(f, zero) != zero or ext.s_multiply(zero, f) != zero:
            rep.fail("zero", i, j)
    return rep


def inverse_continuity_suite(max_len: int = 3, ns=(1, 2), span: int = 4) -> SuiteReport:
    rep = SuiteReport("inverse-continuity")
    fs = ext.filters(max_len)
    sample = list(itertools.chain(fs, *(ext.SNbhd(f, 1).finite_members(span) for f in fs)))
    for n in ns:
        for f in fs:
            a, b = ext.SNbhd(f, n), ext.SNbhd(f.swap(), n)
            for x in sample:
                rep.cases += 1
                if ext.un_member(a, x) != ext.un_member(b, ext.s_invert(x)):
                    rep.fail(n, f, x)
    return rep


def dichotomy_suite(max_len: int = 3) -> SuiteReport:
    rep = SuiteReport("dichotomy")
    for f in ext.filters(max_len):
        rep.cases += 1
        if not ext.dichotomy_check(f):
            rep.fail(f)
    return rep


def extension_suite(max_len: int = 4) -> SuiteReport:
    return _merge(
        "extension",
        disjointness_suite(),
        limit_suite(max_len=max_len),
        continuity_suite(),
        hausdorff_suite(),
        iso_suite(),
        inverse_continuity_suite(),
        dichotomy_suite(),
    )


SUITES: Dict[str, Callable[..., SuiteReport]] = {
    "oracle": lambda max_len, samples, seed, lam: oracle_suite(max_len or 3, lam),
    "axioms": lambda max_len, samples, seed, lam: axioms_suite(max_len or 3, lam),
    "assoc": lambda max_len, samples, seed, lam: assoc_suite(samples or 100_000, max_len or 6, seed, lam),
    "eunitary": lambda max_len, samples, seed, lam: eunitary_suite(max_len or 4, lam),
    "congruence": lambda max_len, samples, seed, lam: congruence_suite(max_len or 2, lam=lam),
    "topology": lambda max_len, samples, seed, lam: topology_suite(max_len or 6, lam),
    "extension": lambda max_len, samples, seed, lam: extension_suite(max_len or 4),
    "iso": lambda max_len, samples, seed, lam: iso_suite(max_len or 50),
}


def run(name: str, max_len: Optional[int] = None, samples: Optional[int] = None,
        seed: int = 0, lam: int = 2) -> SuiteReport:
    rep = SUITES[name](max_len, samples, seed, lam)
    if rep.seed is None:
        rep.seed = seed
    return rep
