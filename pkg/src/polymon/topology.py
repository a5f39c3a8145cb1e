"""The topology tau_mi on P_lam: basic neighbourhoods of zero and their witnesses.

Every non-zero element is isolated.  Zero has the base ``U_A(0)``, one set
for each finite set A of words: zero together with all ``<a|b>`` where
neither a nor b lies in A.

The ``*_witness`` functions build, for a given neighbourhood U_A(0), the
smaller neighbourhood required by continuity of translations and of the
multiplication at zero.  The ``find_*_failure`` functions search a ball of
elements for a violation of the corresponding inclusion and return it, or
None when the inclusion holds on the ball.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .green import ChainSpec, chain_prefix, ll, rr
from .polycyclic import PElement, invert, iter_ball, multiply
from .words import AlphabetError, Word, concat, enumerate_words, strip_prefix, strip_suffix, suffixes


@dataclass(frozen=True)
class BasicNbhd:
    """``U_A(0)`` for a finite set A of words."""

    A: frozenset
    lam: int = 2

    def __post_init__(self):
        A = frozenset(self.A)
        for w in A:
            if w.lam != self.lam:
                raise AlphabetError(f"word {w} is not over an alphabet of size {self.lam}")
        object.__setattr__(self, "A", A)

    @classmethod
    def of(cls, words: Iterable, lam: int = 2) -> "BasicNbhd":
        return cls(frozenset(w if isinstance(w, Word) else Word(w, lam) for w in words), lam)

    def __contains__(self, x: PElement) -> bool:
        return u_member(self, x)

    def max_word_len(self) -> int:
        return max((len(w) for w in self.A), default=0)

    def default_radius(self) -> int:
        return self.max_word_len() + 4

    def sorted_words(self) -> list:
        return sorted(self.A)

    def to_json(self) -> dict:
        return {"A": [w.to_json() for w in self.sorted_words()]}

    @classmethod
    def from_json(cls, data: dict, lam: int = 2) -> "BasicNbhd":
        return cls(frozenset(Word(w, lam) for w in data["A"]), lam)


def u_member(nb: BasicNbhd, x: PElement) -> bool:
    if x.lam != nb.lam:
        raise AlphabetError(f"alphabet mismatch: {x.lam} vs {nb.lam}")
    if x.is_zero:
        return True
    return x.u not in nb.A and x.v not in nb.A


def hausdorff_witness(x: PElement) -> BasicNbhd:
    """A neighbourhood of zero that misses the non-zero element x."""
    if x.is_zero:
        raise ValueError("zero lies in every neighbourhood of zero")
    return BasicNbhd(frozenset((x.u, x.v)), x.lam)


def _require_nonzero(x: PElement, nb: BasicNbhd) -> None:
    if x.is_zero:
        raise ValueError("translation by zero maps everything to zero; use A itself")
    if x.lam != nb.lam:
        raise AlphabetError(f"alphabet mismatch: {x.lam} vs {nb.lam}")


def _right_extra(x: PElement, nb: BasicNbhd) -> frozenset:
    # {k b : k a in A}
    out = set()
    for w in nb.A:
        k = strip_suffix(w, x.u)
        if k is not None:
            out.add(concat(k, x.v))
    return frozenset(out)


def _left_extra(x: PElement, nb: BasicNbhd) -> frozenset:
    # {t a : t b in A}
    out = set()
    for w in nb.A:
        t = strip_suffix(w, x.v)
        if t is not None:
            out.add(concat(t, x.u))
    return frozenset(out)


def right_translation_witness(x: PElement, nb: BasicNbhd) -> BasicNbhd:
    """B with ``x * U_B(0)`` inside ``U_A(0)``, for ``x = <a|b>``.

    B = A, all suffixes of b, and every ``k b`` with ``k a`` in A.
    """
    _require_nonzero(x, nb)
    return BasicNbhd(nb.A | suffixes(x.v) | _right_extra(x, nb), nb.lam)


def left_translation_witness(x: PElement, nb: BasicNbhd) -> BasicNbhd:
    """D with ``U_D(0) * x`` inside ``U_A(0)``, for ``x = <a|b>``.

    D = A, all suffixes of a, and every ``t a`` with ``t b`` in A.
    """
    _require_nonzero(x, nb)
    return BasicNbhd(nb.A | suffixes(x.u) | _left_extra(x, nb), nb.lam)


def unstrengthened_right_witness(x: PElement, nb: BasicNbhd) -> BasicNbhd:
    """The right witness without A itself. Too small in general: products
    ``<c1 a|d>`` may still have d in A."""
    _require_nonzero(x, nb)
    return BasicNbhd(suffixes(x.v) | _right_extra(x, nb), nb.lam)


def unstrengthened_left_witness(x: PElement, nb: BasicNbhd) -> BasicNbhd:
    _require_nonzero(x, nb)
    return BasicNbhd(suffixes(x.u) | _left_extra(x, nb), nb.lam)


def multiplication_witness(nb: BasicNbhd) -> BasicNbhd:
    """T with ``U_T(0) * U_T(0)`` inside ``U_A(0)``: A closed under suffixes."""
    T = set()
    for w in nb.A:
        T |= suffixes(w)
    return BasicNbhd(frozenset(T), nb.lam)


# -- inclusion searches -------------------------------------------------------

def _outside(words, S: frozenset):
    return [w for w in words if w not in S]


def _first_outside(words, S: frozenset) -> Optional[Word]:
    for w in words:
        if w not in S:
            return w
    return None


def _completions(prefix: Word, A: frozenset, exclude: frozenset, max_len: int) -> Optional[Word]:
    """Some q of length <= max_len, outside ``exclude``, with ``prefix q`` in A."""
    for w in sorted(A):
        q = strip_prefix(w, prefix)
        if q is not None and len(q) <= max_len and q not in exclude:
            return q
    return None


def find_right_inclusion_failure(x: PElement, nb: BasicNbhd, B: BasicNbhd,
                                 max_len: int, method: str = "factored"
                                 ) -> Optional[Tuple[PElement, PElement]]:
    """Search ``y`` in U_B(0) (words <= max_len) with ``x y`` outside U_A(0).

    ``brute`` multiplies every pair.  ``factored`` is exact over the same
    ball but splits ``y = <c|e><e|d>``: the left factor fixes
    ``x <c|e> = <p|q>`` and then ``x y = <p|q d>``, so only the finitely many
    d that complete q to a word of A need inspecting.
    """
    if method == "brute":
        for y in iter_ball(x.lam, max_len):
            if u_member(B, y):
                z = multiply(x, y)
                if not u_member(nb, z):
                    return y, z
        return None
    words = enumerate_words(x.lam, max_len)
    eps = Word.empty(x.lam)
    any_d = _first_outside(words, B.A)
    if any_d is None:
        return None
    for c in _outside(words, B.A):
        z = multiply(x, PElement(c, eps))
        if z.is_zero:
            continue
        d = any_d if z.u in nb.A else _completions(z.v, nb.A, B.A, max_len)
        if d is not None:
            y = PElement(c, d)
            return y, multiply(x, y)
    return None


def find_left_inclusion_failure(x: PElement, nb: BasicNbhd, D: BasicNbhd,
                                max_len: int, method: str = "factored"
                                ) -> Optional[Tuple[PElement, PElement]]:
    """Search ``y`` in U_D(0) (words <= max_len) with ``y x`` outside U_A(0)."""
    if method == "brute":
        for y in iter_ball(x.lam, max_len):
            if u_member(D, y):
                z = multiply(y, x)
                if not u_member(nb, z):
                    return y, z
        return None
    words = enumerate_words(x.lam, max_len)
    eps = Word.empty(x.lam)
    any_c = _first_outside(words, D.A)
    if any_c is None:
        return None
    for d in _outside(words, D.A):
        # <c|d> x = <c|e> (<e|d> x) = <p c | q>
        z = multiply(PElement(eps, d), x)
        if z.is_zero:
            continue
        c = any_c if z.v in nb.A else _completions(z.u, nb.A, D.A, max_len)
        if c is not None:
            y = PElement(c, d)
            return y, multiply(y, x)
    return None


def find_product_inclusion_failure(nb: BasicNbhd, T: BasicNbhd, max_len: int,
                                   method: str = "factored"
                                   ) -> Optional[Tuple[PElement, PElement, PElement]]:
    """Search ``y, z`` in U_T(0) (words <= max_len) with ``y z`` outside U_A(0)."""
    lam = nb.lam
    if method == "brute":
        members = [y for y in iter_ball(lam, max_len) if u_member(T, y)]
        for y in members:
            for z in members:
                p = multiply(y, z)
                if not u_member(nb, p):
                    return y, z, p
        return None
    words = enumerate_words(lam, max_len)
    eps = Word.empty(lam)
    free = _outside(words, T.A)
    if not free:
        return None
    any_w = free[0]
    for b in free:
        for c in free:
            # <a|b><c|d> = <a|e> (<e|b><c|e>) <e|d> = <m_u a | m_v d>
            m = multiply(PElement(eps, b), PElement(c, eps))
            if m.is_zero:
                continue
            a = _completions(m.u, nb.A, T.A, max_len)
            d = _completions(m.v, nb.A, T.A, max_len)
            if a is not None or d is not None:
                y = PElement(a if a is not None else any_w, b)
                z = PElement(c, d if d is not None else any_w)
                return y, z, multiply(y, z)
    return None


def inversion_failure(nb: BasicNbhd, max_len: int) -> Optional[PElement]:
    for x in iter_ball(nb.lam, max_len):
        if u_member(nb, x) != u_member(nb, invert(x)):
            return x
    return None


def inversion_witness_check(nb: BasicNbhd, max_len: int) -> bool:
    return inversion_failure(nb, max_len) is None


def projections(elements: Iterable[PElement]) -> list:
    """``(x, x x^-1, x^-1 x)`` for each x."""
    return [(x, rr(x), ll(x)) for x in elements]


def coarseness_failure(nb: BasicNbhd, max_len: int, projected=None) -> Optional[PElement]:
    """First x where membership in U_A(0) disagrees with
    ``x x^-1`` and ``x^-1 x`` both avoiding the idempotents ``<a|a>``, a in A.

    ``projected`` may supply precomputed ``projections`` of the ball.
    """
    E_A = {PElement(a, a) for a in nb.A}
    if projected is None:
        projected = projections(iter_ball(nb.lam, max_len))
    for x, r, l in projected:
        expected = r not in E_A and l not in E_A
        if u_member(nb, x) != expected:
            return x
    return None


def coarseness_identity_check(nb: BasicNbhd, max_len: int) -> bool:
    return coarseness_failure(nb, max_len) is None


def chain_intersection_check(nb: BasicNbhd, spec: ChainSpec, n: int) -> Tuple[int, int]:
    """(hits, misses) of the chain idempotents e_0, ..., e_n against U_A(0)."""
    hits = misses = 0
    for e in chain_prefix(spec, n):
        if u_member(nb, e):
            hits += 1
        else:
            misses += 1
    return hits, misses
