"""An inverse monoid S containing P_2 as a dense discrete subsemigroup.

S adds to P_2 one point ``F[a|b]`` for every pair of words a, b that do not
begin with p1.  The point is the limit of the elements
``<p1^k a | p1^m b>`` as k and m grow; its basic neighbourhoods are

    U_n(F[a|b]) = {F[a|b]} u {<p1^k a | p1^m b> : k, m > n}

Elements of P_2 stay isolated.  A finite element of S is just a
``PElement`` over two generators; a filter point is a ``Filter``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple, Union

from .matrixunits import BElement
from .polycyclic import PElement, invert, multiply
from .words import Word, concat, strip_head_power, strip_suffix

LAM = 2
P1 = 1


def _word(w) -> Word:
    if isinstance(w, Word):
        if w.lam != LAM:
            raise ValueError("filter points live over two generators")
        return w
    return Word(w, LAM)


class Filter:
    """The filter point ``F[a|b]``; neither word may begin with p1."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a, b = _word(a), _word(b)
        if a.letters[:1] == (P1,) or b.letters[:1] == (P1,):
            raise ValueError(f"filter words must not begin with p1: F[{a}|{b}]")
        self.a = a
        self.b = b

    @classmethod
    def _make(cls, a: Word, b: Word) -> "Filter":
        # unchecked constructor; callers guarantee head-free words over p1, p2
        f = object.__new__(cls)
        f.a = a
        f.b = b
        return f

    @property
    def lam(self) -> int:
        return LAM

    def __eq__(self, other) -> bool:
        if not isinstance(other, Filter):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash(("F", self.a.letters, self.b.letters))

    def __mul__(self, other):
        return s_multiply(self, other)

    def __repr__(self) -> str:
        return f"F[{self.a}|{self.b}]"

    __str__ = __repr__

    def swap(self) -> "Filter":
        return Filter._make(self.b, self.a)

    def to_json(self) -> dict:
        return {"kind": "filter", "a": self.a.to_json(), "b": self.b.to_json()}


SElement = Union[PElement, Filter]


def s_to_json(x: SElement) -> dict:
    if isinstance(x, Filter):
        return x.to_json()
    return {"kind": "finite", "elem": x.to_json()}


def s_from_json(data: dict) -> SElement:
    if data.get("kind") == "filter":
        return Filter(data["a"], data["b"])
    if data.get("kind") == "finite":
        return PElement.from_json(data["elem"], LAM)
    raise ValueError(f"unknown element kind {data.get('kind')!r}")


def _check_finite(x: PElement) -> None:
    if x.lam != LAM:
        raise ValueError("finite elements of S must lie in P_2")


def normalize_filter(a, b) -> Filter:
    """Strip leading p1's: ``p1^k a`` and ``a`` give the same filter."""
    _, a = strip_head_power(_word(a), P1)
    _, b = strip_head_power(_word(b), P1)
    return Filter(a, b)


def _left_action(x: PElement, f: Filter) -> SElement:
    # <a|b> . F[c|d]
    a, b = x.u, x.v
    e = strip_suffix(f.a, b)
    if e is not None:
        return normalize_filter(concat(e, a), f.b)
    t, rest = strip_head_power(b, P1)
    if t >= 1 and rest == f.a:
        return Filter(strip_head_power(a, P1)[1], f.b)
    return PElement.zero(LAM)


def _right_action(f: Filter, x: PElement) -> SElement:
    # F[c|d] . <a|b>
    a, b = x.u, x.v
    e = strip_suffix(f.b, a)
    if e is not None:
        return normalize_filter(f.a, concat(e, b))
    t, rest = strip_head_power(a, P1)
    if t >= 1 and rest == f.b:
        return Filter(f.a, strip_head_power(b, P1)[1])
    return PElement.zero(LAM)


def s_multiply(x: SElement, y: SElement) -> SElement:
    xf, yf = type(x) is Filter, type(y) is Filter
    if xf and yf:
        if x.b == y.a:
            return Filter._make(x.a, y.b)
        return PElement.zero(LAM)
    if not xf:
        _check_finite(x)
    if not yf:
        _check_finite(y)
    if not xf and not yf:
        return multiply(x, y)
    if (not xf and x.is_zero) or (not yf and y.is_zero):
        return PElement.zero(LAM)
    if yf:
        return _left_action(x, y)
    return _right_action(x, y)


def s_invert(x: SElement) -> SElement:
    if isinstance(x, Filter):
        return x.swap()
    _check_finite(x)
    return invert(x)


def s_is_idempotent(x: SElement) -> bool:
    return s_multiply(x, x) == x


# -- neighbourhoods -----------------------------------------------------------

@dataclass(frozen=True)
class SNbhd:
    """``U_n(center)``."""

    center: Filter
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be a positive integer")

    def __contains__(self, x: SElement) -> bool:
        return un_member(self, x)

    def base_element(self, k: int, m: int) -> PElement:
        if k <= self.n or m <= self.n:
            raise ValueError(f"exponents must exceed {self.n}")
        return base_element(self.center, k, m)

    def finite_members(self, span: int) -> Iterator[PElement]:
        """Base elements with both exponents in ``(n, n + span]``."""
        n = self.n
        for k in range(n + 1, n + span + 1):
            for m in range(n + 1, n + span + 1):
                yield base_element(self.center, k, m)


def base_element(f: Filter, k: int, m: int) -> PElement:
    """``<p1^k a | p1^m b>`` for ``f = F[a|b]``."""
    return PElement._make(Word._make((P1,) * k + f.a.letters, LAM),
                          Word._make((P1,) * m + f.b.letters, LAM), LAM)


def _split(letters: tuple) -> Tuple[int, tuple]:
    k = 0
    while k < len(letters) and letters[k] == P1:
        k += 1
    return k, letters[k:]


def decompose(x: PElement) -> Optional[Tuple[int, int, Filter]]:
    """Write a non-zero element as ``<p1^k a | p1^m b>`` with a, b p1-free at the head."""
    if x.is_zero:
        return None
    k, a = strip_head_power(x.u, P1)
    m, b = strip_head_power(x.v, P1)
    return k, m, Filter(a, b)


def un_member(nb: SNbhd, x: SElement) -> bool:
    if type(x) is Filter:
        return x == nb.center
    _check_finite(x)
    if x.u is None:
        return False
    k, a = _split(x.u.letters)
    if k <= nb.n or a != nb.center.a.letters:
        return False
    m, b = _split(x.v.letters)
    return m > nb.n and b == nb.center.b.letters


# -- continuity witnesses -----------------------------------------------------

def right_continuity_witness(x: PElement, center: Filter, n: int) -> int:
    """m with ``x * U_m(center)`` inside the n-th neighbourhood of ``x * center``.

    When ``x * center`` is zero the target neighbourhood is ``{0}`` (zero is
    isolated), and m is chosen large enough that no base element of the
    source meets x in the polycyclic product.
    """
    _check_finite(x)
    if n < 1:
        raise ValueError("n must be a positive integer")
    if x.is_zero:
        return n
    b = x.v
    if strip_suffix(center.a, b) is not None:
        return n
    t, rest = strip_head_power(b, P1)
    if t >= 1 and rest == center.a:
        return n + t
    return max(n, len(b))


def left_continuity_witness(x: PElement, center: Filter, n: int) -> int:
    """m with ``U_m(center) * x`` inside the n-th neighbourhood of ``center * x``."""
    _check_finite(x)
    return right_continuity_witness(invert(x), center.swap(), n)


def mul_continuity_witness(f: Filter, g: Filter, n: int) -> Tuple[int, int]:
    """(m, m') with ``U_m(f) * U_m'(g)`` inside the n-th neighbourhood of ``f g``.

    For matching filters (f = F[a|b], g = F[b|d]) this is (n, n).  When
    ``f g = 0`` the exponents must also exceed the lengths of the inner words
    so that no pair of base elements still overlaps.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if f.b == g.a:
        return n, n
    m = max(n, len(f.b), len(g.a))
    return m, m


def _target_ok(product: SElement, target: SElement, n: int) -> bool:
    if isinstance(target, Filter):
        return un_member(SNbhd(target, n), product)
    return product == target


def right_continuity_failure(x: PElement, center: Filter, n: int, m: Optional[int] = None,
                             span: int = 10) -> Optional[Tuple[SElement, SElement]]:
    """Check ``x * U_m(center)`` against the n-neighbourhood of the limit, with
    base exponents in ``(m, m + span]``; return the first offender."""
    if m is None:
        m = right_continuity_witness(x, center, n)
    target = s_multiply(x, center)
    source = SNbhd(center, m)
    for y in itertools.chain([center], source.finite_members(span)):
        p = s_multiply(x, y)
        if not _target_ok(p, target, n):
            return y, p
    return None


def left_continuity_failure(x: PElement, center: Filter, n: int, m: Optional[int] = None,
                            span: int = 10) -> Optional[Tuple[SElement, SElement]]:
    if m is None:
        m = left_continuity_witness(x, center, n)
    target = s_multiply(center, x)
    source = SNbhd(center, m)
    for y in itertools.chain([center], source.finite_members(span)):
        p = s_multiply(y, x)
        if not _target_ok(p, target, n):
            return y, p
    return None


def mul_continuity_failure(f: Filter, g: Filter, n: int, span: int = 10
                           ) -> Optional[Tuple[SElement, SElement, SElement]]:
    mf, mg = mul_continuity_witness(f, g, n)
    target = s_multiply(f, g)
    left = [f, *SNbhd(f, mf).finite_members(span)]
    right = [g, *SNbhd(g, mg).finite_members(span)]
    for y in left:
        for z in right:
            p = s_multiply(y, z)
            if not _target_ok(p, target, n):
                return y, z, p
    return None


def right_limit_failure(x: PElement, center: Filter, n: int, span: int = 10
                        ) -> Optional[Tuple[PElement, SElement]]:
    """Same verdict as ``right_continuity_failure`` on the finite base elements,
    computed row by row: ``x <p1^k c | p1^m d> = <P | Q p1^m d>`` where
    ``<P|Q> = x <p1^k c|e>``, so one product per k serves every m."""
    _check_finite(x)
    target = s_multiply(x, center)
    m0 = right_continuity_witness(x, center, n)
    ms = range(m0 + 1, m0 + span + 1)
    eps = Word._make((), LAM)
    d = center.b.letters
    for k in ms:
        z = multiply(x, PElement._make(Word._make((P1,) * k + center.a.letters, LAM), eps, LAM))
        if z.u is None or type(target) is not Filter:
            m = m0 + 1
            if target == z:
                continue
        else:
            h, a = _split(z.u.letters)
            bad_row = h <= n or a != target.a.letters
            for m in ms:
                if bad_row:
                    break
                h, b = _split(z.v.letters + (P1,) * m + d)
                if h <= n or b != target.b.letters:
                    break
            else:
                continue
        y = base_element(center, k, m)
        return y, s_multiply(x, y)
    return None


def left_limit_failure(x: PElement, center: Filter, n: int, span: int = 10
                       ) -> Optional[Tuple[PElement, SElement]]:
    """Mirror of ``right_limit_failure``: ``<p1^k c | p1^m d> x = <P p1^k c | Q>``
    where ``<P|Q> = <e|p1^m d> x``."""
    _check_finite(x)
    target = s_multiply(center, x)
    m0 = left_continuity_witness(x, center, n)
    ks = range(m0 + 1, m0 + span + 1)
    eps = Word._make((), LAM)
    c = center.a.letters
    for m in ks:
        z = multiply(PElement._make(eps, Word._make((P1,) * m + center.b.letters, LAM), LAM), x)
        if z.u is None or type(target) is not Filter:
            k = m0 + 1
            if target == z:
                continue
        else:
            h, b = _split(z.v.letters)
            bad_row = h <= n or b != target.b.letters
            for k in ks:
                if bad_row:
                    break
                h, a = _split(z.u.letters + (P1,) * k + c)
                if h <= n or a != target.a.letters:
                    break
            else:
                continue
        y = base_element(center, k, m)
        return y, s_multiply(y, x)
    return None


# -- the ideal of filter points and B_omega -----------------------------------

def filter_word_index(w: Word) -> int:
    """Position of a p1-head-free word in length-lexicographic order.

    The order is e, p2, p2p1, p2p2, p2p1p1, ...: reading p1 as 0 and p2 as 1
    turns such a word into the binary numeral of its index.
    """
    idx = 0
    for g in w.letters:
        idx = 2 * idx + (g - 1)
    return idx


def filter_word(idx: int) -> Word:
    if idx < 0:
        raise ValueError("index must be a natural number")
    return Word((2 if bit == "1" else 1 for bit in bin(idx)[2:]) if idx else (), LAM)


def t_isomorphism(x: SElement) -> BElement:
    if isinstance(x, Filter):
        return BElement(filter_word_index(x.a), filter_word_index(x.b))
    _check_finite(x)
    if not x.is_zero:
        raise ValueError("only filter points and zero lie in the ideal T")
    return BElement.zero()


def t_inverse(x: BElement) -> SElement:
    if x.is_zero:
        return PElement.zero(LAM)
    return Filter(filter_word(x.i), filter_word(x.j))


# -- density, separation, dichotomy -------------------------------------------

def density_check(center: Filter, n: int, count: int) -> bool:
    """At least ``count`` distinct elements of P_2 lie in ``U_n(center)``."""
    if count < 1:
        raise ValueError("count must be >= 1")
    nb = SNbhd(center, n)
    r = 1
    while r * r < count:
        r += 1
    found = set()
    for y in nb.finite_members(r):
        if not un_member(nb, y):
            return False
        found.add(y)
    return len(found) >= count


def hausdorff_failure(f: Filter, g: Filter, n: int, span: int = 10) -> Optional[PElement]:
    """An element of P_2 in both ``U_n(f)`` and ``U_n(g)``, searched over base
    exponents in ``(n, n + span]``; None when they are disjoint there."""
    if f == g:
        raise ValueError("separation needs distinct points")
    ng = SNbhd(g, n)
    for y in SNbhd(f, n).finite_members(span):
        if un_member(ng, y):
            return y
    return None


def dichotomy_check(x: SElement) -> bool:
    """Both ``x x^-1`` and ``x^-1 x`` are filter points."""
    if not isinstance(x, Filter):
        raise ValueError("the dichotomy concerns filter points")
    xi = s_invert(x)
    return isinstance(s_multiply(x, xi), Filter) and isinstance(s_multiply(xi, x), Filter)


def head_free_words(max_len: int) -> List[Word]:
    """Words over p1, p2 of length <= max_len not beginning with p1."""
    out = [Word((), LAM)]
    for k in range(max_len):
        for tail in itertools.product((1, 2), repeat=k):
            out.append(Word((2,) + tail, LAM))
    return out


def filters(max_len: int) -> List[Filter]:
    ws = head_free_words(max_len)
    return [Filter(a, b) for a in ws for b in ws]
