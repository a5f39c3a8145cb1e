"""The polycyclic monoid P_lam.

Non-zero elements are kept in the normal form ``u^-1 v`` (a pair of words);
the product of two such pairs is decided by a suffix test on the inner
words.  ``reduce`` is an independent route to the same values: it rewrites a
raw string of generators and inverse generators with the defining relations
``p_i p_i^-1 = 1`` and ``p_i p_j^-1 = 0``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .words import AlphabetError, Word, enumerate_words


class PElement:
    """Zero, or the pair ``<u|v>`` standing for ``u^-1 v``."""

    __slots__ = ("u", "v", "lam", "_hash")

    def __init__(self, u: Optional[Word], v: Optional[Word], lam: Optional[int] = None):
        if (u is None) != (v is None):
            raise ValueError("both words must be given, or neither (zero)")
        if u is not None:
            if u.lam != v.lam:
                raise AlphabetError(f"alphabet mismatch: {u.lam} vs {v.lam}")
            if lam is not None and lam != u.lam:
                raise AlphabetError(f"alphabet mismatch: {lam} vs {u.lam}")
            lam = u.lam
        elif lam is None:
            raise ValueError("zero needs an explicit alphabet size")
        self.u = u
        self.v = v
        self.lam = lam
        self._hash = None

    @classmethod
    def _make(cls, u: Optional[Word], v: Optional[Word], lam: int) -> "PElement":
        # unchecked constructor for internal products
        x = object.__new__(cls)
        x.u = u
        x.v = v
        x.lam = lam
        x._hash = None
        return x

    @classmethod
    def zero(cls, lam: int = 2) -> "PElement":
        z = _ZEROS.get(lam)
        if z is None:
            z = _ZEROS[lam] = cls._make(None, None, lam)
        return z

    @classmethod
    def one(cls, lam: int = 2) -> "PElement":
        e = Word.empty(lam)
        return cls(e, e)

    @classmethod
    def pair(cls, u, v, lam: int = 2) -> "PElement":
        """Build ``<u|v>`` from words or plain letter sequences."""
        if not isinstance(u, Word):
            u = Word(u, lam)
        if not isinstance(v, Word):
            v = Word(v, lam)
        return cls(u, v)

    @property
    def is_zero(self) -> bool:
        return self.u is None

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, PElement):
            return NotImplemented
        return self.lam == other.lam and self.u == other.u and self.v == other.v

    def __hash__(self) -> int:
        if self._hash is None:
            u, v = self.u, self.v
            self._hash = hash((None, self.lam) if u is None else (u.letters, v.letters, self.lam))
        return self._hash

    def __mul__(self, other: "PElement") -> "PElement":
        return multiply(self, other)

    def __invert__(self) -> "PElement":
        return invert(self)

    def __repr__(self) -> str:
        if self.is_zero:
            return f"PElement.zero({self.lam})"
        return f"<{self.u}|{self.v}>"

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        if self.is_zero:
            return {"kind": "zero"}
        return {"kind": "pair", "u": self.u.to_json(), "v": self.v.to_json()}

    @classmethod
    def from_json(cls, data: dict, lam: int = 2) -> "PElement":
        kind = data.get("kind")
        if kind == "zero":
            return cls.zero(lam)
        if kind == "pair":
            return cls(Word(data["u"], lam), Word(data["v"], lam))
        raise ValueError(f"unknown element kind {kind!r}")


# shared zero per alphabet size; elements are immutable
_ZEROS: dict = {}


def _same_alphabet(x: PElement, y: PElement) -> None:
    if x.lam != y.lam:
        raise AlphabetError(f"alphabet mismatch: {x.lam} vs {y.lam}")


def multiply(x: PElement, y: PElement) -> PElement:
    lam = x.lam
    if lam != y.lam:
        raise AlphabetError(f"alphabet mismatch: {lam} vs {y.lam}")
    if x.u is None or y.u is None:
        return PElement.zero(lam)
    b = x.v.letters
    c = y.u.letters
    nb, nc = len(b), len(c)
    # c = c1 b: b cancels against the tail of c
    if nb <= nc and (nb == 0 or c[nc - nb:] == b):
        if nb == nc:
            return PElement._make(x.u, y.v, lam)
        return PElement._make(Word._make(c[:nc - nb] + x.u.letters, lam), y.v, lam)
    # b = b1 c
    if nc < nb and (nc == 0 or b[nb - nc:] == c):
        return PElement._make(x.u, Word._make(b[:nb - nc] + y.v.letters, lam), lam)
    return PElement.zero(lam)


def invert(x: PElement) -> PElement:
    if x.u is None:
        return x
    return PElement._make(x.v, x.u, x.lam)


def is_idempotent(x: PElement) -> bool:
    return x.is_zero or x.u == x.v


def nat_leq(x: PElement, y: PElement) -> bool:
    """Natural partial order: ``x <= y`` iff ``x == (x x^-1) y``."""
    _same_alphabet(x, y)
    return multiply(multiply(x, invert(x)), y) == x


def idempotent(w: Word) -> PElement:
    return PElement(w, w)


# -- generator strings and the rewriting oracle ------------------------------

class GenString:
    """A raw product of generators; each token is ``(index, inverted)``.

    ``zero`` marks an explicit 0 factor, which absorbs the whole product.
    """

    __slots__ = ("tokens", "lam", "zero")

    def __init__(self, tokens: Iterable[Tuple[int, bool]], lam: int = 2, zero: bool = False):
        tokens = tuple((int(i), bool(inv)) for i, inv in tokens)
        for i, _ in tokens:
            if not 1 <= i <= lam:
                raise ValueError(f"generator index {i} out of range [1, {lam}]")
        self.tokens = tokens
        self.lam = lam
        self.zero = zero

    def __add__(self, other: "GenString") -> "GenString":
        if self.lam != other.lam:
            raise AlphabetError(f"alphabet mismatch: {self.lam} vs {other.lam}")
        return GenString(self.tokens + other.tokens, self.lam, self.zero or other.zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenString):
            return NotImplemented
        return (self.tokens, self.lam, self.zero) == (other.tokens, other.lam, other.zero)

    def __repr__(self) -> str:
        return f"GenString({list(self.tokens)!r}, lam={self.lam}, zero={self.zero})"


def genstring(x: PElement) -> GenString:
    """Expand ``<u|v>`` as ``u_k^-1 ... u_1^-1 v_1 ... v_m``."""
    if x.is_zero:
        return GenString((), x.lam, zero=True)
    toks = [(g, True) for g in reversed(x.u.letters)]
    toks += [(g, False) for g in x.v.letters]
    return GenString(toks, x.lam)


def _find_redex(tokens: Sequence[Tuple[int, bool]], from_right: bool) -> int:
    positions = range(len(tokens) - 1)
    if from_right:
        positions = reversed(positions)
    for i in positions:
        if not tokens[i][1] and tokens[i + 1][1]:
            return i
    return -1


def reduce(s: GenString, scan: str = "left") -> PElement:
    """Normal form of a generator string by literal rewriting.

    A redex is a plain generator immediately followed by an inverted one:
    equal indices cancel, distinct indices give zero.  ``scan`` picks the
    leftmost or rightmost redex first; the system is confluent, so both
    give the same answer.
    """
    if scan not in ("left", "right"):
        raise ValueError(f"scan must be 'left' or 'right', got {scan!r}")
    if s.zero:
        return PElement.zero(s.lam)
    tokens: List[Tuple[int, bool]] = list(s.tokens)
    while True:
        i = _find_redex(tokens, scan == "right")
        if i < 0:
            break
        if tokens[i][0] != tokens[i + 1][0]:
            return PElement.zero(s.lam)
        del tokens[i:i + 2]
    inv = [g for g, flag in tokens if flag]
    plain = [g for g, flag in tokens if not flag]
    return PElement(Word(reversed(inv), s.lam), Word(plain, s.lam))


# -- text form ----------------------------------------------------------------

def render(x: PElement) -> str:
    """``0``, or ``u^-1 v`` with ``e`` for the empty word.

    A left word of length > 1 is parenthesised so the text reads back as the
    same element.
    """
    if x.is_zero:
        return "0"
    u = str(x.u)
    if len(x.u) > 1:
        u = f"({u})"
    return f"{u}^-1 {x.v}"


# -- the bicyclic monoid ------------------------------------------------------

class BicyclicElem(Tuple[int, int]):
    """``q^k p^l`` stored as the pair (k, l)."""

    def __new__(cls, k: int, l: int):
        if k < 0 or l < 0:
            raise ValueError("exponents must be non-negative")
        return tuple.__new__(cls, (k, l))

    @property
    def k(self) -> int:
        return self[0]

    @property
    def l(self) -> int:
        return self[1]

    def __repr__(self) -> str:
        return f"BicyclicElem({self[0]}, {self[1]})"


def bicyclic_mul(x: BicyclicElem, y: BicyclicElem) -> BicyclicElem:
    (k, l), (m, n) = x, y
    t = min(l, m)
    return BicyclicElem(k + m - t, l + n - t)


def embed_bicyclic(x: BicyclicElem) -> PElement:
    """Send ``q^k p^l`` to ``<p1^k|p1^l>`` in P_1."""
    k, l = x
    return PElement(Word((1,) * k, 1), Word((1,) * l, 1))


# -- balls ----------------------------------------------------------------------

def ball(lam: int, max_len: int, include_zero: bool = True) -> List[PElement]:
    """All elements whose two words have length <= max_len."""
    words = enumerate_words(lam, max_len)
    out = [PElement.zero(lam)] if include_zero else []
    out.extend(PElement(u, v) for u in words for v in words)
    return out


def iter_ball(lam: int, max_len: int) -> Iterator[PElement]:
    yield PElement.zero(lam)
    words = enumerate_words(lam, max_len)
    for u in words:
        for v in words:
            yield PElement(u, v)
