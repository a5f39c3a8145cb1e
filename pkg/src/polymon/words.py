"""Words of the free monoid on generators p1, ..., p_lam.

A word is stored as a tuple of 1-based generator indices together with the
alphabet size.  Everything downstream (normal forms, neighbourhoods, filter
points) is built out of the suffix/prefix operations defined here.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Optional, Tuple


class AlphabetError(ValueError):
    """Raised when words over different alphabets are combined."""


class Word:
    __slots__ = ("letters", "lam", "_hash")

    def __init__(self, letters: Iterable[int] = (), lam: int = 2):
        letters = tuple(letters)
        if lam < 1:
            raise ValueError(f"alphabet size must be >= 1, got {lam}")
        for g in letters:
            if not 1 <= g <= lam:
                raise ValueError(f"generator index {g} out of range [1, {lam}]")
        self.letters = letters
        self.lam = lam
        self._hash = None

    @classmethod
    def _make(cls, letters: Tuple[int, ...], lam: int) -> "Word":
        # unchecked constructor for letters already known to be in range
        w = object.__new__(cls)
        w.letters = letters
        w.lam = lam
        w._hash = None
        return w

    @classmethod
    def empty(cls, lam: int = 2) -> "Word":
        return cls((), lam)

    @classmethod
    def parse(cls, text: str, lam: int = 2) -> "Word":
        """Read the canonical text form: ``e`` or juxtaposed tokens ``p1p2``."""
        text = text.strip()
        if text in ("", "e", "1"):
            return cls((), lam)
        if not re.fullmatch(r"(p\d+)+", text):
            raise ValueError(f"not a word: {text!r}")
        return cls((int(d) for d in re.findall(r"p(\d+)", text)), lam)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word._make(self.letters[i], self.lam)
        return self.letters[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters and self.lam == other.lam

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.letters, self.lam))
        return self._hash

    def __lt__(self, other: "Word") -> bool:
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __repr__(self) -> str:
        return f"Word({self})"

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return "".join(f"p{g}" for g in self.letters)

    def to_json(self) -> list:
        return list(self.letters)

    @classmethod
    def from_json(cls, data, lam: int = 2) -> "Word":
        return cls(data, lam)


def _check(x: Word, y: Word) -> None:
    if x.lam != y.lam:
        raise AlphabetError(f"alphabet mismatch: {x.lam} vs {y.lam}")


def concat(x: Word, y: Word) -> Word:
    _check(x, y)
    return Word._make(x.letters + y.letters, x.lam)


def strip_suffix(w: Word, s: Word) -> Optional[Word]:
    """Return q with ``q * s == w``, or None when s is not a suffix of w."""
    _check(w, s)
    n = len(s.letters)
    if n > len(w.letters):
        return None
    if n == 0:
        return w
    if w.letters[-n:] != s.letters:
        return None
    return Word._make(w.letters[:-n], w.lam)


def strip_prefix(w: Word, s: Word) -> Optional[Word]:
    """Return q with ``s * q == w``, or None when s is not a prefix of w."""
    _check(w, s)
    n = len(s.letters)
    if w.letters[:n] != s.letters or n > len(w.letters):
        return None
    return Word._make(w.letters[n:], w.lam)


def is_suffix(s: Word, w: Word) -> bool:
    return strip_suffix(w, s) is not None


def suffixes(w: Word) -> frozenset:
    lt = w.letters
    return frozenset(Word._make(lt[i:], w.lam) for i in range(len(lt) + 1))


def strip_head_power(w: Word, g: int) -> Tuple[int, Word]:
    """Split ``w = g^count * tail`` where tail does not begin with g."""
    if not 1 <= g <= w.lam:
        raise ValueError(f"generator index {g} out of range [1, {w.lam}]")
    lt = w.letters
    count = 0
    while count < len(lt) and lt[count] == g:
        count += 1
    return count, Word._make(lt[count:], w.lam)


def power(g: int, n: int, lam: int = 2) -> Word:
    return Word((g,) * n, lam)


def enumerate_words(lam: int, max_len: int) -> list:
    """All words of length <= max_len in length-then-lexicographic order."""
    if lam < 1:
        raise ValueError("alphabet size must be >= 1")
    out = []
    gens = range(1, lam + 1)
    for k in range(max_len + 1):
        for letters in itertools.product(gens, repeat=k):
            out.append(Word._make(letters, lam))
    return out


def parse_word_set(text: str, lam: int = 2) -> frozenset:
    """Comma separated words, e.g. ``p1,p2p1,e``; an empty string is the empty set."""
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(Word.parse(part, lam) for part in text.split(","))
