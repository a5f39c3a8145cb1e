"""Green's relations on P_lam and chains of idempotents."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from .polycyclic import PElement, invert, is_idempotent, multiply, nat_leq
from .words import AlphabetError, Word


def rr(x: PElement) -> PElement:
    """``x x^-1``; equals ``<u|u>`` for ``x = <u|v>``."""
    return multiply(x, invert(x))


def ll(x: PElement) -> PElement:
    """``x^-1 x``; equals ``<v|v>`` for ``x = <u|v>``."""
    return multiply(invert(x), x)


def _check(x: PElement, y: PElement) -> None:
    if x.lam != y.lam:
        raise AlphabetError(f"alphabet mismatch: {x.lam} vs {y.lam}")


def green_R(x: PElement, y: PElement) -> bool:
    _check(x, y)
    return rr(x) == rr(y)


def green_L(x: PElement, y: PElement) -> bool:
    _check(x, y)
    return ll(x) == ll(y)


def green_H(x: PElement, y: PElement) -> bool:
    return green_R(x, y) and green_L(x, y)


def green_D(x: PElement, y: PElement) -> bool:
    # P_lam is 0-bisimple: the non-zero elements form a single D-class
    _check(x, y)
    return x.is_zero == y.is_zero


GREEN = {"R": green_R, "L": green_L, "H": green_H, "D": green_D}


@dataclass(frozen=True)
class DWitness:
    """Element b with ``x R b L y`` and the four multipliers proving it."""

    b: PElement
    s: PElement
    s_prime: PElement
    t: PElement
    t_prime: PElement

    def holds_for(self, x: PElement, y: PElement) -> bool:
        return (
            multiply(x, self.s) == self.b
            and multiply(self.b, self.s_prime) == x
            and multiply(self.t, self.b) == y
            and multiply(self.t_prime, y) == self.b
        )


def d_witness(x: PElement, y: PElement) -> DWitness:
    _check(x, y)
    if x.is_zero or y.is_zero:
        raise ValueError("D-witnesses exist only between non-zero elements")
    u, v = x.u, x.v
    s, t = y.u, y.v
    return DWitness(
        b=PElement(u, t),
        s=PElement(v, t),
        s_prime=PElement(t, v),
        t=PElement(s, u),
        t_prime=PElement(u, s),
    )


@dataclass(frozen=True)
class ChainSpec:
    """A maximal chain of idempotents, given by the stream of prepended letters.

    The letters of ``preperiod`` are used first, then ``period`` repeats
    forever.  The k-th idempotent is ``<w_k|w_k>`` where ``w_{k+1}`` is the
    next letter followed by ``w_k``.
    """

    preperiod: Word
    period: Word

    def __post_init__(self):
        if len(self.period) == 0:
            raise ValueError("period must be non-empty")
        if self.preperiod.lam != self.period.lam:
            raise AlphabetError("preperiod and period use different alphabets")

    @property
    def lam(self) -> int:
        return self.period.lam

    def letter(self, k: int) -> int:
        pre = self.preperiod.letters
        if k < len(pre):
            return pre[k]
        per = self.period.letters
        return per[(k - len(pre)) % len(per)]

    def to_json(self) -> dict:
        return {"preperiod": self.preperiod.to_json(), "period": self.period.to_json()}

    @classmethod
    def from_json(cls, data: dict, lam: int = 2) -> "ChainSpec":
        return cls(Word(data["preperiod"], lam), Word(data["period"], lam))


def chain_prefix(spec: ChainSpec, n: int) -> List[PElement]:
    """The idempotents e_0 = 1, e_1, ..., e_n of the chain."""
    if n < 1:
        raise ValueError("n must be >= 1")
    letters: tuple = ()
    out = [PElement.one(spec.lam)]
    for k in range(n):
        letters = (spec.letter(k),) + letters
        w = Word(letters, spec.lam)
        out.append(PElement(w, w))
    return out


def is_omega_chain_prefix(es: Sequence[PElement]) -> bool:
    if not es or es[0] != PElement.one(es[0].lam):
        return False
    for e in es:
        if e.is_zero or not is_idempotent(e):
            return False
    for hi, lo in zip(es, es[1:]):
        if lo == hi or not nat_leq(lo, hi):
            return False
        # cover: nothing strictly between, i.e. the words differ by one letter
        if len(lo.u) != len(hi.u) + 1:
            return False
    return True
