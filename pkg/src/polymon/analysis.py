"""Verification suites over finite samples, and the congruence saturation oracle."""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

from .polycyclic import PElement, is_idempotent, iter_ball, multiply, nat_leq
from .words import Word, enumerate_words


def _show(x: Any) -> Any:
    if hasattr(x, "to_json"):
        from .extension import Filter, s_to_json
        if isinstance(x, Filter):
            return s_to_json(x)
        return x.to_json()
    if isinstance(x, (tuple, list)):
        return [_show(y) for y in x]
    return x


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: List[Any] = field(default_factory=list)
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, *case) -> None:
        self.failures.append(tuple(case))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": [_show(f) for f in self.failures],
            "seed": self.seed,
        }


def check_inverse_axioms(elements: Sequence, mul: Callable, inv: Callable,
                         suite: str = "axioms", max_failures: int = 10) -> SuiteReport:
    """x x' x = x and x' x x' = x' for x' = inv(x); idempotents commute; and
    no other element of the sample satisfies both identities for x."""
    rep = SuiteReport(suite)
    elements = list(elements)

    def record(*case):
        if len(rep.failures) < max_failures:
            rep.fail(*case)

    for x in elements:
        xi = inv(x)
        rep.cases += 1
        if mul(mul(x, xi), x) != x:
            record("x x^-1 x != x", x)
        if mul(mul(xi, x), xi) != xi:
            record("x^-1 x x^-1 != x^-1", x)
    idem = [e for e in elements if mul(e, e) == e]
    for e, f in itertools.combinations(idem, 2):
        rep.cases += 1
        if mul(e, f) != mul(f, e):
            record("idempotents do not commute", e, f)
    for x in elements:
        xi = inv(x)
        xx = [(y, mul(x, y)) for y in elements]
        for y, xy in xx:
            if y == xi:
                continue
            rep.cases += 1
            if mul(xy, x) == x and mul(mul(y, x), y) == y:
                record("second inverse", x, y)
    return rep


def random_triples(sampler: Callable[[random.Random], Any], count: int, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        yield sampler(rng), sampler(rng), sampler(rng)


def check_associativity(triples: Iterable, mul: Callable, suite: str = "assoc",
                        seed: Optional[int] = None) -> SuiteReport:
    """Stops at the first failing triple."""
    rep = SuiteReport(suite, seed=seed)
    for x, y, z in triples:
        rep.cases += 1
        if mul(mul(x, y), z) != mul(x, mul(y, z)):
            rep.fail(x, y, z)
            break
    return rep


def random_pelement(rng: random.Random, lam: int, max_len: int, zero_rate: float = 0.02) -> PElement:
    if rng.random() < zero_rate:
        return PElement.zero(lam)

    def w():
        n = rng.randint(0, max_len)
        return Word._make(tuple(rng.randint(1, lam) for _ in range(n)), lam)

    return PElement(w(), w())


def check_zero_e_unitary(ball: Sequence[PElement], leq: Callable = nat_leq,
                         suite: str = "eunitary") -> SuiteReport:
    """Every x above a non-zero idempotent is itself idempotent."""
    rep = SuiteReport(suite)
    ball = list(ball)
    idem = [e for e in ball if not e.is_zero and is_idempotent(e)]
    for e in idem:
        for x in ball:
            rep.cases += 1
            if leq(e, x) and not is_idempotent(x):
                rep.fail(e, x)
    return rep


# -- congruence saturation ----------------------------------------------------

class _DisjointSets:
    def __init__(self):
        self.parent: Dict[Any, Any] = {}

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        return True

    def classes(self) -> List[frozenset]:
        groups: Dict[Any, set] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), set()).add(x)
        return [frozenset(g) for g in groups.values()]


class Ball:
    """Elements of P_lam whose words have length <= max_len (plus zero), lazily."""

    def __init__(self, lam: int, max_len: int):
        self.lam = lam
        self.max_len = max_len

    def __contains__(self, x: PElement) -> bool:
        return x.lam == self.lam and (x.is_zero or (len(x.u) <= self.max_len and len(x.v) <= self.max_len))

    def __len__(self) -> int:
        words = sum(self.lam ** k for k in range(self.max_len + 1))
        return words * words + 1

    def __iter__(self):
        return iter_ball(self.lam, self.max_len)


@functools.lru_cache(maxsize=8)
def _multiplier_shells(lam: int, mult_len: int) -> tuple:
    """All pairs (a, b) of non-zero multipliers with words <= mult_len, ordered
    by the longest word involved, so short multipliers are tried first."""
    words = enumerate_words(lam, mult_len)
    els = [(max(len(u), len(v)), PElement(u, v)) for u in words for v in words]
    pairs = [(max(ra, rb), a, b) for ra, a in els for rb, b in els]
    pairs.sort(key=lambda t: t[0])
    return tuple((a, b) for _, a, b in pairs)


COLLAPSED = "Collapsed"
INCONCLUSIVE = "Inconclusive"


@dataclass
class CongruenceState:
    """Outcome of saturating one pair.

    ``classes`` lists the non-singleton classes among the elements touched;
    once zero and the identity meet, every ball element is congruent to zero,
    and the classes are not enumerated further.
    """

    ball: Ball
    classes: List[frozenset]
    status: str
    multiplier_depth: int
    unions: int

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "depth": self.multiplier_depth,
            "unions": self.unions,
            "ball_len": self.ball.max_len,
            "classes": len(self.classes),
        }


def congruence_saturate(x: PElement, y: PElement, ball_len: int, mult_len: int,
                        max_rounds: Optional[int] = None) -> CongruenceState:
    """Close ``x ~ y`` under two-sided multiplication inside a ball.

    Each round takes the pairs merged in the previous round and, for all
    non-zero multipliers a, b with words of length <= mult_len, merges
    ``a u b`` with ``a v b`` when both stay in the ball.  The state is
    Collapsed as soon as zero and the identity share a class, and
    Inconclusive once a round adds nothing new.
    """
    if x == y:
        raise ValueError("saturation needs two distinct elements")
    lam = x.lam
    ball = Ball(lam, ball_len)
    if x not in ball or y not in ball:
        raise ValueError("both elements must lie in the ball")
    zero, one = PElement.zero(lam), PElement.one(lam)
    shells = _multiplier_shells(lam, mult_len)
    uf = _DisjointSets()
    uf.union(x, y)
    frontier = [(x, y)]
    unions = 1
    depth = 0
    while frontier and (max_rounds is None or depth < max_rounds):
        depth += 1
        nxt = []
        for u, v in frontier:
            for a, b in shells:
                au, av = multiply(a, u), multiply(a, v)
                if au == av:
                    continue
                p, q = multiply(au, b), multiply(av, b)
                if p == q or p not in ball or q not in ball:
                    continue
                if uf.union(p, q):
                    unions += 1
                    nxt.append((p, q))
                    if uf.find(zero) == uf.find(one):
                        return CongruenceState(ball, [], COLLAPSED, depth, unions)
        frontier = nxt
        if uf.find(zero) == uf.find(one):
            return CongruenceState(ball, [], COLLAPSED, depth, unions)
    classes = [c for c in uf.classes() if len(c) > 1]
    return CongruenceState(ball, classes, INCONCLUSIVE, depth, unions)
