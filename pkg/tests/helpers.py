"""Small constructors shared by the test modules."""

from polymon.extension import Filter
from polymon.polycyclic import PElement
from polymon.words import Word


def w(text, lam=2):
    return Word.parse(text, lam)


def el(u, v, lam=2):
    return PElement(w(u, lam), w(v, lam))


def F(a, b):
    return Filter(w(a), w(b))


ZERO = PElement.zero(2)
ONE = PElement.one(2)
