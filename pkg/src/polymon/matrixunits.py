"""The semigroup B_lam of matrix units with an adjoined zero."""

from __future__ import annotations

from typing import Optional


class BElement:
    __slots__ = ("i", "j")

    def __init__(self, i: Optional[int] = None, j: Optional[int] = None):
        if (i is None) != (j is None):
            raise ValueError("both indices must be given, or neither (zero)")
        if i is not None and (i < 0 or j < 0):
            raise ValueError("indices must be natural numbers")
        self.i = i
        self.j = j

    @classmethod
    def zero(cls) -> "BElement":
        return cls()

    @classmethod
    def unit(cls, i: int, j: int) -> "BElement":
        return cls(i, j)

    @property
    def is_zero(self) -> bool:
        return self.i is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, BElement):
            return NotImplemented
        return self.i == other.i and self.j == other.j

    def __hash__(self) -> int:
        return hash((self.i, self.j))

    def __mul__(self, other: "BElement") -> "BElement":
        return b_multiply(self, other)

    def __repr__(self) -> str:
        if self.is_zero:
            return "BElement.zero()"
        return f"BElement.unit({self.i}, {self.j})"

    def to_json(self) -> dict:
        if self.is_zero:
            return {"kind": "zero"}
        return {"kind": "unit", "i": self.i, "j": self.j}

    @classmethod
    def from_json(cls, data: dict) -> "BElement":
        if data.get("kind") == "zero":
            return cls()
        if data.get("kind") == "unit":
            return cls(int(data["i"]), int(data["j"]))
        raise ValueError(f"unknown element kind {data.get('kind')!r}")


def b_multiply(x: BElement, y: BElement) -> BElement:
    if x.is_zero or y.is_zero or x.j != y.i:
        return BElement()
    return BElement(x.i, y.j)


def b_invert(x: BElement) -> BElement:
    if x.is_zero:
        return x
    return BElement(x.j, x.i)


def b_is_idempotent(x: BElement) -> bool:
    return x.is_zero or x.i == x.j
