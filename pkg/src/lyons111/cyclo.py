"""Exact arithmetic in Z[sqrt(-3)] for character computations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Cyc:
    """a + b*sqrt(-3) with integer a, b."""

    a: int
    b: int

    def conj(self):
        return Cyc(self.a, -self.b)

    def __add__(self, other):
        other = _lift(other)
        return Cyc(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        return Cyc(self.a - other.a, self.b - other.b)

    def __mul__(self, other):
        other = _lift(other)
        return Cyc(
            self.a * other.a - 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Cyc(-self.a, -self.b)

    def is_integer(self):
        return self.b == 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{self.b:+d}*sqrt(-3)"


def _lift(x):
    if isinstance(x, Cyc):
        return x
    if isinstance(x, int):
        return Cyc(x, 0)
    raise TypeError(f"cannot combine Cyc with {type(x)!r}")
