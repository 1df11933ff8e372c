"""Periodic functions Z -> Q and their height-vector image.

A function is stored by its values on 1..n together with the per-period
increment m, so pi(k + n) = pi(k) + m everywhere.  Values are exact (ints or
Fractions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class PeriodicFunction:
    values: tuple
    m: object = 0

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("need at least one value")

    @property
    def n(self) -> int:
        return len(self.values)

    def at(self, k: int):
        idx = (k - 1) % self.n
        shift = (k - 1 - idx) // self.n
        value = self.values[idx]
        return value + shift * self.m if shift else value

    def shifted_by(self, c) -> "PeriodicFunction":
        return PeriodicFunction(tuple(v + c for v in self.values), self.m)

    def tilted(self, delta) -> "PeriodicFunction":
        """Add k*delta to pi(k); the slope increment becomes m + n*delta."""
        values = tuple(v + (k + 1) * delta for k, v in enumerate(self.values))
        return PeriodicFunction(values, self.m + self.n * delta)


def f_map(pi: PeriodicFunction) -> tuple:
    """Consecutive differences y_k = pi(k) - pi(k-1); coordinates sum to m."""
    return tuple(pi.at(k) - pi.at(k - 1) for k in range(1, pi.n + 1))


def pairing(pi: PeriodicFunction, i: int, j: int):
    """F(pi)^t beta_{ij} collapses to a difference of two values."""
    return pi.at(j) - pi.at(i)


def is_injective(pi: PeriodicFunction) -> bool:
    """Injectivity on all of Z, decided exactly."""
    if pi.m == 0:
        return False
    for u in range(pi.n):
        for v in range(u + 1, pi.n):
            ratio = Fraction(pi.values[u] - pi.values[v]) / Fraction(pi.m)
            if ratio.denominator == 1:
                return False
    return True


def function_combination(p0: PeriodicFunction, p1: PeriodicFunction, t) -> PeriodicFunction:
    """(1 - t) * p0 + t * p1, componentwise including the slope."""
    values = tuple(a + t * (b - a) for a, b in zip(p0.values, p1.values))
    return PeriodicFunction(values, p0.m + t * (p1.m - p0.m))
