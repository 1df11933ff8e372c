import random
from fractions import Fraction

import pytest

from periodic_cluster import (
    DOWN,
    UP,
    Edge,
    PeriodicFunction,
    PeriodicTree,
    SignFunction,
    is_injective,
)


def make_fig1() -> PeriodicTree:
    """Positive-slope 3-periodic tree with a double exchange arrow."""
    return PeriodicTree(
        SignFunction.from_string("-++"),
        [Edge(1, 5, DOWN), Edge(1, 8, UP), Edge(2, 3, DOWN)],
    )


def make_ztree() -> PeriodicTree:
    """Zero-slope 4-periodic tree with one branch and one leaf."""
    return PeriodicTree(
        SignFunction.from_string("+++-"),
        [Edge(4, 6, UP), Edge(2, 4, DOWN), Edge(3, 4, UP), Edge(3, 5, DOWN)],
    )


def random_injective(rng: random.Random, n: int, span: int = 12, max_m: int = 4) -> PeriodicFunction:
    while True:
        values = tuple(
            Fraction(rng.randint(-span, span), rng.randint(1, 4)) for _ in range(n)
        )
        m = rng.choice([x for x in range(-max_m, max_m + 1) if x != 0])
        pi = PeriodicFunction(values, m)
        if is_injective(pi):
            return pi


def surjective_signs(n: int) -> list[str]:
    out = []
    for bits in range(2**n):
        s = "".join("+" if bits & (1 << i) else "-" for i in range(n))
        if "+" in s and "-" in s:
            out.append(s)
    return out


@pytest.fixture
def fig1() -> PeriodicTree:
    return make_fig1()


@pytest.fixture
def ztree() -> PeriodicTree:
    return make_ztree()


@pytest.fixture
def t0_minus_plus_plus() -> PeriodicTree:
    from periodic_cluster import initial_tree

    return initial_tree(SignFunction.from_string("-++"))
