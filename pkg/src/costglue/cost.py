"""Cost-annotated computations.

A ``Charged[T]`` pairs a value with the cost spent computing it.  Costs
form an ordered additive monoid; composition of charged computations
accumulates cost additively, so a computation's total cost is the sum of
the charges along the path that produced its value.  ``erase`` moves a
charged value into the behavioral world where cost is invisible.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Callable, Generic, TypeVar, Union

T = TypeVar("T")
U = TypeVar("U")

# Costs live in the non-negative 64-bit range.  Exceeding it is a bug in
# the instrumented algorithm, not something to wrap around silently.
MAX_COST = 2**63 - 1


@dataclass(frozen=True, order=True)
class Cost:
    """A non-negative amount of abstract work, with checked addition."""

    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int):
            raise TypeError(f"cost must be an integer, got {type(self.value).__name__}")
        if self.value < 0:
            raise ValueError(f"cost must be non-negative, got {self.value}")
        if self.value > MAX_COST:
            raise OverflowError(f"cost {self.value} exceeds MAX_COST")

    def __add__(self, other: "Cost") -> "Cost":
        if not isinstance(other, Cost):
            return NotImplemented
        total = self.value + other.value
        if total > MAX_COST:
            raise OverflowError(f"cost sum {total} exceeds MAX_COST")
        return Cost(total)

    def __repr__(self) -> str:
        return f"Cost({self.value})"


ZERO = Cost(0)

CostLike = Union[Cost, int]


def as_cost(c: CostLike) -> Cost:
    """Coerce a plain integer into a ``Cost``; ``Cost`` passes through."""
    return c if isinstance(c, Cost) else Cost(c)


@dataclass(frozen=True)
class Charged(Generic[T]):
    """A value together with the cost accumulated while producing it."""

    cost: Cost
    value: T

    def __post_init__(self) -> None:
        if not isinstance(self.cost, Cost):
            object.__setattr__(self, "cost", as_cost(self.cost))


def ret(value: T) -> Charged[T]:
    """Embed a value as a computation that costs nothing."""
    return Charged(ZERO, value)


def charge(c: CostLike, m: Charged[T]) -> Charged[T]:
    """Add ``c`` units of cost to ``m`` without touching its value.

    Charging zero is the identity, and consecutive charges fuse:
    ``charge(c1, charge(c2, m)) == charge(c1 + c2, m)``.
    """
    return Charged(as_cost(c) + m.cost, m.value)


def bind(m: Charged[T], k: Callable[[T], Charged[U]]) -> Charged[U]:
    """Sequence ``k`` after ``m``, accumulating both costs."""
    out = k(m.value)
    return Charged(m.cost + out.cost, out.value)


def fmap(m: Charged[T], f: Callable[[T], U]) -> Charged[U]:
    """Apply a pure (free) function to the value, keeping the cost."""
    return Charged(m.cost, f(m.value))


def erase(m: Charged[T]) -> T:
    """Forget the cost.  The behavioral view of a charged computation."""
    return m.value


def leq(a: Charged[T], b: Charged[T], eq: Callable[[T, T], bool] = operator.eq) -> bool:
    """Refinement order on charged values.

    ``a`` refines ``b`` when ``a`` costs no more than ``b`` and both have
    equal behavior under ``eq``.  After ``erase`` the cost half is
    trivial, so the order collapses to plain behavioral equality.
    """
    return a.cost <= b.cost and bool(eq(a.value, b.value))
