"""Glued values: a concrete representation paired with its abstract model.

An ``AbstractionFn`` maps concrete representations into an abstract
carrier equipped with its own notion of equality.  A ``GluedValue``
carries a concrete value, a claimed abstract value, and the abstraction
function relating them; the coherence condition (the image of the
concrete half equals the claimed abstract half) is checked at
construction and can therefore never be violated by a live object.

``EvaluationMode`` selects which half of a glued value a client is
allowed to observe.  Behavioral observation is abstract observation with
cost additionally out of view, so Behavioral implies Abstract here.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Generic, Tuple, TypeVar

C = TypeVar("C")
A = TypeVar("A")
P = TypeVar("P")


class EvaluationMode(Enum):
    """Which view of a glued value an observer gets."""

    FULL = "full"
    ABSTRACT = "abstract"
    CONCRETE = "concrete"
    BEHAVIORAL = "behavioral"


class CoherenceError(Exception):
    """Raised when a claimed abstract value disagrees with the computed image."""

    def __init__(self, computed: Any, claimed: Any):
        self.computed = computed
        self.claimed = claimed
        super().__init__(
            f"abstraction image {computed!r} does not match claimed abstract value {claimed!r}"
        )


@dataclass(frozen=True)
class AbstractionFn(Generic[C, A]):
    """A map from concrete representations to an abstract carrier.

    ``abs_eq`` is the equality the abstract carrier is considered up to;
    it defaults to structural equality.
    """

    apply: Callable[[C], A]
    abs_eq: Callable[[A, A], bool] = operator.eq


@dataclass(frozen=True)
class GluedValue(Generic[C, A]):
    """A coherent (concrete, abstract) pair under a fixed abstraction function."""

    concrete: C
    abstract: A
    alpha: AbstractionFn[C, A]

    def __post_init__(self) -> None:
        image = self.alpha.apply(self.concrete)
        if not self.alpha.abs_eq(image, self.abstract):
            raise CoherenceError(image, self.abstract)


def glue(concrete: C, abstract: A, alpha: AbstractionFn[C, A]) -> GluedValue[C, A]:
    """Pair a concrete value with its claimed abstract model.

    Fails fast with ``CoherenceError`` if ``alpha`` does not actually
    send ``concrete`` to ``abstract``.
    """
    return GluedValue(concrete, abstract, alpha)


def fracture(g: GluedValue[C, A]) -> Tuple[C, A, AbstractionFn[C, A]]:
    """Split a glued value back into its components.

    Inverse to ``glue``: ``glue(*fracture(g)) == g``, and fracturing the
    glue of a coherent triple returns the triple.
    """
    return (g.concrete, g.abstract, g.alpha)


def project(g: GluedValue[C, A], mode: EvaluationMode) -> Any:
    """Observe one side of a glued value.

    Full mode returns the pair itself; Behavioral returns the same thing
    as Abstract since behavioral observers see abstract values with cost
    already erased.
    """
    if mode is EvaluationMode.FULL:
        return g
    if mode is EvaluationMode.CONCRETE:
        return g.concrete
    if mode in (EvaluationMode.ABSTRACT, EvaluationMode.BEHAVIORAL):
        return g.abstract
    raise ValueError(f"unknown evaluation mode: {mode!r}")


def spec_member(
    x: Any,
    spec: Any,
    project_to_phase: Callable[[Any], P],
    eq_p: Callable[[P, P], bool] = operator.eq,
) -> bool:
    """Does ``x`` inhabit the specification type determined by ``spec``?

    Membership is phase-projected: ``x`` belongs when its projection
    agrees with the projection of the specification witness.  Anything
    concrete that the projection forgets (representation choices, cost)
    cannot exclude a candidate.
    """
    return bool(eq_p(project_to_phase(x), project_to_phase(spec)))


def abstract_equal(x: C, y: C, alpha: AbstractionFn[C, A]) -> bool:
    """Equality of concrete values up to the abstraction function.

    The kernel of ``alpha``: two representations are identified exactly
    when they have the same abstract image.  This is an equivalence
    relation for every ``alpha`` whose ``abs_eq`` is one.
    """
    return bool(alpha.abs_eq(alpha.apply(x), alpha.apply(y)))
