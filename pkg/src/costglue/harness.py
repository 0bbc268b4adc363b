"""Differential property harness for cost-and-behavior verification.

The checkers here compare implementations against abstract models
through abstraction functions: commuting squares (strict on cost or
lax), noninterference between interchangeable implementations, monoid
and homomorphism laws stated on abstraction images, and the universal
property of structural folds.  Each check runs a deterministic sweep
driven by an RNG derived from ``(seed, suite name)`` and produces a
``Report`` that is reproducible byte for byte from its configuration.

Evaluation modes narrow what a sweep is allowed to observe:

* ``FULL``      checks everything: abstract agreement and cost relations.
* ``ABSTRACT``  same comparisons as FULL; concrete-only audits are for
                suites to skip.
* ``BEHAVIORAL`` checks abstract agreement only; cost is erased.
* ``CONCRETE``  runs implementations and records cost tables without
                judging abstract agreement.
"""

from __future__ import annotations

import math
import operator
import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .cost import Charged
from .phase import AbstractionFn, EvaluationMode

DEFAULT_SAMPLES = 1000
SIZE_GEOMETRIC_MEAN = 32

# Render limit for values embedded in failure records.
_RENDER_LIMIT = 200


def derive_rng(seed: int, suite: str) -> random.Random:
    """A private RNG stream per (global seed, suite name).

    Streams for distinct suite names are independent, so suites can run
    in any order, or in parallel, without changing each other's samples.
    """
    return random.Random(f"{seed}:{suite}")


def geometric_size(rng: random.Random, mean: int = SIZE_GEOMETRIC_MEAN, cap: int = 256) -> int:
    """Sample a size with a geometric profile (many small, few large)."""
    u = rng.random()
    p = 1.0 / mean
    k = int(math.log1p(-u) / math.log(1.0 - p))
    return min(k, cap)


def render(value: Any) -> str:
    """Deterministic display form for failure records."""
    text = repr(value)
    if len(text) > _RENDER_LIMIT:
        text = text[:_RENDER_LIMIT] + "..."
    return text


@dataclass(frozen=True)
class Failure:
    """One law violation: what went in, what was expected, what came out."""

    input: str
    expected: str
    actual: str
    law: str

    def to_dict(self) -> Dict[str, str]:
        return {
            "input": self.input,
            "expected": self.expected,
            "actual": self.actual,
            "law": self.law,
        }


@dataclass(frozen=True)
class Report:
    """Outcome of one suite run; reproducible from its configuration."""

    suite: str
    seed: int
    iterations: int
    mode: str
    cases: int
    failures: Tuple[Failure, ...]
    cost_table: Tuple[Tuple[int, int, int], ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "iterations": self.iterations,
            "mode": self.mode,
            "cases": self.cases,
            "failures": [f.to_dict() for f in self.failures],
            "cost_table": [
                {"size": size, "impl_cost": impl, "spec_cost": spec}
                for size, impl, spec in self.cost_table
            ],
        }


class ReportBuilder:
    """Accumulates cases, failures, and cost rows during a sweep.

    Cost rows aggregate per size: the table keeps the maximum observed
    implementation cost and bound for each size, sorted by size, so
    tables stay small no matter how long the sweep runs.
    """

    def __init__(self, suite: str, seed: int, iterations: int,
                 mode: EvaluationMode = EvaluationMode.FULL):
        self.suite = suite
        self.seed = seed
        self.iterations = iterations
        self.mode = mode
        self.cases = 0
        self.failures: List[Failure] = []
        self._costs: Dict[int, List[int]] = {}

    def case(self, ok: bool, law: str, input_: Any, expected: Any, actual: Any) -> bool:
        self.cases += 1
        if not ok:
            self.failures.append(
                Failure(render(input_), render(expected), render(actual), law)
            )
        return ok

    def fail(self, law: str, input_: Any, expected: Any, actual: Any) -> None:
        self.case(False, law, input_, expected, actual)

    def cost_row(self, size: int, impl_cost: int, spec_cost: int) -> None:
        row = self._costs.setdefault(size, [0, 0])
        row[0] = max(row[0], impl_cost)
        row[1] = max(row[1], spec_cost)

    def absorb(self, other: Report) -> None:
        """Fold another report's outcomes into this one."""
        self.cases += other.cases
        self.failures.extend(other.failures)
        for size, impl, spec in other.cost_table:
            self.cost_row(size, impl, spec)

    def build(self) -> Report:
        table = tuple(
            (size, impl, spec)
            for size, (impl, spec) in sorted(self._costs.items())
        )
        return Report(
            suite=self.suite,
            seed=self.seed,
            iterations=self.iterations,
            mode=self.mode.value,
            cases=self.cases,
            failures=tuple(self.failures),
            cost_table=table,
        )


def mode_gates(mode: EvaluationMode) -> Tuple[bool, bool]:
    """(check behavior, check cost) for a mode."""
    if mode is EvaluationMode.BEHAVIORAL:
        return True, False
    if mode is EvaluationMode.CONCRETE:
        return False, False
    return True, True


# -- operation traces ------------------------------------------------------

@dataclass(frozen=True)
class OpTrace:
    """A sequence of (operation name, argument tuple) pairs."""

    ops: Tuple[Tuple[str, Tuple[Any, ...]], ...]

    def __len__(self) -> int:
        return len(self.ops)

    def validate(self, interface: Dict[str, int]) -> None:
        """Check every op resolves in the interface with the right arity."""
        for name, args in self.ops:
            if name not in interface:
                raise ValueError(f"operation {name!r} not in interface {sorted(interface)}")
            if len(args) != interface[name]:
                raise ValueError(
                    f"operation {name!r} expects {interface[name]} arguments, got {len(args)}"
                )


# -- commuting squares -----------------------------------------------------

@dataclass(frozen=True)
class SquareSpec:
    """One operation stated twice: on representations and on models.

    ``f_top`` acts on concrete inputs, ``f_abs`` on their images under
    ``alpha_in``; outputs are compared under ``alpha_out``.  A strict
    square demands equal costs on both paths; a lax square only that the
    concrete path costs no more than the abstract one.
    """

    name: str
    f_top: Callable[[Any], Charged[Any]]
    f_abs: Callable[[Any], Charged[Any]]
    alpha_in: AbstractionFn
    alpha_out: AbstractionFn
    lax: bool = False


def check_square(
    square: SquareSpec,
    inputs: Callable[[random.Random], Any],
    n: int = DEFAULT_SAMPLES,
    *,
    seed: int = 0,
    suite: Optional[str] = None,
    mode: EvaluationMode = EvaluationMode.FULL,
    size_of: Optional[Callable[[Any], int]] = None,
) -> Report:
    """Sample inputs and check that the square commutes.

    Behavior must agree under ``alpha_out`` in every mode that observes
    it; costs must be equal (strict) or bounded (lax) in modes that
    observe cost.  Each sampled input contributes one case and one cost
    row keyed by ``size_of`` (input size 0 when not supplied).
    """
    suite = suite or f"square/{square.name}"
    rb = ReportBuilder(suite, seed, n, mode)
    rng = derive_rng(seed, suite)
    check_beh, check_cost = mode_gates(mode)
    for _ in range(n):
        x = inputs(rng)
        top = square.f_top(x)
        bottom = square.f_abs(square.alpha_in.apply(x))
        mapped = square.alpha_out.apply(top.value)
        ok = True
        if check_beh and not square.alpha_out.abs_eq(mapped, bottom.value):
            ok = False
        if check_cost:
            if square.lax:
                if not top.cost <= bottom.cost:
                    ok = False
            elif top.cost != bottom.cost:
                ok = False
        relation = "<=" if square.lax else "=="
        rb.case(
            ok,
            f"square/{square.name}/{'lax' if square.lax else 'strict'}",
            x,
            f"image {render(bottom.value)} at cost {relation} {bottom.cost.value}",
            f"image {render(mapped)} at cost {top.cost.value}",
        )
        rb.cost_row(size_of(x) if size_of else 0, top.cost.value, bottom.cost.value)
    return rb.build()


# -- noninterference -------------------------------------------------------

def check_noninterference(
    client: Callable[[Any, Any], Any],
    impls: Sequence[Tuple[str, Any]],
    abstract_out_eq: Callable[[Any, Any], bool],
    inputs: Callable[[random.Random], Any],
    n: int = DEFAULT_SAMPLES,
    *,
    seed: int = 0,
    suite: str = "noninterference",
    mode: EvaluationMode = EvaluationMode.FULL,
) -> Report:
    """Swap implementations under a client; abstract outputs must agree.

    Every pair of implementations is compared on every sampled input, so
    agreement is symmetric and transitive across the whole family by
    construction.
    """
    if len(impls) < 2:
        raise ValueError("noninterference needs at least two implementations")
    rb = ReportBuilder(suite, seed, n, mode)
    rng = derive_rng(seed, suite)
    check_beh, _ = mode_gates(mode)
    for _ in range(n):
        x = inputs(rng)
        outs = [(name, client(impl, x)) for name, impl in impls]
        for i in range(len(outs)):
            for j in range(i + 1, len(outs)):
                ni, oi = outs[i]
                nj, oj = outs[j]
                ok = (not check_beh) or bool(abstract_out_eq(oi, oj))
                rb.case(
                    ok,
                    f"noninterference/{ni}~{nj}",
                    x,
                    render(oi),
                    render(oj),
                )
    return rb.build()


# -- abstract algebraic laws ----------------------------------------------

@dataclass(frozen=True)
class MonoidOps:
    """A carrier's monoid interface: empty, charged append, singleton."""

    empty: Any
    append: Callable[[Any, Any], Charged[Any]]
    singleton: Callable[[Any], Any]


@dataclass(frozen=True)
class TargetMonoid:
    """A fold target: monoid operations plus the equality results are judged by."""

    name: str
    ops: MonoidOps
    eq: Callable[[Any, Any], bool] = operator.eq


def fold_elements(ops: MonoidOps, elems: Sequence[Any]) -> Any:
    """The canonical list fold: append singletons left to right."""
    acc = ops.empty
    for e in elems:
        acc = ops.append(acc, ops.singleton(e)).value
    return acc


def check_abstract_monoid(
    empty: Any,
    append: Callable[[Any, Any], Charged[Any]],
    alpha: AbstractionFn,
    inputs: Callable[[random.Random], Any],
    n: int = DEFAULT_SAMPLES,
    *,
    seed: int = 0,
    suite: str = "abstract-monoid",
    mode: EvaluationMode = EvaluationMode.FULL,
) -> Report:
    """Monoid laws up to the abstraction function.

    Associativity and the unit laws are stated on images under ``alpha``,
    never on representations, so balancing choices and cached fields
    cannot fail the laws.
    """
    rb = ReportBuilder(suite, seed, n, mode)
    rng = derive_rng(seed, suite)
    check_beh, _ = mode_gates(mode)
    image = alpha.apply
    eq = alpha.abs_eq
    for _ in range(n):
        a, b, c = inputs(rng), inputs(rng), inputs(rng)
        if not check_beh:
            rb.cases += 3
            continue
        left = append(append(a, b).value, c).value
        right = append(a, append(b, c).value).value
        rb.case(
            eq(image(left), image(right)),
            "monoid/assoc",
            (a, b, c),
            render(image(right)),
            render(image(left)),
        )
        lu = append(empty, a).value
        rb.case(
            eq(image(lu), image(a)),
            "monoid/left-unit",
            a,
            render(image(a)),
            render(image(lu)),
        )
        ru = append(a, empty).value
        rb.case(
            eq(image(ru), image(a)),
            "monoid/right-unit",
            a,
            render(image(a)),
            render(image(ru)),
        )
    return rb.build()


def check_abstract_hom(
    f: Callable[[Any], Charged[Any]],
    src_ops: MonoidOps,
    dst_ops: MonoidOps,
    alphas: Tuple[AbstractionFn, AbstractionFn],
    inputs: Callable[[random.Random], Tuple[Any, Any, Any]],
    n: int = DEFAULT_SAMPLES,
    *,
    seed: int = 0,
    suite: str = "abstract-hom",
    mode: EvaluationMode = EvaluationMode.FULL,
) -> Report:
    """Is ``f`` a monoid homomorphism up to abstraction?

    Checks preservation of empty, append, and singleton on destination
    images.  ``inputs`` yields (source value, source value, element)
    triples; ``alphas`` is (source abstraction, destination abstraction).
    """
    alpha_src, alpha_dst = alphas
    rb = ReportBuilder(suite, seed, n, mode)
    rng = derive_rng(seed, suite)
    check_beh, _ = mode_gates(mode)
    image = alpha_dst.apply
    eq = alpha_dst.abs_eq

    f_empty = f(src_ops.empty).value
    rb.case(
        (not check_beh) or eq(image(f_empty), image(dst_ops.empty)),
        "hom/empty",
        render(alpha_src.apply(src_ops.empty)),
        render(image(dst_ops.empty)),
        render(image(f_empty)),
    )
    for _ in range(n):
        x1, x2, e = inputs(rng)
        if not check_beh:
            rb.cases += 2
            continue
        via_src = f(src_ops.append(x1, x2).value).value
        via_dst = dst_ops.append(f(x1).value, f(x2).value).value
        rb.case(
            eq(image(via_src), image(via_dst)),
            "hom/append",
            (alpha_src.apply(x1), alpha_src.apply(x2)),
            render(image(via_dst)),
            render(image(via_src)),
        )
        one_src = f(src_ops.singleton(e)).value
        one_dst = dst_ops.singleton(e)
        rb.case(
            eq(image(one_src), image(one_dst)),
            "hom/singleton",
            e,
            render(image(one_dst)),
            render(image(one_src)),
        )
    return rb.build()


@dataclass(frozen=True)
class SequenceImpl:
    """A sequence carrier: its monoid ops, structural fold, and element view."""

    name: str
    ops: MonoidOps
    mapreduce: Callable[[Any, MonoidOps], Charged[Any]]
    alpha: AbstractionFn


def check_universal_property(
    seq: SequenceImpl,
    target: TargetMonoid,
    inputs: Callable[[random.Random], Any],
    n: int = DEFAULT_SAMPLES,
    *,
    seed: int = 0,
    suite: Optional[str] = None,
    mode: EvaluationMode = EvaluationMode.FULL,
    extra_homs: Sequence[Tuple[str, Callable[[Any], Charged[Any]]]] = (),
) -> Report:
    """The structural fold is the canonical homomorphism to the target.

    On every sampled carrier value, ``mapreduce`` into the target must
    agree with the list fold over the value's elements; any additional
    homomorphisms supplied must agree with it too (uniqueness, at the
    scale of the sweep).
    """
    suite = suite or f"universal/{seq.name}->{target.name}"
    rb = ReportBuilder(suite, seed, n, mode)
    rng = derive_rng(seed, suite)
    check_beh, _ = mode_gates(mode)
    for _ in range(n):
        x = inputs(rng)
        if not check_beh:
            rb.cases += 1 + len(extra_homs)
            continue
        folded = fold_elements(target.ops, seq.alpha.apply(x))
        reduced = seq.mapreduce(x, target.ops).value
        rb.case(
            target.eq(reduced, folded),
            f"universal/{target.name}/agrees-with-fold",
            render(seq.alpha.apply(x)),
            render(folded),
            render(reduced),
        )
        for hom_name, hom in extra_homs:
            other = hom(x).value
            rb.case(
                target.eq(other, reduced),
                f"universal/{target.name}/unique/{hom_name}",
                render(seq.alpha.apply(x)),
                render(reduced),
                render(other),
            )
    return rb.build()
