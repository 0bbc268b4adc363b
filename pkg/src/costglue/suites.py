"""The registered verification suites behind the command line runner.

Every suite is a function ``(seed, iterations, mode) -> Report`` whose
sampling is driven entirely by an RNG derived from ``(seed, suite
name)``, so a report is a pure function of its configuration.  Law
suites (cost, sealing, round trips) check module invariants that hold in
every phase and use the mode only as report metadata; differential
suites (squares, noninterference, bounds) gate their comparisons through
the mode: behavioral runs erase cost, concrete runs record costs without
judging abstract agreement.
"""

from __future__ import annotations

import itertools
import random
from typing import Any, Callable, Dict, List, Sequence, Tuple

from . import rbtree
from .cost import Charged, Cost, bind, charge, erase, leq, ret
from .harness import (
    MonoidOps,
    Report,
    ReportBuilder,
    SequenceImpl,
    SquareSpec,
    TargetMonoid,
    check_abstract_hom,
    check_abstract_monoid,
    check_noninterference,
    check_square,
    check_universal_property,
    derive_rng,
    geometric_size,
    mode_gates,
    render,
)
from .phase import AbstractionFn, CoherenceError, EvaluationMode, abstract_equal, fracture, glue
from .queues import (
    BATCHED_ALPHA,
    BATCHED_QUEUE,
    LIST_ALPHA,
    LIST_QUEUE,
    BatchedQueueState,
    ListQueueState,
    QueueImpl,
    batched_dequeue,
    batched_empty,
    batched_enqueue,
    demo,
    list_dequeue,
    list_empty,
    list_enqueue,
    qreverse,
    queue_spec_member,
    rev_append,
    sealed_dequeue,
)
from .rbtree import (
    ELEMENTS_ALPHA,
    EMPTY,
    append,
    append_bound,
    elements,
    from_iterable,
    length_fast,
    mapreduce,
    reduce,
    singleton,
    validate,
)
from .sealing import (
    BoundViolation,
    Sealed,
    reseal,
    seal,
    seal_charge,
    seal_join,
    seal_return,
    sealed_beh_eq,
    unseal_abstract,
    unseal_concrete,
)
from .sorting import (
    isort,
    isort_bound,
    msort,
    msort_bound,
    sealed_sort,
    sealed_sort_tree,
    sort_spec,
)

Suite = Callable[[int, int, EvaluationMode], Report]

REGISTRY: Dict[str, Suite] = {}


def register(name: str) -> Callable[[Suite], Suite]:
    def add(fn: Suite) -> Suite:
        REGISTRY[name] = fn
        return fn

    return add


# ---------------------------------------------------------------------------
# cost/laws

@register("cost/laws")
def cost_laws(seed: int, iterations: int, mode: EvaluationMode) -> Report:
    """Monoid, monad, erasure, and refinement-order laws of the cost effect."""
    name = "cost/laws"
    rb = ReportBuilder(name, seed, iterations, mode)
    rng = derive_rng(seed, name)
    kont = (
        lambda n: Charged(Cost(n % 7), n + 3),
        lambda n: Charged(Cost(1), n * 2),
        lambda n: ret(n - 1),
        lambda n: Charged(Cost(n % 3), -n),
    )
    for _ in range(iterations):
        x = rng.randrange(-1000, 1000)
        c1 = Cost(rng.randrange(0, 100))
        c2 = Cost(rng.randrange(0, 100))
        m = Charged(Cost(rng.randrange(0, 100)), x)
        k = kont[rng.randrange(len(kont))]
        h = kont[rng.randrange(len(kont))]

        rb.case(charge(0, m) == m, "cost/charge-zero", m, render(m), render(charge(0, m)))
        lhs = charge(c1, charge(c2, m))
        rhs = charge(c1 + c2, m)
        rb.case(lhs == rhs, "cost/charge-plus", (c1, c2, m), render(rhs), render(lhs))
        rb.case(ret(x).cost == Cost(0), "cost/ret-free", x, "Cost(0)", render(ret(x).cost))
        rb.case(bind(ret(x), k) == k(x), "cost/bind-left-unit", x, render(k(x)), render(bind(ret(x), k)))
        rb.case(bind(m, ret) == m, "cost/bind-right-unit", m, render(m), render(bind(m, ret)))
        assoc_l = bind(bind(m, k), h)
        assoc_r = bind(m, lambda v: bind(k(v), h))
        rb.case(assoc_l == assoc_r, "cost/bind-assoc", m, render(assoc_r), render(assoc_l))
        rb.case(
            erase(charge(c1, m)) == erase(m),
            "cost/erase-charge",
            (c1, m),
            render(erase(m)),
            render(erase(charge(c1, m))),
        )
        rb.case(leq(m, m), "cost/leq-refl", m, True, leq(m, m))
        a, b, c = m, charge(c1, m), charge(c1 + c2, m)
        rb.case(
            (not (leq(a, b) and leq(b, c))) or leq(a, c),
            "cost/leq-trans",
            (a, b, c),
            True,
            leq(a, c),
        )
        erased_equal = erase(a) == erase(b)
        rb.case(
            leq(ret(erase(b)), ret(erase(a))) == erased_equal,
            "cost/leq-erase-collapse",
            (a, b),
            erased_equal,
            leq(ret(erase(b)), ret(erase(a))),
        )
    return rb.build()


# ---------------------------------------------------------------------------
# phase/roundtrip

def _random_batched_state(rng: random.Random, cap: int = 128) -> BatchedQueueState:
    inbox = tuple(rng.randrange(100) for _ in range(geometric_size(rng, cap=cap)))
    outbox = tuple(rng.randrange(100) for _ in range(geometric_size(rng, cap=cap)))
    return BatchedQueueState(inbox, outbox)


class _TreePool:
    """A deterministic, evolving population of valid trees."""

    def __init__(self, rng: random.Random, cap: int = 2048):
        self.rng = rng
        self.cap = cap
        self.pool: List[rbtree.RBTree] = [EMPTY] + [
            from_iterable(range(n)) for n in (1, 2, 3, 5, 8, 13)
        ]
        self._next = 100

    def fresh_leaf(self) -> rbtree.RBTree:
        self._next += 1
        return singleton(self._next)

    def sample(self) -> rbtree.RBTree:
        return self.pool[self.rng.randrange(len(self.pool))]

    def grow(self) -> Tuple[rbtree.RBTree, rbtree.RBTree, Charged[rbtree.RBTree]]:
        """Append two sampled trees, feed the result back into the pool."""
        a, b = self.sample(), self.sample()
        out = append(a, b)
        t = out.value
        if t.size > self.cap:
            t = self.fresh_leaf()
        if len(self.pool) >= 256:
            self.pool[self.rng.randrange(len(self.pool))] = t
        else:
            self.pool.append(t)
        return a, b, out


@register("phase/roundtrip")
def phase_roundtrip(seed: int, iterations: int, mode: EvaluationMode) -> Report:
    """Fracture then glue is the identity, and glue rejects incoherent pairs."""
    name = "phase/roundtrip"
    rb = ReportBuilder(name, seed, iterations, mode)
    rng = derive_rng(seed, name)
    trees = _TreePool(rng, cap=256)
    for i in range(iterations):
        s = _random_batched_state(rng)
        g = glue(s, rev_append(s), BATCHED_ALPHA)
        back = glue(*fracture(g))
        rb.case(back == g, "phase/glue-fracture-queue", s, render(g), render(back))
        parts = fracture(g)
        rb.case(
            parts == (s, rev_append(s), BATCHED_ALPHA),
            "phase/fracture-components-queue",
            s,
            render((s, rev_append(s))),
            render(parts[:2]),
        )

        trees.grow()
        t = trees.sample()
        gt = glue(t, elements(t), ELEMENTS_ALPHA)
        back_t = glue(*fracture(gt))
        rb.case(back_t == gt, "phase/glue-fracture-tree", render(elements(t)), render(gt.abstract), render(back_t.abstract))

        if i % 64 == 0:
            claimed = rev_append(s) + (999,)
            try:
                glue(s, claimed, BATCHED_ALPHA)
                rb.fail("phase/glue-rejects-incoherent", s, "CoherenceError", "no error")
            except CoherenceError as err:
                rb.case(
                    err.claimed == claimed,
                    "phase/glue-rejects-incoherent",
                    s,
                    render(claimed),
                    render(err.claimed),
                )
    return rb.build()


# ---------------------------------------------------------------------------
# sealing/laws

@register("sealing/laws")
def sealing_laws(seed: int, iterations: int, mode: EvaluationMode) -> Report:
    """Projection, transitivity, charge-commutation, and monad laws for seals."""
    name = "sealing/laws"
    rb = ReportBuilder(name, seed, iterations, mode)
    rng = derive_rng(seed, name)
    ledger: List[Sealed] = []
    for _ in range(iterations):
        v = rng.randrange(-50, 50)
        ci = rng.randrange(0, 50)
        gap = rng.randrange(0, 50)
        extra = rng.randrange(0, 50)
        impl = Charged(Cost(ci), v)
        spec = Charged(Cost(ci + gap), v)
        s = seal(impl, spec)
        ledger.append(s)

        rb.case(unseal_abstract(s) == spec, "seal/unseal-abstract", s, render(spec), render(unseal_abstract(s)))
        rb.case(unseal_concrete(s) == impl, "seal/unseal-concrete", s, render(impl), render(unseal_concrete(s)))
        rb.case(seal(impl, impl).impl == seal(impl, impl).spec, "seal/reflexive", impl, render(impl), render(seal(impl, impl).spec))

        wider = charge(extra, spec)
        r = reseal(s, wider)
        ledger.append(r)
        rb.case(r == seal(impl, wider), "seal/reseal-transitive", (s, wider), render(seal(impl, wider)), render(r))
        rb.case(reseal(s, spec) == s, "seal/reseal-identity", s, render(s), render(reseal(s, spec)))

        sc = seal_charge(extra, s)
        ledger.append(sc)
        rb.case(
            sc == seal(charge(extra, impl), charge(extra, spec)),
            "seal/charge-commutes",
            (extra, s),
            render(seal(charge(extra, impl), charge(extra, spec))),
            render(sc),
        )
        rb.case(seal_charge(0, s) == s, "seal/charge-zero", s, render(s), render(seal_charge(0, s)))

        # monad unit laws
        rb.case(seal_join(seal_return(s)) == s, "seal/join-return", s, render(s), render(seal_join(seal_return(s))))
        mapped = Sealed(
            Charged(impl.cost, seal_return(impl.value)),
            Charged(spec.cost, seal_return(spec.value)),
            sealed_beh_eq(),
        )
        rb.case(seal_join(mapped) == s, "seal/join-map-return", s, render(s), render(seal_join(mapped)))

        # monad associativity on a random triple nesting
        inner_i = seal(Charged(Cost(rng.randrange(10)), v), Charged(Cost(9 + rng.randrange(10)), v))
        inner_s = seal(Charged(Cost(rng.randrange(10)), v), Charged(Cost(9 + rng.randrange(10)), v))
        mid_i = Sealed(charge(rng.randrange(10), ret(inner_i)), charge(9 + rng.randrange(10), ret(inner_s)), sealed_beh_eq())
        mid_s = Sealed(charge(rng.randrange(10), ret(inner_i)), charge(9 + rng.randrange(10), ret(inner_s)), sealed_beh_eq())
        sss = Sealed(
            charge(rng.randrange(10), ret(mid_i)),
            charge(9 + rng.randrange(10), ret(mid_s)),
            sealed_beh_eq(sealed_beh_eq()),
        )
        flat_twice = seal_join(seal_join(sss))
        mapped_join = Sealed(
            Charged(sss.impl.cost, seal_join(mid_i)),
            Charged(sss.spec.cost, seal_join(mid_s)),
            sealed_beh_eq(),
        )
        other = seal_join(mapped_join)
        rb.case(
            flat_twice.impl == other.impl and flat_twice.spec == other.spec,
            "seal/join-assoc",
            sss,
            render(other),
            render(flat_twice),
        )

        # violations must be refused, with the reason split out
        try:
            seal(Charged(Cost(ci + gap + 1), v), spec)
            rb.fail("seal/rejects-cost-overrun", (ci + gap + 1, spec), "BoundViolation", "no error")
        except BoundViolation as err:
            rb.case(
                err.cost_overrun and not err.behavior_mismatch,
                "seal/rejects-cost-overrun",
                (ci + gap + 1, spec),
                "cost overrun",
                render((err.cost_overrun, err.behavior_mismatch)),
            )
        try:
            seal(impl, Charged(spec.cost, v + 1))
            rb.fail("seal/rejects-behavior-mismatch", (impl, v + 1), "BoundViolation", "no error")
        except BoundViolation as err:
            rb.case(
                err.behavior_mismatch,
                "seal/rejects-behavior-mismatch",
                (impl, v + 1),
                "behavior mismatch",
                render((err.cost_overrun, err.behavior_mismatch)),
            )

    # global validity sweep over everything constructed above
    bad = [s for s in ledger if not (s.impl.cost <= s.spec.cost and s.beh_eq(s.impl.value, s.spec.value))]
    rb.case(not bad, "seal/validity-sweep", f"{len(ledger)} seals", "all valid", f"{len(bad)} invalid")
    return rb.build()


# ---------------------------------------------------------------------------
# queues/coherence

def _enqueue_square() -> SquareSpec:
    return SquareSpec(
        name="enqueue",
        f_top=lambda p: batched_enqueue(p[0], p[1]),
        f_abs=lambda p: Charged(Cost(1), p[1] + (p[0],)),
        alpha_in=AbstractionFn(apply=lambda p: (p[0], rev_append(p[1]))),
        alpha_out=BATCHED_ALPHA,
        lax=False,
    )


def _dequeue_square() -> SquareSpec:
    def f_abs(items: Tuple[Any, ...]) -> Charged[Tuple[Any, Tuple[Any, ...]]]:
        out = list_dequeue(ListQueueState(items))
        return Charged(out.cost, (out.value[0], out.value[1].items))

    return SquareSpec(
        name="dequeue",
        f_top=batched_dequeue,
        f_abs=f_abs,
        alpha_in=BATCHED_ALPHA,
        alpha_out=AbstractionFn(apply=lambda out: (out[0], rev_append(out[1]))),
        lax=True,
    )


def _run_coherence_trace(
    rb: ReportBuilder,
    ops: Sequence[Tuple[str, Tuple[Any, ...]]],
    mode: EvaluationMode,
    *,
    check_quotient: bool = False,
    rng: random.Random = None,
) -> None:
    """Step a trace through both queues, checking every square on the way."""
    check_beh, check_cost = mode_gates(mode)
    lst = list_empty()
    bat = batched_empty()
    enqueues = 0
    reversal_work = 0
    batched_total = 0
    spec_dequeue_total = 0
    for step, (op, args) in enumerate(ops):
        if op == "enqueue":
            e = args[0]
            top = batched_enqueue(e, bat)
            bottom = list_enqueue(e, lst)
            beh_ok = (not check_beh) or rev_append(top.value) == bottom.value.items
            cost_ok = (not check_cost) or top.cost == bottom.cost
            if not (beh_ok and cost_ok):
                rb.fail(
                    "queues/enqueue-square",
                    (step, e, bat, lst),
                    f"{render(bottom.value.items)} at cost {bottom.cost.value}",
                    f"{render(rev_append(top.value))} at cost {top.cost.value}",
                )
            else:
                rb.cases += 1
            enqueues += 1
            batched_total += top.cost.value
            bat, lst = top.value, bottom.value
        else:
            size = len(lst.items)
            top = batched_dequeue(bat)
            bottom = list_dequeue(lst)
            e_top, bat2 = top.value
            e_bot, lst2 = bottom.value
            beh_ok = (not check_beh) or (e_top == e_bot and rev_append(bat2) == lst2.items)
            cost_ok = (not check_cost) or top.cost <= bottom.cost
            if not (beh_ok and cost_ok):
                rb.fail(
                    "queues/dequeue-square-lax",
                    (step, bat, lst),
                    f"({e_bot!r}, {render(lst2.items)}) at cost <= {bottom.cost.value}",
                    f"({e_top!r}, {render(rev_append(bat2))}) at cost {top.cost.value}",
                )
            else:
                rb.cases += 1
            rb.cost_row(size, top.cost.value, bottom.cost.value)
            reversal_work += top.cost.value
            batched_total += top.cost.value
            spec_dequeue_total += bottom.cost.value
            bat, lst = bat2, lst2

        if check_quotient and rng is not None and check_beh:
            image = rev_append(bat)
            cut = rng.randrange(len(image) + 1)
            alt = BatchedQueueState(tuple(reversed(image[cut:])), image[:cut])
            probe_e = rng.randrange(100)
            same_enq = abstract_equal(
                batched_enqueue(probe_e, bat).value,
                batched_enqueue(probe_e, alt).value,
                BATCHED_ALPHA,
            )
            deq_a = batched_dequeue(bat).value
            deq_b = batched_dequeue(alt).value
            same_deq = deq_a[0] == deq_b[0] and abstract_equal(deq_a[1], deq_b[1], BATCHED_ALPHA)
            rb.case(
                same_enq and same_deq,
                "queues/quotient-soundness",
                (bat, alt),
                "operations agree on abstractly equal states",
                render((same_enq, same_deq)),
            )

    if check_cost:
        rb.case(
            reversal_work <= enqueues,
            "queues/amortized-reversal",
            render(tuple(ops)),
            f"<= {enqueues}",
            reversal_work,
        )
        rb.case(
            batched_total <= enqueues + spec_dequeue_total,
            "queues/amortized-total",
            render(tuple(ops)),
            f"<= {enqueues + spec_dequeue_total}",
            batched_total,
        )
    else:
        rb.cases += 2


def exhaustive_traces(max_len: int, alphabet: Sequence[Any]) -> List[Tuple[Tuple[str, Tuple[Any, ...]], ...]]:
    """Every operation sequence up to ``max_len`` over the given elements."""
    ops = [("enqueue", (e,)) for e in alphabet] + [("dequeue", ())]
    out: List[Tuple[Tuple[str, Tuple[Any, ...]], ...]] = []
    for length in range(max_len + 1):
        out.extend(itertools.product(ops, repeat=length))
    return out


def random_trace(rng: random.Random, max_len: int = 200) -> Tuple[Tuple[str, Tuple[Any, ...]], ...]:
    length = rng.randrange(max_len + 1)
    ops = []
    for _ in range(length):
        if rng.random() < 0.6:
            ops.append(("enqueue", (rng.randrange(100),)))
        else:
            ops.append(("dequeue", ()))
    return tuple(ops)


@register("queues/coherence")
def queues_coherence(seed: int, iterations: int, mode: EvaluationMode) -> Report:
    """Squares for every queue operation, exhaustively on short traces.

    Runs the strict enqueue square and the lax dequeue square on random
    states, seals a dequeue per sample, then walks every trace of length
    at most 6 over a two-element alphabet plus ``iterations`` random
    traces of length at most 200, checking squares stepwise along with
    the amortized cost accounting and quotient soundness.
    """
    name = "queues/coherence"
    rb = ReportBuilder(name, seed, iterations, mode)
    rng = derive_rng(seed, name)
    check_beh, check_cost = mode_gates(mode)

    rb.case(
        (not check_beh) or rev_append(batched_empty()) == list_empty().items,
        "queues/empty-square",
        "()",
        "()",
        render(rev_append(batched_empty())),
    )

    rb.absorb(
        check_square(
            _enqueue_square(),
            lambda r: (r.randrange(100), _random_batched_state(r)),
            iterations,
            seed=seed,
            suite=name + "/enqueue",
            mode=mode,
            size_of=lambda p: len(rev_append(p[1])),
        )
    )
    rb.absorb(
        check_square(
            _dequeue_square(),
            _random_batched_state,
            iterations,
            seed=seed,
            suite=name + "/dequeue",
            mode=mode,
            size_of=lambda s: len(rev_append(s)),
        )
    )

    seal_rng = derive_rng(seed, name + "/sealed")
    for _ in range(iterations):
        s = _random_batched_state(seal_rng)
        try:
            sealed = sealed_dequeue(s)
            ok = sealed.impl.cost <= sealed.spec.cost
            rb.case(ok, "queues/sealed-dequeue", s, "impl within bound", render((sealed.impl.cost, sealed.spec.cost)))
        except BoundViolation as err:
            rb.fail("queues/sealed-dequeue", s, "valid seal", render(err))

    for trace in exhaustive_traces(6, (0, 1)):
        _run_coherence_trace(rb, trace, mode)

    trace_rng = derive_rng(seed, name + "/traces")
    for _ in range(iterations):
        trace = random_trace(trace_rng)
        _run_coherence_trace(rb, trace, mode, check_quotient=True, rng=trace_rng)
    return rb.build()


# ---------------------------------------------------------------------------
# queues/noninterference

def _stack_push(e: Any, s: ListQueueState) -> Charged[ListQueueState]:
    return Charged(Cost(1), ListQueueState((e,) + s.items))


STACK_IMPL = QueueImpl(
    name="stack",
    empty=list_empty,
    enqueue=_stack_push,
    dequeue=list_dequeue,
    alpha=LIST_ALPHA,
)


def membership_traces(seed: int) -> List[Tuple[Tuple[str, Tuple[Any, ...]], ...]]:
    """Deterministic trace sample for specification membership checks."""
    rng = derive_rng(seed, "queues/membership")
    traces = exhaustive_traces(3, (1, 2))
    traces += [random_trace(rng, max_len=50) for _ in range(20)]
    return traces


@register("queues/noninterference")
def queues_noninterference(seed: int, iterations: int, mode: EvaluationMode) -> Report:
    """Clients cannot tell lawful queue implementations apart.

    Membership of both implementations in the queue specification is
    established first (with a LIFO stack as the negative control), then
    the one-element demo and the queue-based list reversal are run
    against both implementations and compared, with the reversal also
    checked against the plain reversed-list oracle.
    """
    name = "queues/noninterference"
    rb = ReportBuilder(name, seed, iterations, mode)
    rng = derive_rng(seed, name)
    check_beh, _ = mode_gates(mode)

    traces = membership_traces(seed)
    rb.case(
        queue_spec_member(BATCHED_QUEUE, LIST_QUEUE, traces),
        "queues/spec-member/batched",
        f"{len(traces)} traces",
        True,
        queue_spec_member(BATCHED_QUEUE, LIST_QUEUE, traces),
    )
    rb.case(
        queue_spec_member(LIST_QUEUE, LIST_QUEUE, traces),
        "queues/spec-member/list",
        f"{len(traces)} traces",
        True,
        queue_spec_member(LIST_QUEUE, LIST_QUEUE, traces),
    )
    rb.case(
        not queue_spec_member(STACK_IMPL, LIST_QUEUE, traces),
        "queues/spec-member/stack-excluded",
        f"{len(traces)} traces",
        False,
        queue_spec_member(STACK_IMPL, LIST_QUEUE, traces),
    )

    impls = [("list", LIST_QUEUE), ("batched", BATCHED_QUEUE)]
    rb.absorb(
        check_noninterference(
            demo,
            impls,
            lambda a, b: a == b,
            lambda r: r.randrange(100),
            iterations,
            seed=seed,
            suite=name + "/demo",
            mode=mode,
        )
    )
    rb.absorb(
        check_noninterference(
            qreverse,
            impls,
            lambda a, b: a == b,
            lambda r: tuple(r.randrange(100) for _ in range(r.randrange(201))),
            iterations,
            seed=seed,
            suite=name + "/qreverse",
            mode=mode,
        )
    )

    oracle_rng = derive_rng(seed, name + "/oracle")
    for _ in range(iterations):
        items = tuple(oracle_rng.randrange(100) for _ in range(oracle_rng.randrange(201)))
        expected = tuple(reversed(items))
        for impl_name, impl in impls:
            got = qreverse(impl, items)
            rb.case(
                (not check_beh) or got == expected,
                f"queues/qreverse-oracle/{impl_name}",
                items,
                render(expected),
                render(got),
            )
        e = oracle_rng.randrange(100)
        for impl_name, impl in impls:
            rb.case(
                (not check_beh) or demo(impl, e) == e,
                f"queues/demo-oracle/{impl_name}",
                e,
                e,
                demo(impl, e),
            )
    return rb.build()


# ---------------------------------------------------------------------------
# rbtree suites

def _tree_monoid_ops() -> MonoidOps:
    return MonoidOps(empty=EMPTY, append=append, singleton=singleton)


SUM_TARGET = TargetMonoid(
    name="nat-sum",
    ops=MonoidOps(empty=0, append=lambda x, y: Charged(Cost(1), x + y), singleton=lambda e: 1),
)
LIST_TARGET = TargetMonoid(
    name="list",
    ops=MonoidOps(empty=(), append=lambda x, y: Charged(Cost(1), x + y), singleton=lambda e: (e,)),
)
MAX_TARGET = TargetMonoid(
    name="nat-max",
    ops=MonoidOps(empty=0, append=lambda x, y: Charged(Cost(1), max(x, y)), singleton=lambda e: e),
)

TREE_SEQUENCE = SequenceImpl(
    name="rbtree",
    ops=MonoidOps(empty=EMPTY, append=append, singleton=singleton),
    mapreduce=mapreduce,
    alpha=ELEMENTS_ALPHA,
)


@register("rbtree/invariants")
def rbtree_invariants(seed: int, iterations: int, mode: EvaluationMode) -> Report:
    """Structural invariants survive appends; the monoid laws hold abstractly.

    Runs ``iterations`` random appends over an evolving population,
    auditing colors, heights, caches, element order, and the cost bound
    after each; one tenth as many sampled triples drive the abstract
    monoid laws, and elements-equal trees of different shapes are shown
    to be indistinguishable to the registered abstract clients.
    """
    name = "rbtree/invariants"
    rb = ReportBuilder(name, seed, iterations, mode)
    rng = derive_rng(seed, name)
    check_beh, check_cost = mode_gates(mode)
    check_concrete = mode in (EvaluationMode.FULL, EvaluationMode.CONCRETE)
    pool = _TreePool(rng)
    for _ in range(iterations):
        a, b, out = pool.grow()
        t = out.value
        if check_concrete:
            try:
                validate(t)
                rb.cases += 1
            except ValueError as err:
                rb.fail("rbtree/invariant-audit", (render(elements(a)), render(elements(b))), "valid tree", str(err))
        if check_beh:
            expected = elements(a) + elements(b)
            got = elements(t)
            rb.case(
                got == expected,
                "rbtree/append-elements",
                (render(elements(a)), render(elements(b))),
                render(expected),
                render(got),
            )
            rb.case(
                length_fast(t) == len(expected),
                "rbtree/size-cache",
                render(expected),
                len(expected),
                length_fast(t),
            )
        bound = append_bound(a, b)
        if check_cost:
            rb.case(
                out.cost.value <= bound,
                "rbtree/append-cost-bound",
                (a.black_height, b.black_height),
                f"<= {bound}",
                out.cost.value,
            )
        rb.cost_row(abs(a.black_height - b.black_height), out.cost.value, bound)

    rb.absorb(
        check_abstract_monoid(
            EMPTY,
            append,
            ELEMENTS_ALPHA,
            lambda r: pool.pool[r.randrange(len(pool.pool))],
            max(1, iterations // 10),
            seed=seed,
            suite=name + "/monoid",
            mode=mode,
        )
    )

    if check_beh:
        probe_rng = derive_rng(seed, name + "/clients")
        clients = (
            ("elements", lambda t: elements(t)),
            ("length", lambda t: length_fast(t)),
            ("mapreduce-sum", lambda t: mapreduce(t, SUM_TARGET.ops).value),
            ("reduce-max", lambda t: reduce(lambda x, y: Charged(Cost(1), max(x, y)), 0, t).value),
        )
        for _ in range(max(1, iterations // 10)):
            items = tuple(probe_rng.randrange(100) for _ in range(1 + geometric_size(probe_rng, cap=64)))
            cut = probe_rng.randrange(len(items) + 1)
            left_first = append(from_iterable(items[:cut]), from_iterable(items[cut:])).value
            straight = from_iterable(items)
            for client_name, client in clients:
                rb.case(
                    client(left_first) == client(straight),
                    f"rbtree/abstract-client/{client_name}",
                    items,
                    render(client(straight)),
                    render(client(left_first)),
                )
    return rb.build()


@register("rbtree/universal")
def rbtree_universal(seed: int, iterations: int, mode: EvaluationMode) -> Report:
    """The structural fold is the unique homomorphism out of the sequence.

    ``mapreduce`` into sum, list, and max targets must agree with the
    canonical list fold over the elements; independent homomorphisms
    (cached length, direct elements) must agree with it on samples.
    """
    name = "rbtree/universal"
    rb = ReportBuilder(name, seed, iterations, mode)
    rng = derive_rng(seed, name)
    pool = _TreePool(rng, cap=512)
    for _ in range(min(iterations, 200)):
        pool.grow()

    def tree_gen(r: random.Random) -> rbtree.RBTree:
        return pool.pool[r.randrange(len(pool.pool))]

    rb.absorb(
        check_universal_property(
            TREE_SEQUENCE,
            SUM_TARGET,
            tree_gen,
            iterations,
            seed=seed,
            suite=name + "/nat-sum",
            mode=mode,
            extra_homs=(("cached-length", lambda t: Charged(Cost(1), length_fast(t))),),
        )
    )
    rb.absorb(
        check_universal_property(
            TREE_SEQUENCE,
            LIST_TARGET,
            tree_gen,
            iterations,
            seed=seed,
            suite=name + "/list",
            mode=mode,
            extra_homs=(("elements", lambda t: ret(elements(t))),),
        )
    )
    rb.absorb(
        check_universal_property(
            TREE_SEQUENCE,
            MAX_TARGET,
            tree_gen,
            iterations,
            seed=seed,
            suite=name + "/nat-max",
            mode=mode,
        )
    )
    rb.absorb(
        check_abstract_hom(
            lambda t: mapreduce(t, SUM_TARGET.ops),
            _tree_monoid_ops(),
            SUM_TARGET.ops,
            (ELEMENTS_ALPHA, AbstractionFn(apply=lambda n: n)),
            lambda r: (tree_gen(r), tree_gen(r), r.randrange(100)),
            iterations,
            seed=seed,
            suite=name + "/length-hom",
            mode=mode,
        )
    )
    return rb.build()


@register("rbtree/reduce")
def rbtree_reduce(seed: int, iterations: int, mode: EvaluationMode) -> Report:
    """Element folds stay linear: cost of reduce is bounded by twice the size."""
    name = "rbtree/reduce"
    rb = ReportBuilder(name, seed, iterations, mode)
    rng = derive_rng(seed, name)
    check_beh, check_cost = mode_gates(mode)
    pool = _TreePool(rng, cap=1024)

    combiner_calls = [0]

    def plus(x: int, y: int) -> Charged[int]:
        combiner_calls[0] += 1
        return Charged(Cost(1), x + y)

    probe = plus(1, 2)
    rb.case(
        probe.cost == Cost(1) and probe.value == 3,
        "rbtree/reduce-combiner-precondition",
        (1, 2),
        "unit cost, correct value",
        render(probe),
    )

    for _ in range(iterations):
        pool.grow()
        t = pool.sample()
        if t.size == 0:
            t = singleton(rng.randrange(100))
        out = reduce(plus, 0, t)
        if check_beh:
            expected = sum(elements(t))
            rb.case(out.value == expected, "rbtree/reduce-value", render(elements(t)), expected, out.value)
        if check_cost:
            rb.case(
                out.cost.value <= 2 * t.size,
                "rbtree/reduce-cost-linear",
                f"size {t.size}",
                f"<= {2 * t.size}",
                out.cost.value,
            )
            rb.case(
                out.cost.value == 2 * t.size - 1,
                "rbtree/reduce-cost-exact",
                f"size {t.size}",
                2 * t.size - 1,
                out.cost.value,
            )
        rb.cost_row(t.size, out.cost.value, 2 * t.size)

    unit_case = reduce(plus, 0, EMPTY)
    rb.case(
        unit_case.value == 0 and unit_case.cost.value <= 1,
        "rbtree/reduce-empty",
        "empty tree",
        "unit at small constant cost",
        render(unit_case),
    )
    return rb.build()


# ---------------------------------------------------------------------------
# sorting/bounds

@register("sorting/bounds")
def sorting_bounds(seed: int, iterations: int, mode: EvaluationMode) -> Report:
    """Both sorts match the stable specification within their budgets.

    Exhausts every permutation of sizes up to 8 (6 on quick runs with
    fewer than 5000 iterations) and samples random lists up to length
    512; each run must produce the specification's output with at most
    the budgeted number of comparisons, and the sealed wrappers must
    accept every run.
    """
    name = "sorting/bounds"
    rb = ReportBuilder(name, seed, iterations, mode)
    rng = derive_rng(seed, name)
    check_beh, check_cost = mode_gates(mode)
    algorithms = (
        ("isort", isort, isort_bound),
        ("msort", msort, msort_bound),
    )

    def judge(alg_name: str, alg, bound_fn, items: Sequence[Any]) -> None:
        out = alg(items)
        n = len(items)
        budget = bound_fn(n)
        if check_beh:
            expected = sort_spec(items)
            rb.case(
                out.value == expected,
                f"sorting/{alg_name}-behavior",
                items,
                render(expected),
                render(out.value),
            )
        if check_cost:
            rb.case(
                out.cost.value <= budget,
                f"sorting/{alg_name}-bound",
                items,
                f"<= {budget}",
                out.cost.value,
            )
        rb.cost_row(n, out.cost.value, budget)

    exhaustive_n = 8 if iterations >= 5000 else 6
    for n in range(exhaustive_n + 1):
        for perm in itertools.permutations(range(n)):
            for alg_name, alg, bound_fn in algorithms:
                judge(alg_name, alg, bound_fn, perm)

    for _ in range(iterations):
        if rng.random() < 0.1:
            n = rng.randrange(256, 513)
        else:
            n = geometric_size(rng, cap=255)
        items = tuple(rng.randrange(1000) for _ in range(n))
        for alg_name, alg, bound_fn in algorithms:
            judge(alg_name, alg, bound_fn, items)
        try:
            s1 = sealed_sort(isort, isort_bound, items)
            s2 = sealed_sort(msort, msort_bound, items)
            ok = (not check_beh) or (s1.spec.value == s2.spec.value == sort_spec(items))
            rb.case(ok, "sorting/sealed-accepts", items, "both seals valid", render((s1.impl.cost, s2.impl.cost)))
        except BoundViolation as err:
            rb.fail("sorting/sealed-accepts", items, "both seals valid", render(err))
        if check_beh:
            first = lambda alg: alg(items).value[0] if items else None
            rb.case(
                first(isort) == first(msort),
                "sorting/noninterference-client-head",
                items,
                render(first(msort)),
                render(first(isort)),
            )

    frozen = msort((2, 1))
    rb.case(
        frozen == Charged(Cost(1), (1, 2)),
        "sorting/msort-two-elements",
        (2, 1),
        render(Charged(Cost(1), (1, 2))),
        render(frozen),
    )
    ascending = tuple(range(16))
    run = isort(ascending)
    rb.case(
        run.cost.value == len(ascending) - 1,
        "sorting/isort-sorted-input",
        ascending,
        len(ascending) - 1,
        run.cost.value,
    )
    tree = from_iterable((3, 1, 2))
    sealed_tree = sealed_sort_tree(msort, msort_bound, tree)
    rb.case(
        elements(sealed_tree.impl.value) == (1, 2, 3),
        "sorting/sealed-tree",
        (3, 1, 2),
        (1, 2, 3),
        render(elements(sealed_tree.impl.value)),
    )
    return rb.build()
