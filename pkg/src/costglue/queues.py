"""FIFO queues, twice: a plain list model and a batched two-list structure.

The list queue is the specification: its state is literally the queue
contents, enqueue appends at cost 1, dequeue charges the full length of
the list as a deliberately generous bound.  The batched queue keeps an
inbox (newest first) and an outbox (oldest first); enqueue conses onto
the inbox at cost 1 and dequeue pops the outbox for free, paying to
reverse the inbox into the outbox only when the outbox runs dry.

``rev_append`` is the abstraction function relating them: a batched
state means the list ``outbox ++ reverse(inbox)``.  Every batched
operation commutes with the list operation through it; dequeue's cost
sits below the specification's (that is what makes the bound lax rather
than exact), and over any trace the total reversal work never exceeds
the number of enqueues.

Queues hold plain elements with a distinguished default, returned when
dequeuing an empty queue.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence, Tuple, TypeVar

from .cost import Charged, Cost, bind, erase, ret
from .phase import AbstractionFn, spec_member

E = TypeVar("E")

DEFAULT_ELEMENT = 0

# Operation name -> arity, for trace validation.
QUEUE_INTERFACE = {"enqueue": 1, "dequeue": 0}


@dataclass(frozen=True)
class ListQueueState:
    """Specification queue: the abstract list itself, oldest element first."""

    items: Tuple[Any, ...] = ()


@dataclass(frozen=True)
class BatchedQueueState:
    """Two-list queue: inbox newest-first, outbox oldest-first."""

    inbox: Tuple[Any, ...] = ()
    outbox: Tuple[Any, ...] = ()


def rev_append(state: BatchedQueueState) -> Tuple[Any, ...]:
    """The list a batched state represents: outbox ++ reverse(inbox)."""
    return state.outbox + tuple(reversed(state.inbox))


LIST_ALPHA: AbstractionFn = AbstractionFn(apply=lambda s: s.items)
BATCHED_ALPHA: AbstractionFn = AbstractionFn(apply=rev_append)


# -- list queue operations ----------------------------------------------

def list_empty() -> ListQueueState:
    return ListQueueState()


def list_enqueue(e: Any, s: ListQueueState) -> Charged[ListQueueState]:
    """Append at the back; one unit, same as the batched enqueue."""
    return Charged(Cost(1), ListQueueState(s.items + (e,)))


def list_dequeue(s: ListQueueState, default: Any = DEFAULT_ELEMENT) -> Charged[Tuple[Any, ListQueueState]]:
    """Pop the front, charging the full current length.

    The length charge is an upper bound chosen to dominate the batched
    queue's occasional reversal; an empty queue yields the default
    element at no cost.
    """
    if not s.items:
        return ret((default, s))
    return Charged(Cost(len(s.items)), (s.items[0], ListQueueState(s.items[1:])))


# -- batched queue operations -------------------------------------------

def batched_empty() -> BatchedQueueState:
    return BatchedQueueState()


def batched_enqueue(e: Any, s: BatchedQueueState) -> Charged[BatchedQueueState]:
    """Cons onto the inbox; one unit."""
    return Charged(Cost(1), BatchedQueueState((e,) + s.inbox, s.outbox))


def batched_dequeue(s: BatchedQueueState, default: Any = DEFAULT_ELEMENT) -> Charged[Tuple[Any, BatchedQueueState]]:
    """Pop the oldest element.

    Free while the outbox has elements.  When it runs dry the inbox is
    reversed into the outbox, costing one unit per inbox element; the
    front of the reversed list is returned immediately.
    """
    if s.outbox:
        return ret((s.outbox[0], BatchedQueueState(s.inbox, s.outbox[1:])))
    if s.inbox:
        flipped = tuple(reversed(s.inbox))
        return Charged(Cost(len(s.inbox)), (flipped[0], BatchedQueueState((), flipped[1:])))
    return ret((default, s))


# -- packaged implementations -------------------------------------------

@dataclass(frozen=True)
class QueueImpl:
    """A queue implementation bundled with its abstraction function."""

    name: str
    empty: Callable[[], Any]
    enqueue: Callable[[Any, Any], Charged[Any]]
    dequeue: Callable[[Any], Charged[Tuple[Any, Any]]]
    alpha: AbstractionFn


LIST_QUEUE = QueueImpl(
    name="list",
    empty=list_empty,
    enqueue=list_enqueue,
    dequeue=list_dequeue,
    alpha=LIST_ALPHA,
)

BATCHED_QUEUE = QueueImpl(
    name="batched",
    empty=batched_empty,
    enqueue=batched_enqueue,
    dequeue=batched_dequeue,
    alpha=BATCHED_ALPHA,
)


def sealed_dequeue(s: BatchedQueueState, default: Any = DEFAULT_ELEMENT):
    """Batched dequeue sealed under the list-queue dequeue bound.

    Both sides are stated over abstract outputs: the implementation is
    the batched dequeue with its resulting state pushed through
    ``rev_append``, the specification is the list dequeue on the state's
    image.  Seal validity is exactly the lax cost square for dequeue.
    """
    from .sealing import Sealed, seal

    impl = bind(
        batched_dequeue(s, default),
        lambda out: ret((out[0], rev_append(out[1]))),
    )
    spec = bind(
        list_dequeue(ListQueueState(rev_append(s)), default),
        lambda out: ret((out[0], out[1].items)),
    )
    return seal(impl, spec)


# -- trace running --------------------------------------------------------

@dataclass(frozen=True)
class TraceRun:
    """Everything observable from running one trace against one implementation."""

    outputs: Tuple[Any, ...]
    total_cost: int
    final_state: Any
    step_costs: Tuple[Tuple[str, int], ...]


def run_trace(impl: QueueImpl, ops: Sequence[Tuple[str, Tuple[Any, ...]]],
              default: Any = DEFAULT_ELEMENT) -> TraceRun:
    """Run a sequence of (op name, args) from the empty queue."""
    state = impl.empty()
    outputs = []
    steps = []
    total = 0
    for name, args in ops:
        if name == "enqueue":
            (e,) = args
            step = impl.enqueue(e, state)
            state = step.value
        elif name == "dequeue":
            step = impl.dequeue(state)
            e, state = step.value
            outputs.append(e)
        else:
            raise ValueError(f"unknown queue operation: {name!r}")
        steps.append((name, step.cost.value))
        total += step.cost.value
    return TraceRun(tuple(outputs), total, state, tuple(steps))


def trace_observation(impl: QueueImpl, ops: Sequence[Tuple[str, Tuple[Any, ...]]]) -> Tuple[Any, ...]:
    """The abstract footprint of a trace: dequeued elements plus final image."""
    run = run_trace(impl, ops)
    return (run.outputs, impl.alpha.apply(run.final_state))


def queue_spec_member(candidate: QueueImpl, specification: QueueImpl,
                      traces: Sequence[Sequence[Tuple[str, Tuple[Any, ...]]]]) -> bool:
    """Phase-projected membership test for queue implementations.

    A candidate inhabits the queue specification when it is
    observationally identical to the specification witness across the
    sampled traces: same dequeued elements, same abstract final states.
    """
    def projection(impl: QueueImpl) -> Tuple[Any, ...]:
        return tuple(trace_observation(impl, t) for t in traces)

    return spec_member(candidate, specification, projection)


# -- client programs ------------------------------------------------------

def demo(q: QueueImpl, e: Any) -> Any:
    """Enqueue one element into the empty queue and dequeue it back."""
    run = bind(q.enqueue(e, q.empty()), q.dequeue)
    return erase(run)[0]


def from_list(q: QueueImpl, items: Sequence[Any]) -> Any:
    """Build a queue by enqueueing ``items`` back to front.

    The recursion enqueues the last element first, so the head of
    ``items`` ends up newest in the queue.
    """
    state = q.empty()
    for e in reversed(items):
        state = erase(q.enqueue(e, state))
    return state


def to_list(q: QueueImpl, k: int, state: Any) -> Tuple[Any, ...]:
    """Dequeue ``k`` elements in order; an exhausted queue pads with defaults."""
    out = []
    for _ in range(k):
        e, state = erase(q.dequeue(state))
        out.append(e)
    return tuple(out)


def qreverse(q: QueueImpl, items: Sequence[Any]) -> Tuple[Any, ...]:
    """Reverse a list by feeding it through a queue.

    Because ``from_list`` enqueues back to front, draining the queue
    returns the elements of ``items`` reversed, for any lawful queue.
    """
    return to_list(q, len(items), from_list(q, items))
