"""Red-black tree sequences with data at the leaves.

A tree is Empty, a Leaf holding one element, or a Red/Black node over
two subtrees.  Empty and leaves are black with black height 0; a red
node requires black children of equal black height and keeps that
height; a black node requires children of equal black height and adds
one.  Color, black height, and size are cached on every node, and the
structural half of the invariant (equal child black heights) is enforced
at construction, so an ill-heighted node cannot exist.

``elements`` reads the leaves left to right; that is the abstraction
function, and every sequence operation is specified up to it.  ``append``
concatenates two trees by descending the taller tree's spine to the
height of the shorter, attaching, and rotating/recoloring upward; it
behaves abstractly like a single node constructor over the two trees,
and its cost, one unit per node built, stays within a constant multiple
of the black-height difference.

``mapreduce`` folds a tree into any monoid by replacing constructors
with the target's operations; ``reduce`` is the element fold with an
explicit linear cost budget, and ``length_fast`` answers from the cached
size in one unit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Iterable, List, Tuple

from .cost import Charged, Cost, ret
from .harness import MonoidOps
from .phase import AbstractionFn

# Cost of append is bounded by APPEND_BOUND_FACTOR * (|bh1 - bh2| + 2).
# One spine step builds at most four nodes (a red rebuild plus a
# rotation), and promoting the two roots to black adds at most two more,
# which the +2 slack absorbs; measured worst cases sit well inside this.
APPEND_BOUND_FACTOR = 4


class Color(Enum):
    RED = "red"
    BLACK = "black"


class RBTree:
    """Base class for sequence trees; see the module docstring."""

    __slots__ = ()


@dataclass(frozen=True)
class Empty(RBTree):
    """The empty sequence; black, height 0."""

    color = Color.BLACK
    black_height = 0
    size = 0


@dataclass(frozen=True)
class Leaf(RBTree):
    """A one-element sequence; black, height 0."""

    value: Any

    color = Color.BLACK
    black_height = 0
    size = 1


@dataclass(frozen=True)
class Node(RBTree):
    """An internal node; children must agree on black height."""

    color: Color
    left: RBTree
    right: RBTree
    black_height: int = field(init=False, compare=False, repr=False)
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        lbh = self.left.black_height
        if lbh != self.right.black_height:
            raise ValueError(
                f"child black heights differ: {lbh} vs {self.right.black_height}"
            )
        bump = 1 if self.color is Color.BLACK else 0
        object.__setattr__(self, "black_height", lbh + bump)
        object.__setattr__(self, "size", self.left.size + self.right.size)


EMPTY = Empty()


def empty() -> RBTree:
    return EMPTY


def singleton(e: Any) -> RBTree:
    return Leaf(e)


def elements(t: RBTree) -> Tuple[Any, ...]:
    """Leaves in left-to-right order: the abstract view of the tree."""
    out: List[Any] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            out.append(node.value)
        elif isinstance(node, Node):
            stack.append(node.right)
            stack.append(node.left)
    return tuple(out)


ELEMENTS_ALPHA: AbstractionFn = AbstractionFn(apply=elements)


def validate(t: RBTree) -> None:
    """Audit the full invariant, cached fields included.

    Raises ``ValueError`` at the first breach: a red node with a red
    child, children of unequal black height, or a stale cache.
    """
    _validate(t)


def _validate(t: RBTree) -> Tuple[int, int]:
    if isinstance(t, Empty):
        return 0, 0
    if isinstance(t, Leaf):
        return 0, 1
    if not isinstance(t, Node):
        raise ValueError(f"not a tree: {t!r}")
    lbh, lsize = _validate(t.left)
    rbh, rsize = _validate(t.right)
    if lbh != rbh:
        raise ValueError(f"child black heights differ: {lbh} vs {rbh}")
    if t.color is Color.RED:
        if t.left.color is not Color.BLACK or t.right.color is not Color.BLACK:
            raise ValueError("red node with a red child")
        bh = lbh
    else:
        bh = lbh + 1
    if t.black_height != bh:
        raise ValueError(f"cached black height {t.black_height}, recomputed {bh}")
    size = lsize + rsize
    if t.size != size:
        raise ValueError(f"cached size {t.size}, recomputed {size}")
    return bh, size


def root_color(t: RBTree) -> Color:
    """Concrete-mode observer only.

    The root color distinguishes trees with equal elements, so no
    abstract client may depend on it; it exists for audits and for
    balancing diagnostics.
    """
    return t.color


# -- append ----------------------------------------------------------------

def append(t1: RBTree, t2: RBTree) -> Charged[RBTree]:
    """Concatenate two sequences.

    Abstractly this is the two-child node constructor: the elements of
    the result are the elements of ``t1`` then those of ``t2``.
    Concretely the taller tree keeps its shape except along one spine,
    so only O(|bh1 - bh2|) nodes are built; each node built (including
    recolorings, which rebuild a node) charges one unit.
    """
    if isinstance(t1, Empty):
        return ret(t2)
    if isinstance(t2, Empty):
        return ret(t1)
    built = [0]

    def new(color: Color, left: RBTree, right: RBTree) -> Node:
        built[0] += 1
        return Node(color, left, right)

    b1 = _blacken(t1, new)
    b2 = _blacken(t2, new)
    if b1.black_height >= b2.black_height:
        joined = _join_right(b1, b2, new)
    else:
        joined = _join_left(b1, b2, new)
    return Charged(Cost(built[0]), joined)


def append_bound(t1: RBTree, t2: RBTree) -> int:
    """The sealed-style cost budget for ``append`` on these trees."""
    diff = abs(t1.black_height - t2.black_height)
    return APPEND_BOUND_FACTOR * (diff + 2)


def _blacken(t: RBTree, new: Callable[..., Node]) -> RBTree:
    if t.color is Color.RED:
        assert isinstance(t, Node)
        return new(Color.BLACK, t.left, t.right)
    return t


def _join_right(t1: RBTree, t2: RBTree, new: Callable[..., Node]) -> RBTree:
    # pre: bh(t1) >= bh(t2), t2 black-rooted.  Returns a tree with the
    # elements of t1 then t2 and black height bh(t1), valid except
    # possibly a red root whose right child is red; the caller's
    # rebalance (or the black root at top level) removes the exception.
    if t1.color is Color.RED:
        assert isinstance(t1, Node)
        return new(Color.RED, t1.left, _join_right(t1.right, t2, new))
    if t1.black_height == t2.black_height:
        return new(Color.RED, t1, t2)
    assert isinstance(t1, Node)
    j = _join_right(t1.right, t2, new)
    if j.color is Color.RED and j.right.color is Color.RED:
        # red-red along the join edge: one rotation restores the invariant.
        assert isinstance(j, Node) and isinstance(j.right, Node)
        return new(
            Color.RED,
            new(Color.BLACK, t1.left, j.left),
            new(Color.BLACK, j.right.left, j.right.right),
        )
    return new(Color.BLACK, t1.left, j)


def _join_left(t1: RBTree, t2: RBTree, new: Callable[..., Node]) -> RBTree:
    # Mirror image of _join_right: descends the left spine of t2.
    if t2.color is Color.RED:
        assert isinstance(t2, Node)
        return new(Color.RED, _join_left(t1, t2.left, new), t2.right)
    if t1.black_height == t2.black_height:
        return new(Color.RED, t1, t2)
    assert isinstance(t2, Node)
    j = _join_left(t1, t2.left, new)
    if j.color is Color.RED and j.left.color is Color.RED:
        assert isinstance(j, Node) and isinstance(j.left, Node)
        return new(
            Color.RED,
            new(Color.BLACK, j.left.left, j.left.right),
            new(Color.BLACK, j.right, t2.right),
        )
    return new(Color.BLACK, j, t2.right)


def from_iterable(items: Iterable[Any]) -> RBTree:
    """Build a sequence by appending singletons; costs are discarded."""
    t = EMPTY
    for e in items:
        t = append(t, Leaf(e)).value
    return t


# -- folds -------------------------------------------------------------------

def mapreduce(t: RBTree, target: MonoidOps) -> Charged[Any]:
    """Replace constructors with the target monoid's operations.

    Empty becomes the target's empty, a leaf becomes a mapped singleton,
    and every internal node becomes a charged append; the total cost is
    the sum of the target appends.  Abstractly this is the list fold
    over ``elements(t)``.
    """
    if isinstance(t, Empty):
        return ret(target.empty)
    if isinstance(t, Leaf):
        return ret(target.singleton(t.value))
    assert isinstance(t, Node)
    left = mapreduce(t.left, target)
    right = mapreduce(t.right, target)
    combined = target.append(left.value, right.value)
    return Charged(left.cost + right.cost + combined.cost, combined.value)


def length_fast(t: RBTree) -> int:
    """The cached element count; one unit of work regardless of size."""
    return t.size


def reduce(f: Callable[[Any, Any], Charged[Any]], unit: Any, t: RBTree) -> Charged[Any]:
    """Fold the elements with a charged combiner.

    Charges one unit per leaf or empty visited, plus whatever ``f``
    charges at each internal node.  With a unit-cost combiner the total
    for a nonempty tree is leaves plus internal nodes, under twice the
    size; the empty tree costs its single visit.
    """
    if isinstance(t, Empty):
        return Charged(Cost(1), unit)
    if isinstance(t, Leaf):
        return Charged(Cost(1), t.value)
    assert isinstance(t, Node)
    left = reduce(f, unit, t.left)
    right = reduce(f, unit, t.right)
    combined = f(left.value, right.value)
    return Charged(left.cost + right.cost + combined.cost, combined.value)
