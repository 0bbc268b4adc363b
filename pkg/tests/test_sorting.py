"""Sorting algorithms, comparison budgets, sealed certificates."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import pytest
from hypothesis import given, strategies as st

from costglue.cost import Charged, Cost
from costglue.rbtree import elements, from_iterable
from costglue.sealing import BoundViolation
from costglue.sorting import (
    ceil_lg,
    isort,
    isort_bound,
    msort,
    msort_bound,
    sealed_sort,
    sealed_sort_tree,
    sort_spec,
)

keys = st.integers(min_value=0, max_value=50)
seqs = st.lists(keys, max_size=64).map(tuple)


@dataclass(frozen=True)
class Tagged:
    """Orders by key only; the tag exposes reorderings of equal keys."""

    key: int
    tag: int = field(compare=False)

    def __lt__(self, other: "Tagged") -> bool:
        return self.key < other.key


class TestFrozenCases:
    def test_isort_sorted_input_is_linear(self) -> None:
        assert isort((1, 2, 3)) == Charged(Cost(2), (1, 2, 3))

    def test_isort_reversed_is_quadratic(self) -> None:
        out = isort((3, 2, 1))
        assert out.value == (1, 2, 3)
        assert out.cost == Cost(3)

    def test_msort_two(self) -> None:
        assert msort((2, 1)) == Charged(Cost(1), (1, 2))

    def test_isort_sorted_sixteen(self) -> None:
        assert isort(tuple(range(16))).cost == Cost(15)

    def test_empty_and_singleton_are_free(self) -> None:
        for f in (isort, msort):
            assert f(()) == Charged(Cost(0), ())
            assert f((7,)) == Charged(Cost(0), (7,))

    def test_ceil_lg(self) -> None:
        assert [ceil_lg(n) for n in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]


class TestBehavior:
    @given(seqs)
    def test_isort_matches_sorted(self, xs: tuple[int, ...]) -> None:
        assert isort(xs).value == tuple(sorted(xs))

    @given(seqs)
    def test_msort_matches_sorted(self, xs: tuple[int, ...]) -> None:
        assert msort(xs).value == tuple(sorted(xs))

    @given(st.lists(st.tuples(keys, st.integers(0, 9)), max_size=32))
    def test_both_sorts_are_stable(self, pairs: list[tuple[int, int]]) -> None:
        items = tuple(Tagged(k, i) for i, (k, _) in enumerate(pairs))
        baseline = tuple(sorted(items, key=lambda t: t.key))
        for f in (isort, msort):
            got = f(items).value
            assert tuple((t.key, t.tag) for t in got) == tuple(
                (t.key, t.tag) for t in baseline
            )

    @given(seqs)
    def test_sort_spec_oracle(self, xs: tuple[int, ...]) -> None:
        assert sort_spec(xs) == tuple(sorted(xs))


class TestBounds:
    @given(seqs)
    def test_isort_within_quadratic_budget(self, xs: tuple[int, ...]) -> None:
        assert isort(xs).cost.value <= isort_bound(len(xs))

    @given(seqs)
    def test_msort_within_linearithmic_budget(self, xs: tuple[int, ...]) -> None:
        assert msort(xs).cost.value <= msort_bound(len(xs))

    def test_exhaustive_small_permutations(self) -> None:
        for n in range(7):
            worst_i = worst_m = 0
            for perm in itertools.permutations(range(n)):
                worst_i = max(worst_i, isort(perm).cost.value)
                worst_m = max(worst_m, msort(perm).cost.value)
            assert worst_i <= isort_bound(n)
            assert worst_m <= msort_bound(n)

    def test_msort_worst_case_of_four(self) -> None:
        worst = max(msort(p).cost.value for p in itertools.permutations(range(4)))
        assert worst == 5
        assert worst <= msort_bound(4) == 8

    def test_budgets_are_comparison_counts_not_time(self) -> None:
        assert isort_bound(10) == 100
        assert msort_bound(10) == 40


class TestSealedSort:
    def test_sealed_isort_example(self) -> None:
        cert = sealed_sort(isort, isort_bound, (3, 1, 2))
        assert cert.impl.value == (1, 2, 3)
        assert cert.spec.cost == Cost(9)
        assert cert.impl.cost <= cert.spec.cost

    @given(seqs)
    def test_sealing_never_fails_for_honest_budgets(self, xs: tuple[int, ...]) -> None:
        sealed_sort(isort, isort_bound, xs)
        sealed_sort(msort, msort_bound, xs)

    def test_dishonest_budget_is_rejected(self) -> None:
        with pytest.raises(BoundViolation):
            sealed_sort(isort, lambda n: max(0, n - 1), (3, 2, 1))

    @given(seqs)
    def test_sealed_sort_tree_collects_sorted_elements(self, xs: tuple[int, ...]) -> None:
        cert = sealed_sort_tree(msort, msort_bound, from_iterable(xs))
        assert elements(cert.impl.value) == tuple(sorted(xs))

    def test_sealed_sort_tree_example(self) -> None:
        cert = sealed_sort_tree(isort, isort_bound, from_iterable((3, 1, 2)))
        assert elements(cert.impl.value) == (1, 2, 3)
        assert elements(cert.spec.value) == (1, 2, 3)
