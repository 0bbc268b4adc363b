"""Glued values, coherence checking, and phase projection."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from costglue.phase import (
    AbstractionFn,
    CoherenceError,
    EvaluationMode,
    GluedValue,
    abstract_equal,
    fracture,
    glue,
    project,
    spec_member,
)
from costglue.queues import BATCHED_ALPHA, BatchedQueueState, rev_append

elems = st.integers(min_value=0, max_value=99)
batched_states = st.builds(
    BatchedQueueState,
    st.lists(elems, max_size=8).map(tuple),
    st.lists(elems, max_size=8).map(tuple),
)


class TestGlue:
    def test_glue_accepts_coherent_pair(self) -> None:
        s = BatchedQueueState(inbox=(2,), outbox=(1,))
        g = glue(s, (1, 2), BATCHED_ALPHA)
        assert g.concrete == s
        assert g.abstract == (1, 2)

    def test_glue_rejects_incoherent_pair(self) -> None:
        s = BatchedQueueState(inbox=(2,), outbox=(1,))
        with pytest.raises(CoherenceError) as info:
            glue(s, (2, 1), BATCHED_ALPHA)
        assert info.value.computed == (1, 2)
        assert info.value.claimed == (2, 1)

    def test_direct_construction_is_also_checked(self) -> None:
        with pytest.raises(CoherenceError):
            GluedValue(BatchedQueueState((), ()), (7,), BATCHED_ALPHA)

    @given(batched_states)
    def test_fracture_inverts_glue(self, s: BatchedQueueState) -> None:
        image = rev_append(s)
        g = glue(s, image, BATCHED_ALPHA)
        concrete, abstract, alpha = fracture(g)
        assert concrete == s
        assert abstract == image
        assert alpha is BATCHED_ALPHA
        assert glue(concrete, abstract, alpha) == g

    @given(batched_states)
    def test_tampered_abstract_is_rejected(self, s: BatchedQueueState) -> None:
        image = rev_append(s)
        with pytest.raises(CoherenceError):
            glue(s, image + (999,), BATCHED_ALPHA)


class TestProjection:
    def _glued(self) -> GluedValue[BatchedQueueState, tuple[int, ...]]:
        s = BatchedQueueState(inbox=(3,), outbox=(1, 2))
        return glue(s, (1, 2, 3), BATCHED_ALPHA)

    def test_full_keeps_the_pair(self) -> None:
        g = self._glued()
        assert project(g, EvaluationMode.FULL) is g

    def test_concrete_projects_left(self) -> None:
        g = self._glued()
        assert project(g, EvaluationMode.CONCRETE) == g.concrete

    def test_abstract_projects_right(self) -> None:
        g = self._glued()
        assert project(g, EvaluationMode.ABSTRACT) == (1, 2, 3)

    def test_behavioral_projects_right(self) -> None:
        # Behavioral checking observes abstract images only.
        g = self._glued()
        assert project(g, EvaluationMode.BEHAVIORAL) == (1, 2, 3)

    @given(batched_states)
    def test_abstract_clients_cannot_see_representation(self, s: BatchedQueueState) -> None:
        image = rev_append(s)
        flushed = BatchedQueueState(inbox=(), outbox=image)
        a = project(glue(s, image, BATCHED_ALPHA), EvaluationMode.ABSTRACT)
        b = project(glue(flushed, image, BATCHED_ALPHA), EvaluationMode.ABSTRACT)
        assert a == b


class TestAbstractEqual:
    def test_distinct_representations_same_image(self) -> None:
        a = BatchedQueueState(inbox=(2,), outbox=(1,))
        b = BatchedQueueState(inbox=(), outbox=(1, 2))
        assert abstract_equal(a, b, BATCHED_ALPHA)

    def test_different_images_differ(self) -> None:
        a = BatchedQueueState(inbox=(1,), outbox=())
        b = BatchedQueueState(inbox=(), outbox=(2,))
        assert not abstract_equal(a, b, BATCHED_ALPHA)

    @given(batched_states, batched_states, batched_states)
    def test_kernel_is_an_equivalence(
        self, a: BatchedQueueState, b: BatchedQueueState, c: BatchedQueueState
    ) -> None:
        assert abstract_equal(a, a, BATCHED_ALPHA)
        assert abstract_equal(a, b, BATCHED_ALPHA) == abstract_equal(b, a, BATCHED_ALPHA)
        if abstract_equal(a, b, BATCHED_ALPHA) and abstract_equal(b, c, BATCHED_ALPHA):
            assert abstract_equal(a, c, BATCHED_ALPHA)


class TestSpecMember:
    def test_membership_is_phase_projected(self) -> None:
        # Candidate and witness have different representations but the
        # same image, so the candidate inhabits the specification.
        witness = BatchedQueueState(inbox=(), outbox=(1, 2))
        s = BatchedQueueState(inbox=(2,), outbox=(1,))
        assert spec_member(s, witness, BATCHED_ALPHA.apply)
        assert not spec_member(BatchedQueueState((), ()), witness, BATCHED_ALPHA.apply)

    def test_custom_equality(self) -> None:
        assert spec_member(
            "AB", "ab", lambda x: x, eq_p=lambda a, b: a.lower() == b.lower()
        )


class TestAbstractionFn:
    def test_default_equality_is_structural(self) -> None:
        alpha = AbstractionFn(apply=lambda s: len(s))
        assert alpha.abs_eq(2, 2)
        assert not alpha.abs_eq(2, 3)

    def test_apply(self) -> None:
        assert BATCHED_ALPHA.apply(BatchedQueueState((3,), (1, 2))) == (1, 2, 3)
