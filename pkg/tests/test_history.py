import random

import pytest

from pocketforge.history import (
    ORIGIN_GENERATED,
    ORIGIN_TYPED,
    EditorState,
    HistoryStack,
)
from support import RefHistory


def typed(text):
    return EditorState(source_text=text, origin=ORIGIN_TYPED)


def generated(text):
    return EditorState(source_text=text, origin=ORIGIN_GENERATED)


def test_unknown_origin_rejected():
    with pytest.raises(ValueError):
        EditorState(source_text="x", origin="psychic")


def test_commits_outside_window_push():
    h = HistoryStack().commit(typed("A"), 0)
    h = h.commit(typed("B"), 1000)
    assert [s.source_text for s in h.past] == ["A"]
    assert h.present.source_text == "B"


def test_commits_inside_window_coalesce():
    h = HistoryStack().commit(typed("A"), 0)
    h = h.commit(typed("B"), 100)
    assert h.past == ()
    assert h.present.source_text == "B"


def test_window_boundary_coalesces():
    h = HistoryStack().commit(typed("A"), 0)
    h = h.commit(typed("B"), 300)
    assert h.past == ()


def test_generated_commits_never_coalesce():
    h = HistoryStack().commit(generated("A"), 0)
    h = h.commit(generated("B"), 50)
    assert [s.source_text for s in h.past] == ["A"]

    h = HistoryStack().commit(generated("A"), 0)
    h = h.commit(typed("B"), 50)
    assert [s.source_text for s in h.past] == ["A"]

    h = HistoryStack().commit(typed("A"), 0)
    h = h.commit(generated("B"), 50)
    assert [s.source_text for s in h.past] == ["A"]


def test_commit_clears_future():
    h = HistoryStack().commit(typed("A"), 0)
    h = h.commit(typed("B"), 1000)
    h, state = h.undo()
    assert state.source_text == "A"
    assert h.can_redo
    h = h.commit(typed("C"), 2000)
    assert h.future == ()
    assert not h.can_redo
    _, nothing = h.redo()
    assert nothing is None


def test_undo_moves_present_to_future():
    h = HistoryStack().commit(typed("A"), 0)
    h = h.commit(typed("B"), 1000)
    h, state = h.undo()
    assert state.source_text == "A"
    assert h.present.source_text == "A"
    assert [s.source_text for s in h.future] == ["B"]


def test_undo_on_empty_is_noop_signal():
    h = HistoryStack()
    h2, state = h.undo()
    assert state is None and h2 == h
    h = h.commit(typed("A"), 0)
    h2, state = h.undo()
    assert state is None and h2 == h


def test_redo_restores_undone_state():
    h = HistoryStack().commit(typed("A"), 0)
    h = h.commit(typed("B"), 1000)
    h, _ = h.undo()
    h, state = h.redo()
    assert state.source_text == "B"
    assert h.present.source_text == "B"
    assert h.future == ()


def test_redo_on_empty_is_noop_signal():
    h = HistoryStack().commit(typed("A"), 0)
    h2, state = h.redo()
    assert state is None and h2 == h


def test_n_commits_n_undos_returns_to_first():
    h = HistoryStack()
    for i in range(10):
        h = h.commit(typed(f"text {i}"), i * 1000)
    for _ in range(10):
        h, _ = h.undo()
    assert h.present.source_text == "text 0"


def test_undo_then_redo_is_identity():
    h = HistoryStack().commit(typed("A"), 0).commit(typed("B"), 1000)
    before = h.present
    h2, _ = h.undo()
    h3, state = h2.redo()
    assert state == before
    assert h3.present == before


def test_undo_after_commit_returns_precommit_present():
    h = HistoryStack().commit(typed("A"), 0)
    h2 = h.commit(typed("B"), 5000)
    _, state = h2.undo()
    assert state == h.present


def test_capacity_drops_oldest():
    h = HistoryStack(capacity=3)
    for i in range(6):
        h = h.commit(typed(f"text {i}"), i * 1000)
    assert len(h.past) == 3
    assert [s.source_text for s in h.past] == ["text 2", "text 3", "text 4"]


def test_identical_text_replaces_instead_of_pushing():
    h = HistoryStack().commit(typed("A"), 0)
    h = h.commit(typed("B"), 1000)
    h = h.commit(typed("B"), 5000)  # same bytes, far outside the window
    assert [s.source_text for s in h.past] == ["A"]


def test_coalescing_back_to_previous_snapshot_deduplicates():
    # Type away from "a", then back to "a" inside the window: the burst
    # collapses and the duplicate snapshot must not pile up in the past.
    h = HistoryStack().commit(typed("a"), 0)
    h = h.commit(typed("ab"), 1000)     # pushes "a"
    h = h.commit(typed("a"), 1100)      # coalesces back to "a"
    assert h.present.source_text == "a"
    assert h.past == ()
    h = h.commit(typed("fresh"), 5000)
    assert [s.source_text for s in h.past] == ["a"]


def test_undo_breaks_coalescing_window():
    # Typing right after an undo must not swallow the restored state.
    h = HistoryStack().commit(typed("A"), 0)
    h = h.commit(typed("B"), 1000)
    h, _ = h.undo()
    h = h.commit(typed("C"), 1100)
    assert [s.source_text for s in h.past] == ["A"]
    assert h.present.source_text == "C"


def _random_run(seed, steps=500):
    rng = random.Random(seed)
    texts = ["", "a", "ab", "abc", "page one", "page two"]
    origins = [ORIGIN_TYPED, ORIGIN_TYPED, ORIGIN_GENERATED, "restored"]
    stack = HistoryStack(capacity=20)
    model = RefHistory(capacity=20)
    now = 0
    for _ in range(steps):
        action = rng.random()
        if action < 0.6:
            state = EditorState(rng.choice(texts), rng.choice(origins))
            now += rng.randrange(0, 700)
            stack = stack.commit(state, now)
            model.commit(state, now)
        elif action < 0.8:
            stack, got = stack.undo()
            assert got == model.undo()
        else:
            stack, got = stack.redo()
            assert got == model.redo()
        assert stack.present == model.present
        assert list(stack.past) == model.past
        assert list(stack.future) == model.future
        assert stack.can_undo == model.can_undo
        assert stack.can_redo == model.can_redo
        # Invariant: no adjacent byte-identical snapshots in past/future.
        timeline = list(stack.past) + ([stack.present] if stack.present else []) + list(stack.future)
        for left, right in zip(timeline, timeline[1:]):
            assert left.source_text != right.source_text
        assert len(stack.past) <= stack.capacity


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_model_agreement_random_runs(seed):
    _random_run(seed)
