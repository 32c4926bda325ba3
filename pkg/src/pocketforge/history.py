"""Undo/redo state machine over editor snapshots.

Snapshots are full texts, not diffs; artifact pages are a few KB at
most. Typed commits landing within the coalescing window replace the
present snapshot instead of pushing it, so undo steps over keystroke
bursts. Generated and restored commits never coalesce, and undo/redo
clear the coalescing anchor so a typed commit right after an undo can
never swallow the state the user just returned to.

Stacks are immutable; every transition returns a new value, which makes
them safe to hand between threads as long as callers serialize writes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

ORIGIN_TYPED = "typed"
ORIGIN_GENERATED = "generated"
ORIGIN_RESTORED = "restored"
ORIGINS = frozenset({ORIGIN_TYPED, ORIGIN_GENERATED, ORIGIN_RESTORED})

DEFAULT_CAPACITY = 200
DEFAULT_COALESCE_WINDOW_MS = 300


@dataclass(frozen=True)
class EditorState:
    """Contents of the code editing panel and how they got there.

    source_text is expected to be empty only for typed states; the
    generator and the permalink decoder normally produce nonempty text.
    """

    source_text: str
    origin: str = ORIGIN_TYPED

    def __post_init__(self) -> None:
        if self.origin not in ORIGINS:
            raise ValueError(f"unknown origin {self.origin!r}")


@dataclass(frozen=True)
class HistoryStack:
    past: tuple[EditorState, ...] = ()
    present: EditorState | None = None
    future: tuple[EditorState, ...] = ()
    capacity: int = DEFAULT_CAPACITY
    coalesce_window_ms: int = DEFAULT_COALESCE_WINDOW_MS
    last_commit_ms: int | None = None

    @property
    def can_undo(self) -> bool:
        return bool(self.past)

    @property
    def can_redo(self) -> bool:
        return bool(self.future)

    def commit(self, state: EditorState, now_ms: int) -> "HistoryStack":
        """Make ``state`` the present snapshot.

        The previous present is pushed to the past unless the commit
        coalesces (typed onto typed within the window) or the text is
        byte-identical to the present. Any redo states are dropped.
        """
        if self.present is None:
            return replace(self, present=state, future=(), last_commit_ms=now_ms)

        identical = state.source_text == self.present.source_text
        coalesce = (
            state.origin == ORIGIN_TYPED
            and self.present.origin == ORIGIN_TYPED
            and self.last_commit_ms is not None
            and 0 <= now_ms - self.last_commit_ms <= self.coalesce_window_ms
        )
        if identical or coalesce:
            past = self.past
            # Coalescing back to the previous snapshot's text would leave
            # adjacent identical entries once pushed; drop the duplicate.
            if past and past[-1].source_text == state.source_text:
                past = past[:-1]
            return replace(self, past=past, present=state, future=(), last_commit_ms=now_ms)

        past = self.past + (self.present,)
        if len(past) > self.capacity:
            past = past[len(past) - self.capacity:]
        return replace(self, past=past, present=state, future=(), last_commit_ms=now_ms)

    def undo(self) -> tuple["HistoryStack", EditorState | None]:
        """Step back one snapshot; (self, None) signals nothing to undo."""
        if not self.past or self.present is None:
            return self, None
        restored = self.past[-1]
        moved = replace(
            self,
            past=self.past[:-1],
            present=restored,
            future=(self.present,) + self.future,
            last_commit_ms=None,
        )
        return moved, restored

    def redo(self) -> tuple["HistoryStack", EditorState | None]:
        """Inverse of undo; (self, None) signals nothing to redo."""
        if not self.future or self.present is None:
            return self, None
        restored = self.future[0]
        moved = replace(
            self,
            past=self.past + (self.present,),
            present=restored,
            future=self.future[1:],
            last_commit_ms=None,
        )
        return moved, restored
