"""Shared test helpers: fuzz text, an independent UTF-8 length count,
and a flat-list reference model for the history stack."""

from __future__ import annotations

import random

from pocketforge.history import EditorState


def random_text(rng: random.Random, max_len: int = 64) -> str:
    """Random valid-UTF-8 text covering 1- through 4-byte encodings."""
    n = rng.randrange(max_len + 1)
    chars = []
    for _ in range(n):
        bucket = rng.random()
        if bucket < 0.45:
            cp = rng.randrange(0x00, 0x80)
        elif bucket < 0.65:
            cp = rng.randrange(0x80, 0x800)
        elif bucket < 0.85:
            cp = rng.randrange(0x800, 0x10000)
            while 0xD800 <= cp <= 0xDFFF:
                cp = rng.randrange(0x800, 0x10000)
        else:
            cp = rng.randrange(0x10000, 0x110000)
        chars.append(chr(cp))
    return "".join(chars)


def utf8_length(text: str) -> int:
    """UTF-8 byte count computed per code point, without encoding."""
    total = 0
    for ch in text:
        cp = ord(ch)
        if cp < 0x80:
            total += 1
        elif cp < 0x800:
            total += 2
        elif cp < 0x10000:
            total += 3
        else:
            total += 4
    return total


class RefHistory:
    """Flat timeline + cursor model of the undo/redo contract."""

    def __init__(self, capacity: int = 200, coalesce_window_ms: int = 300):
        self.states: list[EditorState] = []
        self.cursor = -1
        self.capacity = capacity
        self.window = coalesce_window_ms
        self.anchor: int | None = None

    @property
    def present(self) -> EditorState | None:
        return self.states[self.cursor] if self.cursor >= 0 else None

    @property
    def past(self) -> list[EditorState]:
        return self.states[: self.cursor] if self.cursor >= 0 else []

    @property
    def future(self) -> list[EditorState]:
        return self.states[self.cursor + 1 :] if self.cursor >= 0 else []

    @property
    def can_undo(self) -> bool:
        return self.cursor > 0

    @property
    def can_redo(self) -> bool:
        return 0 <= self.cursor < len(self.states) - 1

    def commit(self, state: EditorState, now_ms: int) -> None:
        if self.cursor >= 0:
            present = self.states[self.cursor]
            identical = state.source_text == present.source_text
            coalesce = (
                state.origin == "typed"
                and present.origin == "typed"
                and self.anchor is not None
                and 0 <= now_ms - self.anchor <= self.window
            )
            if identical or coalesce:
                prefix = self.states[: self.cursor]
                if prefix and prefix[-1].source_text == state.source_text:
                    prefix = prefix[:-1]
                self.states = prefix + [state]
                self.cursor = len(self.states) - 1
                self.anchor = now_ms
                return
        self.states = self.states[: self.cursor + 1] + [state]
        self.cursor = len(self.states) - 1
        if self.cursor > self.capacity:
            drop = self.cursor - self.capacity
            self.states = self.states[drop:]
            self.cursor -= drop
        self.anchor = now_ms

    def undo(self) -> EditorState | None:
        if not self.can_undo:
            return None
        self.cursor -= 1
        self.anchor = None
        return self.states[self.cursor]

    def redo(self) -> EditorState | None:
        if not self.can_redo:
            return None
        self.cursor += 1
        self.anchor = None
        return self.states[self.cursor]
