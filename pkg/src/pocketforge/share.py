"""Saving and sharing: permalinks, file export, and bookmarks.

Sharing is serverless. The whole editor state travels inside the URL
fragment as a permalink:

    "v1." + base64url(raw DEFLATE of the UTF-8 text), no padding

The DEFLATE configuration is pinned (level 9, 32 KiB window, default
strategy) so the encoding is reproducible bit-for-bit. Decoding rejects
anything it cannot invert exactly: bad prefix, characters outside the
base64url alphabet, truncated or trailing compressed data, non-UTF-8
payloads.

Bookmarks persist through a small storage-adapter interface with two
implementations: an in-memory store and a JSON-file store whose schema
is a list of {"label", "text", "created_at"} entries.
"""

from __future__ import annotations

import base64
import json
import os
import re
import time
import zlib
from dataclasses import dataclass
from pathlib import Path

from .history import ORIGIN_RESTORED, EditorState

PERMALINK_VERSION = 1
_PREFIX = "v1."
_B64URL_RE = re.compile(r"[A-Za-z0-9_-]*")
_TO_STANDARD = str.maketrans("-_", "+/")


class PermalinkDecodeError(ValueError):
    """The permalink cannot be decoded; callers fall back to a fresh generation."""


class StorageError(RuntimeError):
    """The bookmark store could not be read or written."""


@dataclass(frozen=True)
class Permalink:
    encoded: str
    version: int = PERMALINK_VERSION


def _deflate(data: bytes) -> bytes:
    compressor = zlib.compressobj(9, zlib.DEFLATED, -15, 8, zlib.Z_DEFAULT_STRATEGY)
    return compressor.compress(data) + compressor.flush()


def encode_permalink(state: EditorState) -> Permalink:
    """URL-safe encoding of the full editor text; decode inverts exactly."""
    payload = _deflate(state.source_text.encode("utf-8"))
    body = base64.urlsafe_b64encode(payload).rstrip(b"=").decode("ascii")
    return Permalink(encoded=_PREFIX + body)


def decode_permalink(encoded: str) -> EditorState:
    """Invert :func:`encode_permalink`; the result carries origin=restored."""
    if not encoded.startswith(_PREFIX):
        raise PermalinkDecodeError("unsupported permalink version")
    body = encoded[len(_PREFIX):]
    if not _B64URL_RE.fullmatch(body):
        raise PermalinkDecodeError("permalink contains characters outside the base64url alphabet")
    if len(body) % 4 == 1:
        raise PermalinkDecodeError("permalink is truncated")
    padded = body.translate(_TO_STANDARD) + "=" * (-len(body) % 4)
    try:
        payload = base64.b64decode(padded, validate=True)
    except (ValueError, TypeError) as err:
        raise PermalinkDecodeError("permalink is not valid base64url") from err

    decompressor = zlib.decompressobj(-15)
    try:
        raw = decompressor.decompress(payload)
    except zlib.error as err:
        raise PermalinkDecodeError(f"corrupt compressed payload: {err}") from err
    if not decompressor.eof:
        raise PermalinkDecodeError("compressed payload is truncated")
    if decompressor.unused_data:
        raise PermalinkDecodeError("trailing bytes after compressed payload")
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as err:
        raise PermalinkDecodeError("payload is not valid UTF-8") from err
    return EditorState(source_text=text, origin=ORIGIN_RESTORED)


def export_html(state: EditorState) -> bytes:
    """Standalone .html file contents; exactly the editor text as UTF-8."""
    return state.source_text.encode("utf-8")


@dataclass(frozen=True)
class Bookmark:
    label: str
    text: str
    created_at: int  # epoch milliseconds


def _now_ms() -> int:
    return int(time.time() * 1000)


class BookmarkStore:
    """Base store: validation and ordering over adapter primitives."""

    def _load(self) -> list[Bookmark]:
        raise NotImplementedError

    def _save(self, items: list[Bookmark]) -> None:
        raise NotImplementedError

    def add(self, label: str, state: EditorState, now_ms: int | None = None) -> Bookmark:
        if not label:
            raise ValueError("bookmark label must be nonempty")
        if not state.source_text:
            raise ValueError("bookmark text must be nonempty")
        bookmark = Bookmark(label=label, text=state.source_text,
                            created_at=_now_ms() if now_ms is None else now_ms)
        items = self._load()
        items.append(bookmark)
        self._save(items)
        return bookmark

    def list(self) -> list[Bookmark]:
        """Newest first; ties on created_at broken by insertion order."""
        items = self._load()
        order = sorted(range(len(items)), key=lambda i: (items[i].created_at, i), reverse=True)
        return [items[i] for i in order]


class InMemoryBookmarkStore(BookmarkStore):
    def __init__(self) -> None:
        self._items: list[Bookmark] = []

    def _load(self) -> list[Bookmark]:
        return list(self._items)

    def _save(self, items: list[Bookmark]) -> None:
        self._items = list(items)


class FileBookmarkStore(BookmarkStore):
    """JSON-file adapter; every add is written through atomically."""

    def __init__(self, path: str | os.PathLike[str]):
        self.path = Path(path)

    def _load(self) -> list[Bookmark]:
        try:
            payload = self.path.read_text(encoding="utf-8")
        except FileNotFoundError:
            return []
        except OSError as err:
            raise StorageError(f"cannot read bookmark store {self.path}: {err}") from err
        try:
            data = json.loads(payload)
            if not isinstance(data, list):
                raise ValueError("store must hold a JSON list")
            return [
                Bookmark(label=e["label"], text=e["text"], created_at=int(e["created_at"]))
                for e in data
            ]
        except (ValueError, KeyError, TypeError) as err:
            raise StorageError(f"bookmark store {self.path} is corrupt: {err}") from err

    def _save(self, items: list[Bookmark]) -> None:
        data = [{"label": b.label, "text": b.text, "created_at": b.created_at} for b in items]
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            tmp.write_text(json.dumps(data, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
            os.replace(tmp, self.path)
        except OSError as err:
            raise StorageError(f"cannot write bookmark store {self.path}: {err}") from err
