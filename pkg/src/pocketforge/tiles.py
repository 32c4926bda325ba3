"""Slot/tile grammar and seeded generation of page artifacts.

A tile set names a list of slots (CSS properties plus a handful of
element roles) and the candidate tiles that can fill each one. Given a
64-bit seed, generation picks one tile per slot and assembles a fixed
page skeleton around the choices.

The random stream is splitmix64 with per-slot draws taken by rejection
sampling, so any implementation of the same two primitives reproduces
byte-identical pages for a given (tile set, seed) pair:

    state += 0x9E3779B97F4A7C15               (mod 2^64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (mod 2^64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB  (mod 2^64)
    output = z ^ (z >> 31)

    index into k tiles: draw until output < 2^64 - (2^64 mod k),
    then take output mod k.
"""

from __future__ import annotations

import functools
import json
import math
import re
from dataclasses import dataclass
from importlib import resources

from .document import Document, Element, Text

KIND_CSS_PROPERTY = "css_property"
KIND_HTML_ELEMENT = "html_element"
KINDS = frozenset({KIND_CSS_PROPERTY, KIND_HTML_ELEMENT})

ROLE_SPAN_TEXT = "span_text"
ROLE_IMG_SRC = "img_src"
ROLE_IMG_ALT = "img_alt"
ROLE_FIGCAPTION_TEXT = "figcaption_text"
ELEMENT_ROLES = frozenset({ROLE_SPAN_TEXT, ROLE_IMG_SRC, ROLE_IMG_ALT, ROLE_FIGCAPTION_TEXT})

CONTAINER_CLASS = "artifact"
MAX_SEED = 2**64 - 1

_CSS_PROPERTY_RE = re.compile(r"-?[a-zA-Z][a-zA-Z0-9-]*")

_TOP_KEYS = {"version", "slots"}
_SLOT_KEYS = {"id", "kind", "target", "tiles"}


class TileSetError(ValueError):
    """Raised for malformed or invalid tile-set sources."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + location)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Slot:
    id: str
    kind: str
    target: str
    tiles: tuple[str, ...]


@dataclass(frozen=True)
class TileSet:
    version: str
    slots: tuple[Slot, ...]

    def slot(self, slot_id: str) -> Slot:
        for slot in self.slots:
            if slot.id == slot_id:
                return slot
        raise KeyError(slot_id)

    def validate(self) -> None:
        """Raise TileSetError on any invariant violation."""
        ids: set[str] = set()
        positions: set[tuple[str, str]] = set()
        for slot in self.slots:
            if not slot.id:
                raise TileSetError("slot id must be nonempty")
            if slot.id in ids:
                raise TileSetError(f"duplicate slot id {slot.id!r}")
            ids.add(slot.id)
            if slot.kind not in KINDS:
                raise TileSetError(f"slot {slot.id!r} has unknown kind {slot.kind!r}")
            if slot.kind == KIND_CSS_PROPERTY:
                if not _CSS_PROPERTY_RE.fullmatch(slot.target):
                    raise TileSetError(f"slot {slot.id!r} target {slot.target!r} is not a CSS property name")
            else:
                if slot.target not in ELEMENT_ROLES:
                    raise TileSetError(f"slot {slot.id!r} has unsupported element role {slot.target!r}")
            if (slot.kind, slot.target) in positions:
                raise TileSetError(f"slot {slot.id!r} duplicates target {slot.target!r}")
            positions.add((slot.kind, slot.target))
            if not slot.tiles:
                raise TileSetError(f"slot {slot.id!r} has no tiles")
            if any(not tile for tile in slot.tiles):
                raise TileSetError(f"slot {slot.id!r} contains an empty tile")
            if len(set(slot.tiles)) != len(slot.tiles):
                raise TileSetError(f"slot {slot.id!r} lists a tile more than once")


def load_tileset(source: bytes | str) -> TileSet:
    """Parse and validate a tile-set file.

    The format is a UTF-8 JSON object {"version", "slots"} where each
    slot carries {"id", "kind", "target", "tiles"}. Unknown keys are
    rejected so typos fail loudly instead of silently dropping tiles.
    """
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as err:
            raise TileSetError(f"tile set is not UTF-8: {err.reason}") from err
    try:
        data = json.loads(source)
    except json.JSONDecodeError as err:
        raise TileSetError(f"invalid JSON: {err.msg}", line=err.lineno, column=err.colno) from err

    if not isinstance(data, dict):
        raise TileSetError("top level must be an object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise TileSetError(f"unknown top-level key {sorted(unknown)[0]!r}")
    missing = _TOP_KEYS - set(data)
    if missing:
        raise TileSetError(f"missing top-level key {sorted(missing)[0]!r}")
    if not isinstance(data["version"], str):
        raise TileSetError("'version' must be a string")
    if not isinstance(data["slots"], list):
        raise TileSetError("'slots' must be a list")

    slots = []
    for i, entry in enumerate(data["slots"]):
        if not isinstance(entry, dict):
            raise TileSetError(f"slot #{i} must be an object")
        unknown = set(entry) - _SLOT_KEYS
        if unknown:
            raise TileSetError(f"slot #{i} has unknown key {sorted(unknown)[0]!r}")
        missing = _SLOT_KEYS - set(entry)
        if missing:
            raise TileSetError(f"slot #{i} is missing key {sorted(missing)[0]!r}")
        slot_id, kind, target, tiles = entry["id"], entry["kind"], entry["target"], entry["tiles"]
        if not isinstance(slot_id, str) or not isinstance(kind, str) or not isinstance(target, str):
            raise TileSetError(f"slot #{i}: id, kind, and target must be strings")
        if not isinstance(tiles, list) or any(not isinstance(t, str) for t in tiles):
            raise TileSetError(f"slot {slot_id!r}: tiles must be a list of strings")
        slots.append(Slot(slot_id, kind, target, tuple(tiles)))

    tileset = TileSet(version=data["version"], slots=tuple(slots))
    tileset.validate()
    return tileset


@functools.lru_cache(maxsize=1)
def default_tileset() -> TileSet:
    """The bundled tile set, seeded from MDN example values."""
    payload = resources.files("pocketforge.data").joinpath("default_tileset.json").read_bytes()
    return load_tileset(payload)


def possibility_space_size(tileset: TileSet) -> int:
    """Number of distinct artifacts: the product of per-slot tile counts."""
    return math.prod(len(slot.tiles) for slot in tileset.slots)


_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Portable 64-bit pseudo-random stream (splitmix64)."""

    def __init__(self, seed: int):
        if not 0 <= seed <= MAX_SEED:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self._state = seed

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), exact via rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = ((1 << 64) // n) * n
        while True:
            x = self.next_uint64()
            if x < limit:
                return x % n


def choose_tiles(tileset: TileSet, seed: int) -> dict[str, str]:
    """Pick one tile per slot, uniformly and independently.

    Returns {slot id: tile value} with draws taken in slot order, so the
    choice stream is fully determined by (tileset, seed).
    """
    tileset.validate()
    stream = SplitMix64(seed)
    return {slot.id: slot.tiles[stream.below(len(slot.tiles))] for slot in tileset.slots}


def assemble(tileset: TileSet, choices: dict[str, str]) -> Document:
    """Build the page skeleton around one tile choice per slot.

    The skeleton is fixed: html/head with a style block assigning one
    declaration per CSS slot to a single container class, and a body
    holding a figure (img with src/alt, figcaption) followed by a span.
    Roles without a slot in the tile set are left empty.
    """
    declarations = []
    roles: dict[str, str] = {}
    for slot in tileset.slots:
        value = choices[slot.id]
        if slot.kind == KIND_CSS_PROPERTY:
            declarations.append(f"{slot.target}: {value}")
        else:
            roles[slot.target] = value

    body_of_rule = "; ".join(declarations)
    style_text = f".{CONTAINER_CLASS} {{ {body_of_rule} }}" if body_of_rule else f".{CONTAINER_CLASS} {{ }}"

    img_attrs = []
    if ROLE_IMG_SRC in roles:
        img_attrs.append(("src", roles[ROLE_IMG_SRC]))
    if ROLE_IMG_ALT in roles:
        img_attrs.append(("alt", roles[ROLE_IMG_ALT]))

    figure = Element("figure", [], [
        Element("img", img_attrs),
        Element("figcaption", [], [Text(roles[ROLE_FIGCAPTION_TEXT])] if ROLE_FIGCAPTION_TEXT in roles else []),
    ])
    span = Element("span", [], [Text(roles[ROLE_SPAN_TEXT])] if ROLE_SPAN_TEXT in roles else [])

    html = Element("html", [], [
        Element("head", [], [Element("style", [], [Text(style_text)])]),
        Element("body", [("class", CONTAINER_CLASS)], [figure, span]),
    ])
    return Document(children=[html], doctype="html")


def generate(tileset: TileSet, seed: int) -> Document:
    """Generate the artifact for (tileset, seed); deterministic."""
    return assemble(tileset, choose_tiles(tileset, seed))
