"""Artifact size measurement and playful comparisons against famous pages.

Size is the raw UTF-8 byte length of the serialized artifact; referenced
images and external assets are not counted. Ratios stay exact rationals
until render time, where they are rounded half-up to one decimal.
"""

from __future__ import annotations

import datetime
import functools
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

# Primary language subtags that write decimals with a comma.
_COMMA_DECIMAL_LOCALES = frozenset({"de", "fr", "es", "it", "pt", "nl", "fi", "sv", "da", "tr"})


@dataclass(frozen=True)
class SizeReport:
    bytes: int
    measured_at: int


@dataclass(frozen=True)
class ReferencePage:
    name: str
    bytes: int
    recorded_on: datetime.date


@dataclass(frozen=True)
class Comparison:
    subject: SizeReport
    reference: ReferencePage
    ratio: Fraction


def measure_size(text: str) -> SizeReport:
    """Exact UTF-8 byte length of ``text``."""
    return SizeReport(bytes=len(text.encode("utf-8")), measured_at=time.monotonic_ns())


def compare(report: SizeReport, ref: ReferencePage) -> Comparison:
    """Exact subject/reference ratio; no rounding at this layer."""
    if ref.bytes <= 0:
        raise ValueError(f"reference page {ref.name!r} must have positive size")
    return Comparison(subject=report, reference=ref, ratio=Fraction(report.bytes, ref.bytes))


def load_reference_pages(source: bytes | str) -> tuple[ReferencePage, ...]:
    """Parse the reference table: a JSON list of {name, bytes, recorded_on}."""
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    data = json.loads(source)
    if not isinstance(data, list):
        raise ValueError("reference table must be a JSON list")
    pages = []
    for entry in data:
        if not isinstance(entry, dict) or set(entry) != {"name", "bytes", "recorded_on"}:
            raise ValueError("reference entries must be {name, bytes, recorded_on} objects")
        name, size, recorded = entry["name"], entry["bytes"], entry["recorded_on"]
        if not isinstance(name, str) or not name:
            raise ValueError("reference name must be a nonempty string")
        if not isinstance(size, int) or size <= 0:
            raise ValueError(f"reference page {name!r} must have positive size")
        pages.append(ReferencePage(name=name, bytes=size, recorded_on=datetime.date.fromisoformat(recorded)))
    return tuple(pages)


@functools.lru_cache(maxsize=1)
def default_reference_pages() -> tuple[ReferencePage, ...]:
    payload = resources.files("pocketforge.data").joinpath("reference_pages.json").read_bytes()
    return load_reference_pages(payload)


def _tenths_half_up(value: Fraction) -> int:
    """``value`` scaled to tenths, rounded half-up, in exact integer math."""
    return (20 * value.numerator + value.denominator) // (2 * value.denominator)


def _format_tenths(tenths: int, locale: str) -> str:
    separator = "," if locale.split("-")[0].lower() in _COMMA_DECIMAL_LOCALES else "."
    return f"{tenths // 10}{separator}{tenths % 10}"


def render_feedback(comparison: Comparison, locale: str = "en") -> str:
    """One-line verdict for the feedback panel.

    The locale only changes number formatting (decimal separator),
    never the value itself.
    """
    size = comparison.subject.bytes
    name = comparison.reference.name
    ratio = comparison.ratio
    prefix = f"{size} bytes"
    if ratio == 0:
        return f"{prefix} — infinitely smaller than {name}"
    if ratio == 1:
        return f"{prefix} — same size as {name}"
    if ratio < 1:
        factor = _format_tenths(_tenths_half_up(1 / ratio), locale)
        return f"{prefix} — {factor}× smaller than {name}"
    factor = _format_tenths(_tenths_half_up(ratio), locale)
    return f"{prefix} — {factor}× larger than {name}"
