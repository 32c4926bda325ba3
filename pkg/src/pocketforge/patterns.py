"""Machine-readable design-pattern manifest and its audit.

The manifest maps each casual-creator pattern to the UI component(s)
carrying it and to the engine operations implementing it. The audit
re-derives the headline numbers from the manifest and cross-checks them
against the expected figures: 7 of 11 patterns implemented, a fixed
per-component pattern count, and 5 of the 7 carried by components that
display state. It also resolves every listed op to a real attribute of
this package, so the manifest cannot drift from the code silently.
"""

from __future__ import annotations

import functools
import importlib
import json
from dataclasses import dataclass
from importlib import resources

EXPECTED_TOTAL_PATTERNS = 11
EXPECTED_IMPLEMENTED = 7
EXPECTED_COMPONENT_COUNTS = {
    "editing": 2,
    "preview": 1,
    "feedback": 3,
    "random": 2,
    "bookmark": 1,
    "save": 1,
    "share": 1,
}
EXPECTED_STATE_CARRIED = 5


@dataclass(frozen=True)
class PatternEntry:
    id: str
    name: str
    implemented: bool
    components: tuple[str, ...]
    feature: str
    ops: tuple[str, ...]


@dataclass(frozen=True)
class ComponentInfo:
    id: str
    displays_state: bool


@dataclass(frozen=True)
class Manifest:
    patterns: tuple[PatternEntry, ...]
    components: tuple[ComponentInfo, ...]

    def implemented_patterns(self) -> tuple[PatternEntry, ...]:
        return tuple(p for p in self.patterns if p.implemented)

    def component_pattern_counts(self) -> dict[str, int]:
        counts = {c.id: 0 for c in self.components}
        for pattern in self.implemented_patterns():
            for component in pattern.components:
                counts[component] = counts.get(component, 0) + 1
        return counts

    def state_carried_count(self) -> int:
        """Implemented patterns carried by at least one state-displaying component."""
        stateful = {c.id for c in self.components if c.displays_state}
        return sum(1 for p in self.implemented_patterns() if stateful & set(p.components))


def load_manifest(source: bytes | str | None = None) -> Manifest:
    if source is None:
        source = resources.files("pocketforge.data").joinpath("patterns.json").read_bytes()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    data = json.loads(source)
    patterns = tuple(
        PatternEntry(
            id=p["id"],
            name=p["name"],
            implemented=bool(p["implemented"]),
            components=tuple(p["components"]),
            feature=p["feature"],
            ops=tuple(p["ops"]),
        )
        for p in data["patterns"]
    )
    components = tuple(
        ComponentInfo(id=c["id"], displays_state=bool(c["displays_state"]))
        for c in data["components"]
    )
    return Manifest(patterns=patterns, components=components)


@functools.lru_cache(maxsize=1)
def default_manifest() -> Manifest:
    return load_manifest()


def _op_resolves(path: str) -> bool:
    module_name, _, rest = path.partition(".")
    try:
        obj = importlib.import_module(f"pocketforge.{module_name}")
        for part in rest.split("."):
            obj = getattr(obj, part)
    except (ImportError, AttributeError):
        return False
    return callable(obj)


@dataclass(frozen=True)
class AuditCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class AuditReport:
    checks: tuple[AuditCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def audit(manifest: Manifest | None = None) -> AuditReport:
    """Verify the manifest against the expected pattern figures."""
    manifest = manifest or default_manifest()
    checks: list[AuditCheck] = []

    total = len(manifest.patterns)
    checks.append(AuditCheck(
        "catalog_size", total == EXPECTED_TOTAL_PATTERNS,
        f"{total} patterns cataloged (expected {EXPECTED_TOTAL_PATTERNS})"))

    implemented = len(manifest.implemented_patterns())
    checks.append(AuditCheck(
        "implemented_count", implemented == EXPECTED_IMPLEMENTED,
        f"{implemented} patterns implemented (expected {EXPECTED_IMPLEMENTED})"))

    counts = manifest.component_pattern_counts()
    checks.append(AuditCheck(
        "component_counts", counts == EXPECTED_COMPONENT_COUNTS,
        f"per-component counts {counts}"))

    carried = manifest.state_carried_count()
    checks.append(AuditCheck(
        "state_carried", carried == EXPECTED_STATE_CARRIED,
        f"{carried} implemented patterns carried by state-displaying components "
        f"(expected {EXPECTED_STATE_CARRIED})"))

    known = {c.id for c in manifest.components}
    dangling = [
        f"{p.id}:{comp}"
        for p in manifest.patterns for comp in p.components if comp not in known
    ]
    checks.append(AuditCheck(
        "components_known", not dangling,
        "all pattern components are declared" if not dangling else f"unknown components {dangling}"))

    wired = [
        p.id for p in manifest.implemented_patterns()
        if not p.ops or not all(_op_resolves(op) for op in p.ops)
    ]
    checks.append(AuditCheck(
        "ops_resolve", not wired,
        "every implemented pattern resolves to engine operations"
        if not wired else f"unresolved ops in {wired}"))

    return AuditReport(checks=tuple(checks))


def report_json(manifest: Manifest | None = None) -> str:
    """Manifest plus audit results as pretty JSON (the CLI `audit` output)."""
    manifest = manifest or default_manifest()
    result = audit(manifest)
    payload = {
        "patterns": [
            {
                "id": p.id,
                "name": p.name,
                "implemented": p.implemented,
                "components": list(p.components),
                "feature": p.feature,
                "ops": list(p.ops),
            }
            for p in manifest.patterns
        ],
        "components": [{"id": c.id, "displays_state": c.displays_state} for c in manifest.components],
        "audit": result.to_dict(),
    }
    return json.dumps(payload, indent=2)
