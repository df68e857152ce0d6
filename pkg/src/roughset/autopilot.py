"""The avionics consistency case study bundled with the package.

Seventeen boolean fault factors, grouped into five payloads, map through
verbatim lookup tables onto a four-level consistency scale; the five levels
then classify through a rule set into a Consistent/Inconsistent verdict
whose Inconsistent value signals a manual-override alert.

Note the source material's inverted semantics, preserved verbatim here:
all seventeen faults present yields payload consistency "high" and an
overall "consistent" verdict, while no faults at all yields "inconsistent".
The lookup tables are stored as data files and never generated from a
fault-count heuristic (their contents genuinely break such patterns, e.g.
payload I's no/yes/no case maps to moderate while yes/no/no maps to low).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import DataError
from .rules import RuleSet, Verdict, classify, load_rules
from .table import DecisionTable, Level, canonicalize_level, parse_table

PAYLOAD_IDS: tuple[str, ...] = ("I", "II", "III", "IV", "V")

#: Condition attribute names used by the training table and rule files.
PAYLOAD_ATTRS: tuple[str, ...] = tuple(f"Payload {pid}" for pid in PAYLOAD_IDS)

DECISION_ATTR = "C.F."

#: Boolean fault factors feeding each payload, in lookup-table column order.
PAYLOAD_FACTORS: dict[str, tuple[str, ...]] = {
    "I": ("roll_inconsistency", "pitch_inconsistency", "yaw_inconsistency"),
    "II": (
        "altitude_inconsistency",
        "longitude_inconsistency",
        "latitude_inconsistency",
    ),
    "III": ("dme_fault", "vor_fault", "irs_fault"),
    "IV": (
        "gyroscope_failure",
        "accelerometer_failure",
        "altimeter_failure",
        "compass_failure",
    ),
    "V": ("route_change", "flaps_failure", "fuel_inconsistency", "inflight_icing"),
}

#: All seventeen factor names in canonical order.
FACTOR_NAMES: tuple[str, ...] = tuple(
    name for pid in PAYLOAD_IDS for name in PAYLOAD_FACTORS[pid]
)


def _parse_yes_no(token: str) -> bool:
    normalized = token.strip().lower()
    if normalized == "yes":
        return True
    if normalized == "no":
        return False
    raise DataError(f"expected yes or no, got {token!r}")


@dataclass(frozen=True)
class FaultVector:
    """The seventeen boolean fault inputs, one field per factor."""

    roll_inconsistency: bool
    pitch_inconsistency: bool
    yaw_inconsistency: bool
    altitude_inconsistency: bool
    longitude_inconsistency: bool
    latitude_inconsistency: bool
    dme_fault: bool
    vor_fault: bool
    irs_fault: bool
    gyroscope_failure: bool
    accelerometer_failure: bool
    altimeter_failure: bool
    compass_failure: bool
    route_change: bool
    flaps_failure: bool
    fuel_inconsistency: bool
    inflight_icing: bool

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, bool]) -> "FaultVector":
        missing = [name for name in FACTOR_NAMES if name not in mapping]
        if missing:
            raise DataError(f"missing fault factors: {missing}")
        extra = [name for name in mapping if name not in FACTOR_NAMES]
        if extra:
            raise DataError(f"unknown fault factors: {extra}")
        return cls(**{name: bool(mapping[name]) for name in FACTOR_NAMES})

    @classmethod
    def from_tokens(cls, tokens: Sequence[str]) -> "FaultVector":
        """Build from 17 yes/no tokens in canonical factor order."""
        if len(tokens) != len(FACTOR_NAMES):
            raise DataError(
                f"expected {len(FACTOR_NAMES)} yes/no values, got {len(tokens)}"
            )
        values = [_parse_yes_no(token) for token in tokens]
        return cls(**dict(zip(FACTOR_NAMES, values)))

    def payload_inputs(self, payload_id: str) -> tuple[bool, ...]:
        if payload_id not in PAYLOAD_FACTORS:
            raise DataError(f"unknown payload {payload_id!r}")
        return tuple(getattr(self, name) for name in PAYLOAD_FACTORS[payload_id])

    def as_dict(self) -> dict[str, bool]:
        return asdict(self)


@dataclass(frozen=True)
class PayloadTable:
    """Total boolean-tuple -> level lookup for one payload."""

    payload_id: str
    input_names: tuple[str, ...]
    entries: dict[tuple[bool, ...], Level]

    def __post_init__(self) -> None:
        expected = set(product((True, False), repeat=len(self.input_names)))
        if set(self.entries) != expected:
            raise DataError(
                f"payload {self.payload_id} table does not cover all "
                f"{len(expected)} input combinations"
            )

    @classmethod
    def from_csv(cls, payload_id: str, text: str) -> "PayloadTable":
        lines = [line for line in text.splitlines() if line.strip()]
        header = [cell.strip() for cell in lines[0].split(",")]
        input_names = tuple(header[:-1])
        entries: dict[tuple[bool, ...], Level] = {}
        for line in lines[1:]:
            cells = [cell.strip() for cell in line.split(",")]
            if len(cells) != len(header):
                raise DataError(f"payload {payload_id} table: ragged row {line!r}")
            key = tuple(_parse_yes_no(cell) for cell in cells[:-1])
            if key in entries:
                raise DataError(
                    f"payload {payload_id} table: duplicate input row {key}"
                )
            entries[key] = canonicalize_level(cells[-1])
        return cls(payload_id, input_names, entries)


def _data_root():
    return resources.files("roughset").joinpath("data")


def read_data_text(relpath: str) -> str:
    """Text of a bundled data file, e.g. ``fixtures/table_6.csv``."""
    return _data_root().joinpath(relpath).read_text(encoding="utf-8")


def read_data_bytes(relpath: str) -> bytes:
    """Raw bytes of a bundled data file (for exact exports)."""
    return _data_root().joinpath(relpath).read_bytes()


def bundled_data_paths() -> tuple[str, ...]:
    """Relative paths of every bundled data file, sorted."""
    root = _data_root()
    paths = []
    for subdir in root.iterdir():
        if subdir.is_dir():
            for entry in subdir.iterdir():
                if entry.is_file():
                    paths.append(f"{subdir.name}/{entry.name}")
    return tuple(sorted(paths))


@lru_cache(maxsize=1)
def payload_tables() -> dict[str, PayloadTable]:
    """The five bundled lookup tables, keyed I..V.  Treat as read-only."""
    return {
        pid: PayloadTable.from_csv(
            pid, read_data_text(f"fixtures/table_{n}.csv")
        )
        for n, pid in enumerate(PAYLOAD_IDS, start=1)
    }


def payload_level(payload_id: str, inputs: Sequence[bool]) -> Level:
    """Exact lookup of one payload's consistency level; no computed shortcut."""
    tables = payload_tables()
    if payload_id not in tables:
        raise DataError(f"unknown payload {payload_id!r}")
    table = tables[payload_id]
    key = tuple(bool(v) for v in inputs)
    if len(key) != len(table.input_names):
        raise DataError(
            f"payload {payload_id} takes {len(table.input_names)} inputs, "
            f"got {len(key)}"
        )
    return table.entries[key]


@lru_cache(maxsize=1)
def training_fixture() -> DecisionTable:
    """The bundled 30-row training table (immutable, safe to share)."""
    return parse_table(read_data_text("fixtures/table_6.csv"))


@lru_cache(maxsize=1)
def reference_rules() -> RuleSet:
    """The case study's published 13-rule decision algorithm, verbatim.

    Shipped as ``rules/paper_sec4g.json`` with its defects intact: one rule
    contradicts the training table and one matches no training row.  Run
    :func:`roughset.rules.audit_rules` against the training fixture to see
    the reconciliation.
    """
    return load_rules(read_data_text("rules/paper_sec4g.json"))


def levels_object(levels: Iterable[str]) -> dict[str, str]:
    """Map five level tokens onto the payload attributes, canonicalized."""
    values = [canonicalize_level(token).value for token in levels]
    if len(values) != len(PAYLOAD_ATTRS):
        raise DataError(
            f"expected {len(PAYLOAD_ATTRS)} levels, got {len(values)}"
        )
    return dict(zip(PAYLOAD_ATTRS, values))


@dataclass(frozen=True)
class PipelineResult:
    """Intermediate payload levels plus the final verdict."""

    levels: dict[str, Level]
    verdict: Verdict

    def to_dict(self) -> dict:
        return {
            "levels": {attr: level.value for attr, level in self.levels.items()},
            "verdict": self.verdict.to_dict(),
        }


def full_pipeline(faults: FaultVector, rules: RuleSet) -> PipelineResult:
    """Look up all five payload levels, then classify the level quintuple."""
    levels = {
        attr: payload_level(pid, faults.payload_inputs(pid))
        for pid, attr in zip(PAYLOAD_IDS, PAYLOAD_ATTRS)
    }
    obj = {attr: level.value for attr, level in levels.items()}
    return PipelineResult(levels, classify(rules, obj))
