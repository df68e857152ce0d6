"""Categorical decision tables: data model, CSV ingestion, validation.

A :class:`DecisionTable` is an immutable, ordered collection of rows over
named categorical condition attributes plus a single decision attribute.
Row identity is positional: indices are 0-based internally and rendered
1-based in reports.

CSV ingestion (:func:`parse_table`) is tied to the autopilot case study's
closed vocabularies: condition values must canonicalize to the four-level
scale and decisions to consistent/inconsistent.  Tables built directly via
the constructor are only checked structurally, so the analysis operations
stay usable on arbitrary categorical data.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum, unique
from typing import IO, Iterable, Optional, Union

from .errors import (
    DataError,
    EmptyBodyError,
    MissingHeaderError,
    RaggedRowError,
    UnknownAttributeError,
    UnknownDecisionError,
    UnknownLevelError,
)


@unique
class Level(str, Enum):
    """The closed four-value consistency scale used by the case study."""

    HIGH = "high"
    MODERATE = "moderate"
    LOW = "low"
    EXTREMELY_LOW = "extremely_low"

    def __str__(self) -> str:  # keep CSV/JSON output as the bare token
        return self.value


#: Canonical level order, from most to least consistent.
LEVELS: tuple[Level, ...] = (
    Level.HIGH,
    Level.MODERATE,
    Level.LOW,
    Level.EXTREMELY_LOW,
)

#: Closed decision vocabulary.
DECISIONS: tuple[str, str] = ("consistent", "inconsistent")

# Accepted raw spellings, keyed by their normalized form.  "medium" and
# "very low" appear in the source material as synonyms of "moderate" and
# "extremely low"; aliasing them keeps the vocabulary at four values.
_LEVEL_ALIASES: dict[str, Level] = {
    "high": Level.HIGH,
    "moderate": Level.MODERATE,
    "medium": Level.MODERATE,
    "low": Level.LOW,
    "extremely low": Level.EXTREMELY_LOW,
    "very low": Level.EXTREMELY_LOW,
}


def _normalize_token(raw: str) -> str:
    # case-insensitive, whitespace-trimmed; underscores count as spaces so
    # the canonical "extremely_low" spelling normalizes like "Extremely Low"
    return " ".join(raw.replace("_", " ").split()).lower()


def canonicalize_level(raw: str) -> Level:
    """Map a raw level token onto the canonical four-value vocabulary.

    Matching is case-insensitive and whitespace/underscore-insensitive.
    Raises :class:`UnknownLevelError` for tokens outside the alias map.
    """
    try:
        return _LEVEL_ALIASES[_normalize_token(raw)]
    except KeyError:
        raise UnknownLevelError(f"unknown level token {raw!r}") from None


def canonicalize_decision(raw: str) -> str:
    """Map a raw decision token onto {consistent, inconsistent}."""
    token = _normalize_token(raw)
    if token not in DECISIONS:
        raise UnknownDecisionError(f"unknown decision token {raw!r}")
    return token


@dataclass(frozen=True)
class DecisionTable:
    """Immutable table of categorical rows with one decision attribute.

    ``rows`` hold the condition values in ``condition_attrs`` order followed
    by the decision value as the last element.  Values are plain strings;
    :func:`parse_table` stores canonicalized tokens.
    """

    condition_attrs: tuple[str, ...]
    decision_attr: str
    rows: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "condition_attrs", tuple(self.condition_attrs))
        object.__setattr__(
            self, "rows", tuple(tuple(row) for row in self.rows)
        )
        names = (*self.condition_attrs, self.decision_attr)
        if len(set(names)) != len(names):
            raise DataError("attribute names must be unique")
        if any(not name for name in names):
            raise DataError("attribute names must be non-empty")
        if not self.rows:
            raise DataError("a decision table needs at least one row")
        width = len(self.condition_attrs) + 1
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise DataError(
                    f"row {i + 1} has {len(row)} values, expected {width}"
                )
        object.__setattr__(
            self,
            "_col_index",
            {name: i for i, name in enumerate(names)},
        )

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def universe(self) -> frozenset[int]:
        """All row indices, 0-based."""
        return frozenset(range(self.n_rows))

    @property
    def attrs(self) -> tuple[str, ...]:
        """Condition attributes followed by the decision attribute."""
        return (*self.condition_attrs, self.decision_attr)

    def value(self, row: int, attr: str) -> str:
        return self.rows[row][self._attr_col(attr)]

    def decision(self, row: int) -> str:
        return self.rows[row][-1]

    def row_object(self, row: int) -> dict[str, str]:
        """Condition attribute -> value mapping for one row."""
        return dict(zip(self.condition_attrs, self.rows[row]))

    def decision_classes(self) -> dict[str, frozenset[int]]:
        """Decision value -> row set, keyed in order of first appearance."""
        classes: dict[str, set[int]] = {}
        for i, row in enumerate(self.rows):
            classes.setdefault(row[-1], set()).add(i)
        return {value: frozenset(rows) for value, rows in classes.items()}

    def class_rows(self, decision_value: str) -> frozenset[int]:
        """Rows whose decision equals ``decision_value`` (possibly empty)."""
        return frozenset(
            i for i, row in enumerate(self.rows) if row[-1] == decision_value
        )

    def column_subset(self, attrs: Iterable[str]) -> tuple[str, ...]:
        """Validate ``attrs`` and return them in table column order.

        The decision attribute is allowed; duplicates collapse.
        """
        requested = set()
        for attr in attrs:
            if attr not in self._col_index:
                raise UnknownAttributeError(f"unknown attribute {attr!r}")
            requested.add(attr)
        return tuple(name for name in self.attrs if name in requested)

    def condition_subset(self, attrs: Iterable[str]) -> tuple[str, ...]:
        """Like :meth:`column_subset` but rejects the decision attribute."""
        subset = self.column_subset(attrs)
        if self.decision_attr in subset:
            raise UnknownAttributeError(
                f"{self.decision_attr!r} is the decision attribute, "
                "not a condition"
            )
        return subset

    def _attr_col(self, attr: str) -> int:
        try:
            return self._col_index[attr]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownAttributeError(f"unknown attribute {attr!r}") from None


@dataclass(frozen=True)
class ValidationReport:
    """Pairwise structural findings for a table.

    ``conflicting_pairs`` lists rows with equal condition values but
    different decisions; ``duplicate_pairs`` lists fully identical rows.
    Pairs are 0-based ``(i, j)`` with ``i < j``, ordered by ``(i, j)``.
    """

    conflicting_pairs: tuple[tuple[int, int], ...]
    duplicate_pairs: tuple[tuple[int, int], ...]

    @property
    def is_consistent(self) -> bool:
        return not self.conflicting_pairs

    def to_dict(self) -> dict:
        """JSON-ready form; row indices rendered 1-based."""
        return {
            "conflicting_pairs": [[i + 1, j + 1] for i, j in self.conflicting_pairs],
            "duplicate_pairs": [[i + 1, j + 1] for i, j in self.duplicate_pairs],
            "is_consistent": self.is_consistent,
        }


def validate(table: DecisionTable) -> ValidationReport:
    """Scan all row pairs for conflicts and duplicates."""
    conflicts: list[tuple[int, int]] = []
    duplicates: list[tuple[int, int]] = []
    for i in range(table.n_rows):
        for j in range(i + 1, table.n_rows):
            if table.rows[i][:-1] != table.rows[j][:-1]:
                continue
            if table.rows[i][-1] == table.rows[j][-1]:
                duplicates.append((i, j))
            else:
                conflicts.append((i, j))
    return ValidationReport(tuple(conflicts), tuple(duplicates))


def _is_index_column(name: str) -> bool:
    return name.strip().lower() in ("s no.", "s no", "s.no", "s.no.")


def parse_table(
    source: Union[str, IO[str]],
    decision_attr: Optional[str] = None,
) -> DecisionTable:
    """Parse CSV text (or a text stream) into a canonicalized table.

    The first row is the header.  An index column named "S no."
    (case-insensitive) is dropped.  ``decision_attr`` picks the decision
    column; by default the last column is the decision.  Condition values
    must canonicalize as levels and decision values as consistent /
    inconsistent; anything else raises a :class:`DataError` subclass.
    """
    stream = io.StringIO(source) if isinstance(source, str) else source
    reader = csv.reader(stream)
    raw_rows = [row for row in reader if any(cell.strip() for cell in row)]
    if not raw_rows:
        raise MissingHeaderError("missing header: source is empty")

    header = [cell.strip() for cell in raw_rows[0]]
    keep = [i for i, name in enumerate(header) if not _is_index_column(name)]
    names = [header[i] for i in keep]
    if len(set(names)) != len(names):
        raise DataError("duplicate column name in header")

    if decision_attr is None:
        if not names:
            raise MissingHeaderError("missing header: no usable columns")
        decision_attr = names[-1]
    elif decision_attr not in names:
        raise UnknownAttributeError(
            f"decision attribute {decision_attr!r} not found in header"
        )
    condition_names = [name for name in names if name != decision_attr]

    body = raw_rows[1:]
    if not body:
        raise EmptyBodyError("empty body: no data rows after the header")

    rows: list[tuple[str, ...]] = []
    for line_no, raw in enumerate(body, start=1):
        if len(raw) != len(header):
            raise RaggedRowError(
                f"row {line_no} has {len(raw)} fields, expected {len(header)}"
            )
        cells = {names[k]: raw[i].strip() for k, i in enumerate(keep)}
        try:
            conditions = tuple(
                canonicalize_level(cells[name]).value for name in condition_names
            )
            decision = canonicalize_decision(cells[decision_attr])
        except (UnknownLevelError, UnknownDecisionError) as exc:
            raise type(exc)(f"row {line_no}: {exc}") from None
        rows.append((*conditions, decision))

    return DecisionTable(tuple(condition_names), decision_attr, tuple(rows))


def serialize_table(table: DecisionTable) -> str:
    """Render a table back to CSV with its stored (canonical) tokens."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(table.attrs)
    writer.writerows(table.rows)
    return out.getvalue()
