"""Rough-set analysis over decision tables.

Indiscernibility partitions, lower/upper approximations, boundary regions,
positive region and dependency degree, exhaustive reduct/core search, and
per-attribute significance.  All numeric results are exact rationals
(:class:`fractions.Fraction`); no floating point is involved anywhere here.

Everything is a pure function of an immutable :class:`DecisionTable`, so
concurrent use needs no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from ._fmt import rational, rows_1based
from .errors import AttributeLimitError, DataError
from .table import DecisionTable

#: Exhaustive reduct search bound: 2^n subsets get enumerated.
MAX_REDUCT_ATTRS = 20


@dataclass(frozen=True)
class Partition:
    """Equivalence classes of the indiscernibility relation on ``attrs``.

    Blocks are disjoint, cover the universe, contain no empty block, and
    are ordered by their smallest member index.
    """

    attrs: tuple[str, ...]
    blocks: tuple[frozenset[int], ...]

    def block_of(self, row: int) -> frozenset[int]:
        for block in self.blocks:
            if row in block:
                return block
        raise KeyError(row)

    def to_dict(self) -> dict:
        return {
            "attrs": list(self.attrs),
            "blocks": [rows_1based(block) for block in self.blocks],
        }


@dataclass(frozen=True)
class ApproximationReport:
    """Lower/upper/boundary description of a target row set.

    ``accuracy`` is |lower| / |upper|, defined as 1 when the upper
    approximation is empty.  ``is_crisp`` holds exactly when the boundary
    is empty.
    """

    attrs: tuple[str, ...]
    target: frozenset[int]
    lower: frozenset[int]
    upper: frozenset[int]
    boundary: frozenset[int]
    accuracy: Fraction
    is_crisp: bool

    def to_dict(self) -> dict:
        return {
            "attrs": list(self.attrs),
            "target": rows_1based(self.target),
            "lower": rows_1based(self.lower),
            "upper": rows_1based(self.upper),
            "boundary": rows_1based(self.boundary),
            "accuracy": rational(self.accuracy),
            "is_crisp": self.is_crisp,
        }


@dataclass(frozen=True)
class ReductReport:
    """All minimal attribute subsets preserving the full dependency degree.

    ``core`` is the intersection of the reducts;  ``baseline_gamma`` is the
    dependency degree of the full condition set that every reduct preserves.
    """

    reducts: tuple[tuple[str, ...], ...]
    core: tuple[str, ...]
    baseline_gamma: Fraction

    def to_dict(self) -> dict:
        return {
            "reducts": [list(red) for red in self.reducts],
            "core": list(self.core),
            "baseline_gamma": rational(self.baseline_gamma),
        }


def _check_target(table: DecisionTable, target: Iterable[int]) -> frozenset[int]:
    rows = frozenset(target)
    if not rows <= table.universe:
        outside = sorted(rows - table.universe)
        raise DataError(f"target rows out of range: {outside}")
    return rows


def partition(table: DecisionTable, attrs: Iterable[str]) -> Partition:
    """Group rows that agree on every attribute in ``attrs``.

    ``attrs`` may include the decision attribute.  The empty subset
    discerns nothing and yields a single block.
    """
    subset = table.column_subset(attrs)
    blocks: dict[tuple[str, ...], set[int]] = {}
    for i in range(table.n_rows):
        key = tuple(table.value(i, attr) for attr in subset)
        blocks.setdefault(key, set()).add(i)
    # insertion order == order of each block's smallest member
    return Partition(subset, tuple(frozenset(b) for b in blocks.values()))


def lower_approx(
    table: DecisionTable, attrs: Iterable[str], target: Iterable[int]
) -> frozenset[int]:
    """Union of the blocks fully contained in ``target``."""
    rows = _check_target(table, target)
    result: set[int] = set()
    for block in partition(table, attrs).blocks:
        if block <= rows:
            result |= block
    return frozenset(result)


def upper_approx(
    table: DecisionTable, attrs: Iterable[str], target: Iterable[int]
) -> frozenset[int]:
    """Union of the blocks intersecting ``target``."""
    rows = _check_target(table, target)
    result: set[int] = set()
    for block in partition(table, attrs).blocks:
        if block & rows:
            result |= block
    return frozenset(result)


def approximation_report(
    table: DecisionTable, attrs: Iterable[str], target: Iterable[int]
) -> ApproximationReport:
    """Lower, upper, boundary, accuracy and crispness in one report."""
    rows = _check_target(table, target)
    subset = table.column_subset(attrs)
    lower = lower_approx(table, subset, rows)
    upper = upper_approx(table, subset, rows)
    boundary = upper - lower
    accuracy = Fraction(len(lower), len(upper)) if upper else Fraction(1)
    return ApproximationReport(
        attrs=subset,
        target=rows,
        lower=lower,
        upper=upper,
        boundary=boundary,
        accuracy=accuracy,
        is_crisp=not boundary,
    )


def positive_region(table: DecisionTable, attrs: Iterable[str]) -> frozenset[int]:
    """Rows uniquely classifiable into decision classes via ``attrs``.

    Equals the union of the lower approximations of every decision class.
    """
    subset = table.condition_subset(attrs)
    result: set[int] = set()
    for block in partition(table, subset).blocks:
        decisions = {table.decision(i) for i in block}
        if len(decisions) == 1:
            result |= block
    return frozenset(result)


def dependency_degree(table: DecisionTable, attrs: Iterable[str]) -> Fraction:
    """|positive region| / |universe|, exact."""
    return Fraction(len(positive_region(table, attrs)), table.n_rows)


def find_reducts(table: DecisionTable) -> ReductReport:
    """Exhaustively enumerate all reducts and their core.

    A reduct is a minimal condition subset whose dependency degree equals
    that of the full condition set.  Subsets are enumerated by increasing
    size, so minimality amounts to containing no previously found reduct.
    Refuses tables with more than ``MAX_REDUCT_ATTRS`` condition attributes.
    """
    conditions = table.condition_attrs
    if len(conditions) > MAX_REDUCT_ATTRS:
        raise AttributeLimitError(
            f"{len(conditions)} condition attributes exceed the exhaustive "
            f"search bound of {MAX_REDUCT_ATTRS}"
        )
    baseline = dependency_degree(table, conditions)
    reducts: list[tuple[str, ...]] = []
    for size in range(len(conditions) + 1):
        for combo in combinations(conditions, size):
            chosen = set(combo)
            if any(set(red) <= chosen for red in reducts):
                continue
            if dependency_degree(table, combo) == baseline:
                reducts.append(combo)
    reducts.sort(key=lambda red: (len(red), red))
    core_set = set(conditions)
    for red in reducts:
        core_set &= set(red)
    core = tuple(name for name in conditions if name in core_set)
    return ReductReport(tuple(reducts), core, baseline)


def significance(table: DecisionTable, attr: str) -> Fraction:
    """Dependency drop when ``attr`` is removed from the full condition set."""
    conditions = table.condition_subset([attr])  # validates attr
    rest = tuple(name for name in table.condition_attrs if name != conditions[0])
    return dependency_degree(table, table.condition_attrs) - dependency_degree(
        table, rest
    )
