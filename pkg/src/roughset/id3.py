"""ID3 decision-tree learner over categorical decision tables.

Greedy maximum-information-gain splits with deterministic tie-breaking:
gain ties go to the earlier table column, majority ties to the
lexicographically smallest decision value.  Split nodes remember their
training majority as a fallback for attribute values never seen during
training, so the tree always answers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .errors import DataError, MissingAttributeError
from .table import DecisionTable


@dataclass(frozen=True)
class Leaf:
    decision: str


@dataclass(frozen=True)
class Split:
    attribute: str
    branches: dict[str, "TreeNode"]
    fallback: str


TreeNode = Union[Leaf, Split]


def entropy(class_counts: Mapping[str, int]) -> float:
    """Shannon entropy in bits of a count histogram; 0 log 0 counts as 0."""
    if any(count < 0 for count in class_counts.values()):
        raise DataError("class counts must be non-negative")
    total = sum(class_counts.values())
    if total == 0:
        raise DataError("entropy of an empty histogram is undefined")
    result = 0.0
    for count in class_counts.values():
        if count:
            p = count / total
            result -= p * math.log2(p)
    return result


def _decision_counts(table: DecisionTable, rows: Iterable[int]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for i in rows:
        value = table.decision(i)
        counts[value] = counts.get(value, 0) + 1
    return counts


def _majority(counts: Mapping[str, int]) -> str:
    # ties go to the lexicographically smallest decision value
    return min(counts, key=lambda value: (-counts[value], value))


def information_gain(
    table: DecisionTable, rows: Iterable[int], attr: str
) -> float:
    """Entropy reduction from splitting ``rows`` on ``attr``.

    Clamped at 0 so floating-point noise can never make a gain negative.
    """
    row_set = frozenset(rows)
    if not row_set:
        raise DataError("information gain over an empty row set is undefined")
    subset = table.condition_subset([attr])
    by_value: dict[str, set[int]] = {}
    for i in row_set:
        by_value.setdefault(table.value(i, subset[0]), set()).add(i)
    gain = entropy(_decision_counts(table, row_set))
    for group in by_value.values():
        gain -= len(group) / len(row_set) * entropy(_decision_counts(table, group))
    return max(0.0, gain)


def build_tree(table: DecisionTable) -> TreeNode:
    """Recursive greedy ID3.

    Recursion stops on a pure subset, on exhausted attributes, or when the
    best gain is zero; each stop produces a majority leaf.
    """

    def grow(rows: frozenset[int], available: tuple[str, ...]) -> TreeNode:
        counts = _decision_counts(table, rows)
        if len(counts) == 1:
            return Leaf(next(iter(counts)))
        majority = _majority(counts)
        if not available:
            return Leaf(majority)
        gains = [information_gain(table, rows, attr) for attr in available]
        best_gain = max(gains)
        if best_gain == 0.0:
            return Leaf(majority)
        best = available[gains.index(best_gain)]  # first max: column order
        remaining = tuple(attr for attr in available if attr != best)
        by_value: dict[str, set[int]] = {}
        for i in rows:
            by_value.setdefault(table.value(i, best), set()).add(i)
        branches = {
            value: grow(frozenset(by_value[value]), remaining)
            for value in sorted(by_value)
        }
        return Split(best, branches, majority)

    return grow(table.universe, table.condition_attrs)


def tree_classify(tree: TreeNode, obj: Mapping[str, str]) -> str:
    """Follow branches; an unseen branch value falls back to the node
    majority."""
    node = tree
    while isinstance(node, Split):
        if node.attribute not in obj:
            raise MissingAttributeError(
                f"object lacks attribute {node.attribute!r} on the tree path"
            )
        child = node.branches.get(obj[node.attribute])
        if child is None:
            return node.fallback
        node = child
    return node.decision


def tree_depth(tree: TreeNode) -> int:
    """Number of splits on the longest root-to-leaf path."""
    if isinstance(tree, Leaf):
        return 0
    return 1 + max(tree_depth(child) for child in tree.branches.values())


def tree_to_dict(tree: TreeNode) -> dict:
    """JSON form: nested {"split", "branches", "fallback"} / {"leaf"}."""
    if isinstance(tree, Leaf):
        return {"leaf": tree.decision}
    return {
        "split": tree.attribute,
        "branches": {
            value: tree_to_dict(child) for value, child in tree.branches.items()
        },
        "fallback": tree.fallback,
    }


def tree_from_dict(payload: dict) -> TreeNode:
    """Inverse of :func:`tree_to_dict`, with structural checks."""
    if not isinstance(payload, dict):
        raise DataError("tree node must be a JSON object")
    if "leaf" in payload:
        return Leaf(str(payload["leaf"]))
    if "split" not in payload:
        raise DataError("tree node needs either 'leaf' or 'split'")
    branches = payload.get("branches")
    if not isinstance(branches, dict) or not branches:
        raise DataError("split node needs a non-empty 'branches' object")
    if "fallback" not in payload:
        raise DataError("split node needs a 'fallback' decision")
    return Split(
        str(payload["split"]),
        {str(v): tree_from_dict(child) for v, child in branches.items()},
        str(payload["fallback"]),
    )
