"""Hold-out evaluation of the rule learner against an ID3 baseline."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ._fmt import percent, rational
from .autopilot import training_fixture
from .errors import DataError, SchemaMismatchError
from .id3 import build_tree, tree_classify
from .rules import UNKNOWN, classify, induce_rules
from .table import LEVELS, DecisionTable

RULES_APPROACH = "Rough set decision rules"
ID3_APPROACH = "ID3 decision tree"


def detection_rate(matched: int, total: int) -> Fraction:
    """Fraction of test rows whose predicted decision equals the actual one."""
    if total <= 0:
        raise DataError(f"total must be positive, got {total}")
    if matched < 0 or matched > total:
        raise DataError(f"matched must be in [0, {total}], got {matched}")
    return Fraction(matched, total)


@dataclass(frozen=True)
class EvalReport:
    """One approach's score on one train/test split."""

    approach: str
    training_size: int
    testing_size: int
    matched: int
    detection_rate: Fraction
    #: Test rows where the classifier abstained; None when it cannot abstain.
    unknown_verdicts: Optional[int] = None

    def to_dict(self) -> dict:
        out = {
            "approach": self.approach,
            "training_size": self.training_size,
            "testing_size": self.testing_size,
            "matched": self.matched,
            "detection_rate": rational(self.detection_rate),
            "detection_rate_percent": percent(self.detection_rate),
        }
        if self.unknown_verdicts is not None:
            out["unknown_verdicts"] = self.unknown_verdicts
        return out


def _check_same_schema(train: DecisionTable, test: DecisionTable) -> None:
    if (
        train.condition_attrs != test.condition_attrs
        or train.decision_attr != test.decision_attr
    ):
        raise SchemaMismatchError(
            "train and test tables must share the same attributes: "
            f"{train.attrs} vs {test.attrs}"
        )


def compare(train: DecisionTable, test: DecisionTable) -> list[EvalReport]:
    """Score induced rules and an ID3 tree on the same hold-out table.

    Rule-side abstentions (no rule fires, or the vote ties) count as
    mismatches and are tallied separately in ``unknown_verdicts``.
    """
    _check_same_schema(train, test)
    rules = induce_rules(train)
    tree = build_tree(train)

    rule_matched = 0
    unknown = 0
    tree_matched = 0
    for i in range(test.n_rows):
        obj = test.row_object(i)
        actual = test.decision(i)
        verdict = classify(rules, obj)
        if verdict.decision == UNKNOWN:
            unknown += 1
        elif verdict.decision == actual:
            rule_matched += 1
        if tree_classify(tree, obj) == actual:
            tree_matched += 1

    n_train = train.n_rows
    n_test = test.n_rows
    return [
        EvalReport(
            RULES_APPROACH,
            n_train,
            n_test,
            rule_matched,
            detection_rate(rule_matched, n_test),
            unknown_verdicts=unknown,
        ),
        EvalReport(
            ID3_APPROACH,
            n_train,
            n_test,
            tree_matched,
            detection_rate(tree_matched, n_test),
        ),
    ]


def synth_test_set(seed: int, n: int = 50) -> DecisionTable:
    """A reproducible synthetic hold-out table on the bundled schema.

    Condition cells are drawn uniformly from the four levels with
    ``random.Random(seed)``, two bits per cell in row-major order.  Each
    row is labeled by the rules induced from the bundled training table,
    falling back to the ID3 tree's verdict when the rules abstain, so the
    labels are deterministic given the seed.
    """
    if n <= 0:
        raise DataError(f"size must be positive, got {n}")
    train = training_fixture()
    rules = induce_rules(train)
    tree = build_tree(train)
    rng = random.Random(seed)
    rows = []
    for _ in range(n):
        conditions = [LEVELS[rng.getrandbits(2)].value for _ in train.condition_attrs]
        obj = dict(zip(train.condition_attrs, conditions))
        label = classify(rules, obj).decision
        if label == UNKNOWN:
            label = tree_classify(tree, obj)
        rows.append(tuple(conditions) + (label,))
    return DecisionTable(train.condition_attrs, train.decision_attr, tuple(rows))


def comparison_text(reports: list[EvalReport]) -> str:
    """Plain-text comparison table, detection rate as a whole percent."""
    headers = (
        "Approach",
        "Training Data set",
        "Testing Data set",
        "Matched Content",
        "Detection Rate",
    )
    body = [
        (
            r.approach,
            str(r.training_size),
            str(r.testing_size),
            str(r.matched),
            percent(r.detection_rate),
        )
        for r in reports
    ]
    widths = [
        max(len(headers[c]), *(len(row[c]) for row in body)) if body else len(headers[c])
        for c in range(len(headers))
    ]
    lines = []
    for row in (headers, *body):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"
