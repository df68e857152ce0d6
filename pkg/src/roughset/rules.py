"""Decision rules: induction from tables, auditing, classification.

Rules are conjunctions of attribute=value tests implying a decision value.
Induction computes a value reduct per row (greedy condition dropping with a
fixed order, so results are deterministic); auditing measures any rule set,
including externally authored rule files, against a table; classification
votes fired rules by support and abstains ("unknown") on ties or when
nothing fires.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Mapping, Optional, Sequence, Union

from ._fmt import rational, rows_1based
from .errors import (
    InconsistentTableError,
    MissingAttributeError,
    RuleFormatError,
    UnknownAttributeError,
)
from .table import DecisionTable, canonicalize_decision, canonicalize_level, validate

#: Verdict value used when classification abstains.
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Rule:
    """One conjunctive rule: antecedent tests -> decision value.

    Statistics are measured against a training table when known; rules
    loaded from a file carry ``None`` until audited.  ``confidence`` is
    hits/support and stays ``None`` when support is 0.
    """

    antecedent: tuple[tuple[str, str], ...]
    consequent: str
    support: Optional[int] = None
    hits: Optional[int] = None
    confidence: Optional[Fraction] = None
    coverage: Optional[Fraction] = None

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "antecedent", tuple((a, v) for a, v in self.antecedent)
        )
        attrs = [a for a, _ in self.antecedent]
        if len(set(attrs)) != len(attrs):
            raise RuleFormatError(
                f"rule tests an attribute twice: {self.antecedent}"
            )

    def matches(self, obj: Mapping[str, str]) -> bool:
        """True when every antecedent test is satisfied by ``obj``."""
        for attr, value in self.antecedent:
            if attr not in obj:
                raise MissingAttributeError(
                    f"object lacks attribute {attr!r} required by a rule"
                )
            if obj[attr] != value:
                return False
        return True

    def key(self) -> tuple:
        return (self.antecedent, self.consequent)

    def to_dict(self) -> dict:
        entry: dict = {
            "if": [{"attr": a, "value": v} for a, v in self.antecedent],
            "then": self.consequent,
        }
        if self.support is not None:
            entry["support"] = self.support
            entry["hits"] = self.hits
            entry["confidence"] = (
                rational(self.confidence) if self.confidence is not None else None
            )
            entry["coverage"] = (
                rational(self.coverage) if self.coverage is not None else None
            )
        return entry


@dataclass(frozen=True)
class RuleSet:
    """Ordered rules plus their provenance ("induced" or "file")."""

    rules: tuple[Rule, ...]
    source: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", tuple(self.rules))
        seen = set()
        for rule in self.rules:
            if rule.key() in seen:
                raise RuleFormatError(f"duplicate rule: {rule.key()}")
            seen.add(rule.key())

    def __len__(self) -> int:
        return len(self.rules)

    def attributes(self) -> tuple[str, ...]:
        """Attributes mentioned by any antecedent, in first-mention order."""
        seen: dict[str, None] = {}
        for rule in self.rules:
            for attr, _ in rule.antecedent:
                seen.setdefault(attr)
        return tuple(seen)

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "rules": [rule.to_dict() for rule in self.rules],
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of classifying one object.

    ``matched_rules`` holds 0-based indices of every fired rule; the
    decision is ``unknown`` when nothing fired or the vote tied, and
    ``override_alert`` is set exactly on an inconsistent decision.
    """

    decision: str
    matched_rules: tuple[int, ...]
    override_alert: bool

    def to_dict(self) -> dict:
        return {
            "decision": self.decision,
            "matched_rules": [i + 1 for i in self.matched_rules],
            "override_alert": self.override_alert,
        }


@dataclass(frozen=True)
class RuleAuditEntry:
    rule: Rule
    support: int
    hits: int
    confidence: Optional[Fraction]
    counterexamples: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "if": [{"attr": a, "value": v} for a, v in self.rule.antecedent],
            "then": self.rule.consequent,
            "support": self.support,
            "hits": self.hits,
            "confidence": (
                rational(self.confidence) if self.confidence is not None else None
            ),
            "counterexamples": rows_1based(self.counterexamples),
        }


@dataclass(frozen=True)
class RuleAudit:
    """Per-rule support/hits/confidence/counterexamples against a table."""

    entries: tuple[RuleAuditEntry, ...]

    def to_dict(self) -> dict:
        return {
            "rules": [
                {"index": i + 1, **entry.to_dict()}
                for i, entry in enumerate(self.entries)
            ]
        }


def _matching_rows(
    table: DecisionTable, antecedent: Sequence[tuple[str, str]]
) -> frozenset[int]:
    rows = set(range(table.n_rows))
    for attr, value in antecedent:
        rows = {i for i in rows if table.value(i, attr) == value}
    return frozenset(rows)


def _confidence_one(
    table: DecisionTable, antecedent: Sequence[tuple[str, str]], decision: str
) -> bool:
    return all(
        table.decision(i) == decision for i in _matching_rows(table, antecedent)
    )


def induce_rules(table: DecisionTable) -> RuleSet:
    """Induce minimal certain rules, one value reduct per row.

    Starting from a row's full condition list, conditions are dropped
    greedily in reverse column order whenever the shortened rule keeps
    confidence 1.0 on the whole table.  The surviving antecedent is
    1-minimal: dropping any single remaining condition admits a
    counterexample.  Duplicates collapse; rules sort by support (desc),
    antecedent size (asc), then lexicographically.

    Raises :class:`InconsistentTableError` when the table has conflicting
    rows, since no certain rule can cover those.
    """
    report = validate(table)
    if not report.is_consistent:
        first = report.conflicting_pairs[0]
        raise InconsistentTableError(
            f"table has conflicting rows, e.g. rows {first[0] + 1} and "
            f"{first[1] + 1}; cannot induce certain rules"
        )

    class_sizes = {value: len(rows) for value, rows in table.decision_classes().items()}
    induced: dict[tuple, Rule] = {}
    for i in range(table.n_rows):
        decision = table.decision(i)
        kept = list(table.condition_attrs)
        for attr in reversed(table.condition_attrs):
            trial = [name for name in kept if name != attr]
            antecedent = [(name, table.value(i, name)) for name in trial]
            if _confidence_one(table, antecedent, decision):
                kept = trial
        antecedent = tuple((name, table.value(i, name)) for name in kept)
        if (antecedent, decision) in induced:
            continue
        support = len(_matching_rows(table, antecedent))
        induced[(antecedent, decision)] = Rule(
            antecedent=antecedent,
            consequent=decision,
            support=support,
            hits=support,
            confidence=Fraction(1),
            coverage=Fraction(support, class_sizes[decision]),
        )

    rules = sorted(
        induced.values(),
        key=lambda r: (-r.support, len(r.antecedent), r.antecedent, r.consequent),
    )
    return RuleSet(tuple(rules), source="induced")


def audit_rules(table: DecisionTable, rules: RuleSet) -> RuleAudit:
    """Measure every rule against a table, counterexamples included."""
    entries = []
    for rule in rules.rules:
        for attr, _ in rule.antecedent:
            if attr not in table.condition_attrs:
                raise UnknownAttributeError(
                    f"rule references unknown condition attribute {attr!r}"
                )
        matching = _matching_rows(table, rule.antecedent)
        hits = sum(1 for i in matching if table.decision(i) == rule.consequent)
        counter = tuple(
            sorted(i for i in matching if table.decision(i) != rule.consequent)
        )
        confidence = Fraction(hits, len(matching)) if matching else None
        entries.append(
            RuleAuditEntry(rule, len(matching), hits, confidence, counter)
        )
    return RuleAudit(tuple(entries))


def classify(rules: RuleSet, obj: Mapping[str, str]) -> Verdict:
    """Fire all satisfied rules and vote their consequents by support.

    Rules without a known support weigh 1 each.  No fired rule, or a tied
    vote, yields an ``unknown`` decision (the engine abstains rather than
    guessing).  ``obj`` must provide a value for every attribute any rule
    references.
    """
    for attr in rules.attributes():
        if attr not in obj:
            raise MissingAttributeError(f"object lacks attribute {attr!r}")

    fired = tuple(i for i, rule in enumerate(rules.rules) if rule.matches(obj))
    votes: dict[str, int] = {}
    for i in fired:
        rule = rules.rules[i]
        weight = rule.support if rule.support is not None else 1
        votes[rule.consequent] = votes.get(rule.consequent, 0) + weight

    if not votes:
        return Verdict(UNKNOWN, fired, override_alert=False)
    best = max(votes.values())
    winners = [value for value, weight in votes.items() if weight == best]
    if len(winners) != 1:
        return Verdict(UNKNOWN, fired, override_alert=False)
    decision = winners[0]
    return Verdict(decision, fired, override_alert=decision == "inconsistent")


def attribute_frequency(
    rules: RuleSet, attrs: Optional[Iterable[str]] = None
) -> dict[str, int]:
    """Count how many rules mention each attribute in their antecedent.

    ``attrs`` fixes the keys (zeros included); by default the keys are the
    attributes the rule set mentions, in first-mention order.
    """
    keys = tuple(attrs) if attrs is not None else rules.attributes()
    counts = {attr: 0 for attr in keys}
    for rule in rules.rules:
        for attr, _ in rule.antecedent:
            if attr in counts:
                counts[attr] += 1
    return counts


def load_rules(source: Union[str, IO[str]]) -> RuleSet:
    """Load a rule file: a JSON list of {"if": [{attr, value}...], "then": v}.

    A {"rules": [...]} wrapper (as emitted by rule induction reports) is
    accepted too; unknown keys on rule entries are ignored.  Values are
    canonicalized against the closed level/decision vocabularies.
    """
    text = source if isinstance(source, str) else source.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RuleFormatError(f"rule file is not valid JSON: {exc}") from None
    if isinstance(payload, dict) and isinstance(payload.get("rules"), list):
        payload = payload["rules"]
    if not isinstance(payload, list):
        raise RuleFormatError("rule file must be a JSON list of rules")

    rules = []
    for n, entry in enumerate(payload, start=1):
        if not isinstance(entry, dict) or "if" not in entry or "then" not in entry:
            raise RuleFormatError(f"rule {n}: expected an object with 'if' and 'then'")
        tests = entry["if"]
        if not isinstance(tests, list):
            raise RuleFormatError(f"rule {n}: 'if' must be a list")
        antecedent = []
        for test in tests:
            if not isinstance(test, dict) or "attr" not in test or "value" not in test:
                raise RuleFormatError(
                    f"rule {n}: each test needs 'attr' and 'value'"
                )
            antecedent.append(
                (str(test["attr"]), canonicalize_level(str(test["value"])).value)
            )
        consequent = canonicalize_decision(str(entry["then"]))
        rules.append(Rule(tuple(antecedent), consequent))
    return RuleSet(tuple(rules), source="file")
