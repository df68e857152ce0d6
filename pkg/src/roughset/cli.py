"""Command-line front end.

Every library capability is reachable from a subcommand; payloads are
machine-readable JSON by default (``--format text`` for human reading) and
go to standard output only, diagnostics to standard error.  Exit codes:
0 success, 1 usage error, 2 data or file error, 3 internal error.

Table and rule-file paths resolve against the working directory first,
then ``$ROUGHSET_FIXTURES``, then the installed package data, so bundled
names like ``fixtures/table_6.csv`` work out of the box.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Optional

from ._fmt import rational, rows_1based
from .analysis import (
    approximation_report,
    dependency_degree,
    find_reducts,
    partition,
    positive_region,
    significance,
)
from .autopilot import (
    FACTOR_NAMES,
    PAYLOAD_ATTRS,
    PAYLOAD_IDS,
    FaultVector,
    _parse_yes_no,
    bundled_data_paths,
    full_pipeline,
    levels_object,
    payload_level,
    read_data_bytes,
    read_data_text,
    reference_rules,
    training_fixture,
)
from .errors import DataError
from .evaluate import compare, comparison_text, synth_test_set
from .id3 import (
    Leaf,
    build_tree,
    tree_classify,
    tree_depth,
    tree_from_dict,
    tree_to_dict,
)
from .rules import (
    RuleSet,
    attribute_frequency,
    audit_rules,
    classify,
    induce_rules,
    load_rules,
)
from .table import (
    DecisionTable,
    canonicalize_decision,
    canonicalize_level,
    parse_table,
    serialize_table,
    validate,
)


class UsageError(Exception):
    """Bad command line; mapped to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse would sys.exit(2) on bad flags; route through UsageError so
    # main() owns the exit code contract.
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class CommandOutcome:
    """One invocation's result.

    ``payload`` (and its ``text`` rendering) belongs on standard output,
    ``error`` on standard error.  Exit codes: 0 success, 1 usage error,
    2 data error, 3 internal error.
    """

    payload: Optional[dict]
    text: str
    exit_code: int = 0
    error: Optional[str] = None
    fmt: str = "json"


# ---------------------------------------------------------------- helpers

def _read_text(path_str: str) -> str:
    path = Path(path_str)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    env = os.environ.get("ROUGHSET_FIXTURES")
    if env:
        candidate = Path(env) / path_str
        if candidate.is_file():
            return candidate.read_text(encoding="utf-8")
    try:
        return read_data_text(path_str)
    except OSError:
        raise FileNotFoundError(
            f"cannot find {path_str!r} in the working directory, "
            "$ROUGHSET_FIXTURES, or the bundled data"
        ) from None


def _load_table(path_str: str, decision: Optional[str] = None) -> DecisionTable:
    return parse_table(_read_text(path_str), decision_attr=decision)


def _resolve_rules(source: str, train: Optional[DecisionTable]) -> RuleSet:
    """Rule source: the literal names ``induced``/``sec4g`` or a file path."""
    if source == "sec4g":
        return reference_rules()
    if source == "induced":
        return induce_rules(train if train is not None else training_fixture())
    return load_rules(_read_text(source))


def _split_list(text: str) -> tuple[str, ...]:
    items = tuple(part.strip() for part in text.split(",") if part.strip())
    if not items:
        raise UsageError(f"expected a comma-separated list, got {text!r}")
    return items


def _parse_pairs(pairs) -> dict[str, str]:
    obj: dict[str, str] = {}
    for item in pairs:
        attr, eq, value = item.partition("=")
        attr = attr.strip()
        if not eq or not attr:
            raise UsageError(f"expected attr=value, got {item!r}")
        if attr in obj:
            raise UsageError(f"attribute {attr!r} given twice")
        obj[attr] = canonicalize_level(value).value
    return obj


def _parse_faults_file(text: str) -> FaultVector:
    mapping: dict[str, bool] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        name, eq, value = body.partition("=")
        name = name.strip()
        if not eq or not name:
            raise DataError(f"line {line_no}: expected factor=yes|no")
        if name in mapping:
            raise DataError(f"line {line_no}: duplicate factor {name!r}")
        mapping[name] = _parse_yes_no(value)
    return FaultVector.from_mapping(mapping)


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _rows_text(rows) -> str:
    rendered = ", ".join(str(i) for i in rows_1based(rows))
    return rendered if rendered else "(none)"


def _rule_text(rule) -> str:
    conds = " and ".join(f"{a}={v}" for a, v in rule.antecedent)
    return f"if {conds or 'always'} then {rule.consequent}"


def _tree_lines(node, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(node, Leaf):
        return [f"{pad}-> {node.decision}"]
    lines = [f"{pad}{node.attribute}? (fallback: {node.fallback})"]
    for value, child in node.branches.items():
        if isinstance(child, Leaf):
            lines.append(f"{pad}  = {value} -> {child.decision}")
        else:
            lines.append(f"{pad}  = {value}:")
            lines.extend(_tree_lines(child, indent + 2))
    return lines


def _verdict_lines(verdict) -> list[str]:
    fired = ", ".join(str(i + 1) for i in verdict.matched_rules) or "(none)"
    lines = [f"decision: {verdict.decision}", f"matched rules: {fired}"]
    if verdict.override_alert:
        lines.append("override alert: yes (manual control advised)")
    else:
        lines.append("override alert: no")
    return lines


def _classify_rows(table: DecisionTable, predict) -> CommandOutcome:
    """Shared row-by-row classification report for rules/id3 over a table."""
    rows = []
    matched = 0
    for i in range(table.n_rows):
        result = predict(table.row_object(i))
        actual = table.decision(i)
        match = result["decision"] == actual
        if match:
            matched += 1
        rows.append({"row": i + 1, **result, "actual": actual, "match": match})
    payload = {"rows": rows, "matched": matched, "total": table.n_rows}
    lines = [
        f"row {e['row']}: {e['decision']} (actual {e['actual']})" for e in rows
    ]
    lines.append(f"matched {matched} of {table.n_rows}")
    return CommandOutcome(payload, "\n".join(lines))


# ------------------------------------------------------------- subcommands

def _cmd_validate(args) -> CommandOutcome:
    table = _load_table(args.table, args.decision)
    report = validate(table)
    payload = {"n_rows": table.n_rows, **report.to_dict()}
    lines = [
        f"rows: {table.n_rows}",
        f"consistent: {'yes' if report.is_consistent else 'no'}",
    ]
    for i, j in report.conflicting_pairs:
        lines.append(f"conflict: rows {i + 1} and {j + 1}")
    for i, j in report.duplicate_pairs:
        lines.append(f"duplicate: rows {i + 1} and {j + 1}")
    return CommandOutcome(payload, "\n".join(lines))


def _cmd_canonicalize(args) -> CommandOutcome:
    table = _load_table(args.table, args.decision)
    csv_text = serialize_table(table)
    return CommandOutcome({"csv": csv_text}, csv_text)


def _cmd_partition(args) -> CommandOutcome:
    table = _load_table(args.table)
    part = partition(table, _split_list(args.attrs))
    lines = [f"attrs: {', '.join(part.attrs)}"]
    for n, block in enumerate(part.blocks, start=1):
        lines.append(f"block {n}: rows {_rows_text(block)}")
    return CommandOutcome(part.to_dict(), "\n".join(lines))


def _cmd_approx(args) -> CommandOutcome:
    table = _load_table(args.table)
    attrs = table.column_subset(_split_list(args.attrs))
    if (args.target_class is None) == (args.rows is None):
        raise UsageError("give exactly one of --class or --rows")
    if args.target_class is not None:
        value = canonicalize_decision(args.target_class)
        target = table.class_rows(value)
        described = {"class": value}
    else:
        try:
            target = frozenset(int(tok) - 1 for tok in _split_list(args.rows))
        except ValueError:
            raise UsageError(f"--rows expects 1-based integers, got {args.rows!r}")
        described = {}
    report = approximation_report(table, attrs, target)
    payload = {**described, **report.to_dict()}
    lines = [
        f"attrs: {', '.join(report.attrs)}",
        f"target: rows {_rows_text(report.target)}",
        f"lower: rows {_rows_text(report.lower)}",
        f"upper: rows {_rows_text(report.upper)}",
        f"boundary: rows {_rows_text(report.boundary)}",
        f"accuracy: {_frac(report.accuracy)}",
        f"crisp: {'yes' if report.is_crisp else 'no'}",
    ]
    return CommandOutcome(payload, "\n".join(lines))


def _cmd_gamma(args) -> CommandOutcome:
    table = _load_table(args.table)
    attrs = _split_list(args.attrs) if args.attrs else table.condition_attrs
    subset = table.condition_subset(attrs)
    pos = positive_region(table, subset)
    gamma = dependency_degree(table, subset)
    payload = {
        "attrs": list(subset),
        "positive_region": rows_1based(pos),
        "gamma": rational(gamma),
    }
    text = (
        f"attrs: {', '.join(subset)}\n"
        f"positive region: rows {_rows_text(pos)}\n"
        f"gamma: {_frac(gamma)}"
    )
    return CommandOutcome(payload, text)


def _cmd_significance(args) -> CommandOutcome:
    table = _load_table(args.table)
    attrs = (
        table.condition_subset(_split_list(args.attrs))
        if args.attrs
        else table.condition_attrs
    )
    values = {attr: significance(table, attr) for attr in attrs}
    payload = {"significance": {a: rational(v) for a, v in values.items()}}
    text = "\n".join(f"{a}: {_frac(v)}" for a, v in values.items())
    return CommandOutcome(payload, text)


def _cmd_reducts(args) -> CommandOutcome:
    table = _load_table(args.table)
    report = find_reducts(table)
    lines = [f"gamma (all conditions): {_frac(report.baseline_gamma)}"]
    for red in report.reducts:
        lines.append(f"reduct: {', '.join(red)}")
    lines.append(f"core: {', '.join(report.core) or '(empty)'}")
    return CommandOutcome(report.to_dict(), "\n".join(lines))


def _cmd_rules_induce(args) -> CommandOutcome:
    table = _load_table(args.table)
    ruleset = induce_rules(table)
    payload = {
        "source": ruleset.source,
        "n_rules": len(ruleset),
        "rules": [rule.to_dict() for rule in ruleset.rules],
    }
    lines = []
    for n, rule in enumerate(ruleset.rules, start=1):
        lines.append(
            f"{n}. {_rule_text(rule)}"
            f"  [support {rule.support}, coverage {_frac(rule.coverage)}]"
        )
    return CommandOutcome(payload, "\n".join(lines))


def _cmd_rules_audit(args) -> CommandOutcome:
    table = _load_table(args.table)
    ruleset = _resolve_rules(args.rules, table)
    audit = audit_rules(table, ruleset)
    lines = []
    for n, entry in enumerate(audit.entries, start=1):
        conf = _frac(entry.confidence) if entry.confidence is not None else "n/a"
        line = (
            f"{n}. {_rule_text(entry.rule)}"
            f"  [support {entry.support}, hits {entry.hits}, confidence {conf}]"
        )
        if entry.counterexamples:
            line += f" counterexamples: rows {_rows_text(entry.counterexamples)}"
        lines.append(line)
    return CommandOutcome(audit.to_dict(), "\n".join(lines))


def _cmd_rules_classify(args) -> CommandOutcome:
    train = _load_table(args.train) if args.train else None
    ruleset = _resolve_rules(args.rules, train)
    if (args.table is None) == (not args.pairs):
        raise UsageError("give attr=value pairs or --table, not both")
    if args.table is not None:
        table = _load_table(args.table)

        def predict(obj):
            return classify(ruleset, obj).to_dict()

        return _classify_rows(table, predict)
    obj = _parse_pairs(args.pairs)
    verdict = classify(ruleset, obj)
    payload = {"object": obj, **verdict.to_dict()}
    return CommandOutcome(payload, "\n".join(_verdict_lines(verdict)))


def _cmd_rules_frequency(args) -> CommandOutcome:
    train = _load_table(args.train) if args.train else None
    ruleset = _resolve_rules(args.rules, train)
    attrs = _split_list(args.attrs) if args.attrs else None
    counts = attribute_frequency(ruleset, attrs)
    payload = {"source": ruleset.source, "frequency": counts}
    text = "\n".join(f"{attr}: {count}" for attr, count in counts.items())
    return CommandOutcome(payload, text)


def _cmd_id3_train(args) -> CommandOutcome:
    table = _load_table(args.table)
    tree = build_tree(table)
    payload = {"tree": tree_to_dict(tree), "depth": tree_depth(tree)}
    lines = _tree_lines(tree)
    lines.append(f"depth: {tree_depth(tree)}")
    return CommandOutcome(payload, "\n".join(lines))


def _cmd_id3_classify(args) -> CommandOutcome:
    if (args.train is None) == (args.tree is None):
        raise UsageError("give exactly one of --train or --tree")
    if args.train is not None:
        tree = build_tree(_load_table(args.train))
    else:
        try:
            payload = json.loads(_read_text(args.tree))
        except json.JSONDecodeError as exc:
            raise DataError(f"tree file is not valid JSON: {exc}") from None
        if isinstance(payload, dict) and "tree" in payload:
            payload = payload["tree"]
        tree = tree_from_dict(payload)
    if (args.table is None) == (not args.pairs):
        raise UsageError("give attr=value pairs or --table, not both")
    if args.table is not None:
        table = _load_table(args.table)

        def predict(obj):
            return {"decision": tree_classify(tree, obj)}

        return _classify_rows(table, predict)
    obj = _parse_pairs(args.pairs)
    decision = tree_classify(tree, obj)
    payload = {"object": obj, "decision": decision}
    return CommandOutcome(payload, f"decision: {decision}")


def _cmd_evaluate(args) -> CommandOutcome:
    if (args.test is None) == (args.synthetic is None):
        raise UsageError("give exactly one of --test or --synthetic")
    if args.size != 50 and args.synthetic is None:
        raise UsageError("--size only applies with --synthetic")
    if args.train:
        train = _load_table(args.train)
        train_desc = args.train
    else:
        train = training_fixture()
        train_desc = "fixtures/table_6.csv (bundled)"
    if args.test is not None:
        test = _load_table(args.test)
        test_desc = args.test
    else:
        test = synth_test_set(args.synthetic, args.size)
        test_desc = f"synthetic seed={args.synthetic} size={args.size}"
    reports = compare(train, test)
    payload = {
        "train": train_desc,
        "test": test_desc,
        "reports": [report.to_dict() for report in reports],
    }
    return CommandOutcome(payload, comparison_text(reports).rstrip("\n"))


def _cmd_autopilot(args) -> CommandOutcome:
    modes = [
        args.faults is not None,
        args.faults_file is not None,
        args.levels is not None,
        args.payload is not None,
    ]
    if sum(modes) != 1:
        raise UsageError(
            "give exactly one of --faults, --faults-file, --levels, --payload"
        )

    if args.payload is not None:
        if args.inputs is None:
            raise UsageError("--payload needs --inputs yes,no,...")
        pid = args.payload.strip().upper()
        if pid not in PAYLOAD_IDS:
            raise DataError(f"unknown payload {args.payload!r}, expected I..V")
        inputs = tuple(_parse_yes_no(tok) for tok in _split_list(args.inputs))
        level = payload_level(pid, inputs)
        payload = {
            "payload": pid,
            "inputs": list(inputs),
            "level": level.value,
        }
        return CommandOutcome(payload, f"Payload {pid}: {level.value}")
    if args.inputs is not None:
        raise UsageError("--inputs only applies with --payload")

    train = _load_table(args.train) if args.train else None
    ruleset = _resolve_rules(args.rules, train)

    if args.levels is not None:
        obj = levels_object(_split_list(args.levels))
        verdict = classify(ruleset, obj)
        payload = {"levels": obj, "verdict": verdict.to_dict()}
        lines = [f"{attr}: {obj[attr]}" for attr in PAYLOAD_ATTRS]
        lines.extend(_verdict_lines(verdict))
        return CommandOutcome(payload, "\n".join(lines))

    if args.faults is not None:
        faults = FaultVector.from_tokens(_split_list(args.faults))
    else:
        faults = _parse_faults_file(_read_text(args.faults_file))
    result = full_pipeline(faults, ruleset)
    payload = {"faults": faults.as_dict(), **result.to_dict()}
    lines = [f"{attr}: {level}" for attr, level in result.levels.items()]
    lines.extend(_verdict_lines(result.verdict))
    return CommandOutcome(payload, "\n".join(lines))


def _cmd_fixtures_list(args) -> CommandOutcome:
    paths = bundled_data_paths()
    return CommandOutcome({"files": list(paths)}, "\n".join(paths))


def _cmd_fixtures_export(args) -> CommandOutcome:
    dest = Path(args.dest)
    written = []
    for rel in bundled_data_paths():
        target = dest / rel
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(read_data_bytes(rel))
        written.append(str(target))
    payload = {"dest": str(dest), "written": written}
    return CommandOutcome(payload, "\n".join(written))


def _cmd_fixtures_synth(args) -> CommandOutcome:
    table = synth_test_set(args.seed, args.size)
    csv_text = serialize_table(table)
    payload = {"seed": args.seed, "size": args.size, "csv": csv_text}
    return CommandOutcome(payload, csv_text)


# ------------------------------------------------------------------ parser

def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "text"),
        default="json",
        help="output format (default: json)",
    )

    parser = _Parser(
        prog="roughset",
        description="Rough-set decision analysis over categorical tables.",
    )
    from . import __version__

    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def table_arg(p, required=True, help="decision table CSV"):
        p.add_argument("--table", required=required, help=help)

    p = sub.add_parser("validate", parents=[common],
                       help="scan a table for conflicts and duplicates")
    table_arg(p)
    p.add_argument("--decision", help="decision column (default: last)")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("canonicalize", parents=[common],
                       help="re-emit a table with canonical tokens")
    table_arg(p)
    p.add_argument("--decision", help="decision column (default: last)")
    p.set_defaults(func=_cmd_canonicalize)

    p = sub.add_parser("partition", parents=[common],
                       help="indiscernibility classes for an attribute set")
    table_arg(p)
    p.add_argument("--attrs", required=True,
                   help="comma-separated attribute names")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("approx", parents=[common],
                       help="lower/upper approximation of a decision class")
    table_arg(p)
    p.add_argument("--attrs", required=True,
                   help="comma-separated attribute names")
    p.add_argument("--class", dest="target_class",
                   help="target decision class, e.g. consistent")
    p.add_argument("--rows", help="explicit 1-based target rows, e.g. 1,2,5")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("gamma", parents=[common],
                       help="positive region and dependency degree")
    table_arg(p)
    p.add_argument("--attrs", help="condition subset (default: all)")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("significance", parents=[common],
                       help="per-attribute dependency drop")
    table_arg(p)
    p.add_argument("--attrs", help="attributes to score (default: all)")
    p.set_defaults(func=_cmd_significance)

    p = sub.add_parser("reducts", parents=[common],
                       help="all reducts and the core")
    table_arg(p)
    p.set_defaults(func=_cmd_reducts)

    rules = sub.add_parser("rules", help="rule induction, audit, classification")
    rsub = rules.add_subparsers(dest="action", required=True, metavar="action")

    p = rsub.add_parser("induce", parents=[common],
                        help="induce minimal certain rules")
    table_arg(p)
    p.set_defaults(func=_cmd_rules_induce)

    p = rsub.add_parser("audit", parents=[common],
                        help="score a rule set against a table")
    table_arg(p)
    p.add_argument("--rules", required=True,
                   help="rule source: induced, sec4g, or a JSON file")
    p.set_defaults(func=_cmd_rules_audit)

    p = rsub.add_parser("classify", parents=[common],
                        help="classify attr=value pairs or every table row")
    p.add_argument("pairs", nargs="*", metavar="attr=value",
                   help="object to classify")
    table_arg(p, required=False, help="classify every row of this table")
    p.add_argument("--rules", default="induced",
                   help="rule source: induced (default), sec4g, or a file")
    p.add_argument("--train", help="table to induce from (default: bundled)")
    p.set_defaults(func=_cmd_rules_classify)

    p = rsub.add_parser("frequency", parents=[common],
                        help="antecedent attribute mention counts")
    p.add_argument("--rules", required=True,
                   help="rule source: induced, sec4g, or a JSON file")
    p.add_argument("--train", help="table to induce from (default: bundled)")
    p.add_argument("--attrs", help="fix the reported keys (zeros included)")
    p.set_defaults(func=_cmd_rules_frequency)

    id3 = sub.add_parser("id3", help="ID3 decision-tree baseline")
    isub = id3.add_subparsers(dest="action", required=True, metavar="action")

    p = isub.add_parser("train", parents=[common],
                        help="build a tree and emit it as JSON")
    table_arg(p)
    p.set_defaults(func=_cmd_id3_train)

    p = isub.add_parser("classify", parents=[common],
                        help="classify attr=value pairs or every table row")
    p.add_argument("pairs", nargs="*", metavar="attr=value",
                   help="object to classify")
    p.add_argument("--train", help="table to build the tree from")
    p.add_argument("--tree", help="tree JSON file (as emitted by id3 train)")
    table_arg(p, required=False, help="classify every row of this table")
    p.set_defaults(func=_cmd_id3_classify)

    p = sub.add_parser("evaluate", parents=[common],
                       help="compare induced rules against ID3 on a test set")
    p.add_argument("--train", help="training table (default: bundled)")
    p.add_argument("--test", help="testing table CSV")
    p.add_argument("--synthetic", type=int, metavar="SEED",
                   help="generate the test set from this seed")
    p.add_argument("--size", type=int, default=50,
                   help="synthetic test-set size (default: 50)")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("autopilot", parents=[common],
                       help="17 fault inputs -> payload levels -> verdict")
    p.add_argument("--faults",
                   help="17 comma-separated yes/no values in factor order")
    p.add_argument("--faults-file",
                   help="file of factor=yes|no lines (# comments allowed)")
    p.add_argument("--levels",
                   help="skip the lookup: 5 comma-separated payload levels")
    p.add_argument("--payload", help="look up a single payload (I..V)")
    p.add_argument("--inputs",
                   help="with --payload: its yes/no inputs, e.g. yes,no,yes")
    p.add_argument("--rules", default="induced",
                   help="rule source: induced (default), sec4g, or a file")
    p.add_argument("--train", help="table to induce from (default: bundled)")
    p.set_defaults(func=_cmd_autopilot)

    fixtures = sub.add_parser("fixtures", help="bundled data files")
    fsub = fixtures.add_subparsers(dest="action", required=True,
                                   metavar="action")

    p = fsub.add_parser("list", parents=[common],
                        help="list bundled data files")
    p.set_defaults(func=_cmd_fixtures_list)

    p = fsub.add_parser("export", parents=[common],
                        help="copy bundled data files to a directory")
    p.add_argument("--dest", required=True, help="destination directory")
    p.set_defaults(func=_cmd_fixtures_export)

    p = fsub.add_parser("synth", parents=[common],
                        help="emit a deterministic synthetic test table")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, default=50)
    p.set_defaults(func=_cmd_fixtures_synth)

    return parser


def _emit(outcome: CommandOutcome) -> None:
    if outcome.fmt == "json":
        sys.stdout.write(json.dumps(outcome.payload, indent=2) + "\n")
    else:
        text = outcome.text
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def run(argv=None) -> CommandOutcome:
    """Parse and execute one invocation; errors become exit codes.

    Nothing is printed here except argparse's own --help/--version output;
    :func:`main` does the emitting.
    """
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        outcome = args.func(args)
        return replace(outcome, fmt=args.format)
    except UsageError as exc:
        return CommandOutcome(None, "", 1, error=f"error: {exc}")
    except SystemExit as exc:  # --help/--version print and exit themselves
        code = exc.code if isinstance(exc.code, int) else 0
        return CommandOutcome(None, "", code)
    except (DataError, OSError) as exc:
        return CommandOutcome(None, "", 2, error=f"error: {exc}")
    except Exception as exc:
        return CommandOutcome(None, "", 3, error=f"internal error: {exc!r}")


def main(argv=None) -> int:
    outcome = run(argv)
    if outcome.error is not None:
        print(outcome.error, file=sys.stderr)
    if outcome.payload is not None:
        _emit(outcome)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
