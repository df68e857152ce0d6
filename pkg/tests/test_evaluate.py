import json
from fractions import Fraction

import pytest

from roughset import (
    ID3_APPROACH,
    RULES_APPROACH,
    UNKNOWN,
    DataError,
    DecisionTable,
    SchemaMismatchError,
    build_tree,
    classify,
    compare,
    comparison_text,
    detection_rate,
    induce_rules,
    serialize_table,
    synth_test_set,
    training_fixture,
    tree_classify,
)
from roughset.table import LEVELS


class TestDetectionRate:
    def test_exact_fractions(self):
        assert detection_rate(48, 50) == Fraction(24, 25)
        assert float(detection_rate(48, 50)) == 0.96
        assert float(detection_rate(41, 50)) == 0.82
        assert detection_rate(0, 10) == 0

    def test_bad_inputs(self):
        with pytest.raises(DataError):
            detection_rate(1, 0)
        with pytest.raises(DataError):
            detection_rate(-1, 10)
        with pytest.raises(DataError):
            detection_rate(11, 10)


class TestCompare:
    def test_resubstitution_is_perfect(self, table6):
        reports = compare(table6, table6)
        assert [r.approach for r in reports] == [RULES_APPROACH, ID3_APPROACH]
        for report in reports:
            assert report.training_size == 30
            assert report.testing_size == 30
            assert report.matched == 30
            assert report.detection_rate == 1
        assert reports[0].unknown_verdicts == 0
        assert reports[1].unknown_verdicts is None

    def test_single_row_test_set(self, table6):
        test = DecisionTable(
            table6.condition_attrs,
            table6.decision_attr,
            (("high",) * 5 + ("consistent",),),
        )
        reports = compare(table6, test)
        assert all(r.matched == 1 and r.detection_rate == 1 for r in reports)

    def test_rule_abstention_counts_as_miss(self):
        train = DecisionTable(
            ("a",), "d", (("high", "consistent"), ("low", "inconsistent"))
        )
        test = DecisionTable(("a",), "d", (("moderate", "consistent"),))
        rules_report, tree_report = compare(train, test)
        # no induced rule mentions "moderate", so the rule side abstains
        assert rules_report.matched == 0
        assert rules_report.unknown_verdicts == 1
        assert rules_report.detection_rate == 0
        # the tree falls back to the root majority, which ties to "consistent"
        assert tree_report.matched == 1
        assert tree_report.detection_rate == 1

    def test_schema_mismatch(self, table6):
        other = DecisionTable(("a",), "d", (("high", "consistent"),))
        with pytest.raises(SchemaMismatchError):
            compare(table6, other)


class TestSynthTestSet:
    def test_deterministic(self):
        a = synth_test_set(7, 20)
        b = synth_test_set(7, 20)
        assert a == b
        assert a != synth_test_set(8, 20)

    def test_shape_and_vocabulary(self, table6):
        test = synth_test_set(3, 25)
        assert test.n_rows == 25
        assert test.condition_attrs == table6.condition_attrs
        assert test.decision_attr == table6.decision_attr
        for row in test.rows:
            assert all(value in LEVELS for value in row[:-1])
            assert row[-1] in ("consistent", "inconsistent")

    def test_size_must_be_positive(self):
        with pytest.raises(DataError):
            synth_test_set(1, 0)

    def test_labels_follow_rules_then_tree(self, table6):
        rules = induce_rules(table6)
        tree = build_tree(table6)
        test = synth_test_set(11, 40)
        for row in test.rows:
            obj = dict(zip(table6.condition_attrs, row[:-1]))
            verdict = classify(rules, obj)
            expected = (
                verdict.decision
                if verdict.decision != UNKNOWN
                else tree_classify(tree, obj)
            )
            assert row[-1] == expected

    def test_seed_42_matches_committed_fixture(self, data_dir):
        committed = (data_dir / "synthetic_seed42_n50.csv").read_text()
        assert serialize_table(synth_test_set(42, 50)) == committed


class TestReports:
    def test_to_dict_shapes(self, table6):
        rules_report, tree_report = compare(table6, table6)
        payload = rules_report.to_dict()
        assert payload["approach"] == RULES_APPROACH
        assert payload["detection_rate"] == {"num": 1, "den": 1, "decimal": "1.0"}
        assert payload["detection_rate_percent"] == "100%"
        assert payload["unknown_verdicts"] == 0
        assert "unknown_verdicts" not in tree_report.to_dict()

    def test_seed_42_reports_match_golden(self, table6, data_dir):
        golden = json.loads((data_dir / "golden_eval_seed42.json").read_text())
        reports = compare(table6, synth_test_set(42, 50))
        assert [r.to_dict() for r in reports] == golden["reports"]

    def test_comparison_text_matches_golden(self, table6, data_dir):
        golden = (data_dir / "golden_eval_seed42.txt").read_text()
        reports = compare(table6, synth_test_set(42, 50))
        assert comparison_text(reports) == golden

    def test_text_columns_align(self, table6):
        reports = compare(table6, table6)
        lines = comparison_text(reports).splitlines()
        assert len(lines) == 3
        assert lines[0].startswith("Approach")
        start = lines[0].index("Detection Rate")
        assert lines[1][start:].strip() == "100%"
        assert lines[2][start:].strip() == "100%"


def test_training_fixture_is_default_train_everywhere(table6):
    # compare() against the bundled fixture should agree with an explicit copy
    explicit = DecisionTable(
        table6.condition_attrs, table6.decision_attr, table6.rows
    )
    assert compare(explicit, explicit) == compare(training_fixture(), explicit)
