import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from roughset import (
    DataError,
    DecisionTable,
    Leaf,
    MissingAttributeError,
    Split,
    build_tree,
    entropy,
    information_gain,
    tree_classify,
    tree_depth,
    tree_from_dict,
    tree_to_dict,
)
from strategies import decision_tables


class TestEntropy:
    def test_even_binary_split_is_one_bit(self):
        assert entropy({"consistent": 15, "inconsistent": 15}) == 1.0

    def test_pure_is_zero(self):
        assert entropy({"p": 7}) == 0.0

    def test_uniform_four_way(self):
        assert entropy({"a": 1, "b": 1, "c": 1, "d": 1}) == 2.0

    def test_zero_counts_ignored(self):
        assert entropy({"p": 5, "q": 0}) == 0.0

    def test_empty_histogram_rejected(self):
        with pytest.raises(DataError):
            entropy({})
        with pytest.raises(DataError):
            entropy({"p": 0})

    def test_negative_rejected(self):
        with pytest.raises(DataError):
            entropy({"p": -1, "q": 3})

    @given(
        st.dictionaries(
            st.sampled_from("abcd"),
            st.integers(min_value=0, max_value=50),
            min_size=1,
        ).filter(lambda d: sum(d.values()) > 0)
    )
    def test_bounds(self, counts):
        k = sum(1 for v in counts.values() if v > 0)
        value = entropy(counts)
        assert -1e-12 <= value <= math.log2(k) + 1e-12


class TestInformationGain:
    @given(decision_tables(), st.data())
    def test_matches_oracle(self, table, data):
        attr = data.draw(st.sampled_from(table.condition_attrs))
        rows = data.draw(
            st.sets(
                st.integers(min_value=0, max_value=table.n_rows - 1), min_size=1
            )
        )
        got = information_gain(table, rows, attr)
        want = max(0.0, oracles.oracle_gain(table, rows, attr))
        assert got == pytest.approx(want, abs=1e-9)
        assert got >= 0.0

    def test_empty_rows_rejected(self, table6):
        with pytest.raises(DataError):
            information_gain(table6, (), "Payload I")

    def test_decision_attr_rejected(self, table6):
        with pytest.raises(DataError):
            information_gain(table6, {0, 1}, "C.F.")


class TestBuildTree:
    def test_pure_table_is_leaf(self):
        table = DecisionTable(("a",), "d", (("x", "p"), ("y", "p")))
        assert build_tree(table) == Leaf("p")

    def test_table6_resubstitution_and_depth(self, table6):
        tree = build_tree(table6)
        assert tree_depth(tree) == 5
        for i in range(table6.n_rows):
            assert tree_classify(tree, table6.row_object(i)) == table6.decision(i)

    def test_root_split_is_payload1(self, table6):
        tree = build_tree(table6)
        assert isinstance(tree, Split)
        assert tree.attribute == "Payload I"

    def test_zero_gain_stops_with_majority_leaf(self):
        # XOR-shaped table: every single attribute has zero gain
        rows = (
            ("x", "x", "consistent"),
            ("x", "y", "inconsistent"),
            ("y", "x", "inconsistent"),
            ("y", "y", "consistent"),
        )
        tree = build_tree(DecisionTable(("a", "b"), "d", rows))
        # 2-2 majority tie resolves to the lexicographically smaller value
        assert tree == Leaf("consistent")

    def test_gain_tie_prefers_earlier_column(self):
        # identical columns => identical gains; the first column wins
        rows = (("x", "x", "p"), ("y", "y", "q"))
        tree = build_tree(DecisionTable(("a1", "a2"), "d", rows))
        assert isinstance(tree, Split)
        assert tree.attribute == "a1"

    def test_branches_sorted_by_value(self, table6):
        tree = build_tree(table6)
        values = list(tree.branches)
        assert values == sorted(values)

    def test_exhausted_attributes_majority_leaf(self):
        # conflicting rows exhaust the only attribute; majority decides
        rows = (("x", "p"), ("x", "p"), ("x", "q"))
        tree = build_tree(DecisionTable(("a",), "d", rows))
        assert tree == Leaf("p")


class TestTreeClassify:
    def test_unseen_value_falls_back_to_node_majority(self):
        rows = (
            ("high", "consistent"),
            ("high", "consistent"),
            ("low", "inconsistent"),
        )
        tree = build_tree(DecisionTable(("a",), "d", rows))
        assert tree_classify(tree, {"a": "moderate"}) == "consistent"

    def test_missing_attribute(self, table6):
        tree = build_tree(table6)
        with pytest.raises(MissingAttributeError, match="Payload I"):
            tree_classify(tree, {"Payload II": "high"})

    @given(decision_tables())
    @settings(max_examples=60, deadline=None)
    def test_predictions_stay_in_training_vocabulary(self, table):
        tree = build_tree(table)
        decisions = {table.decision(i) for i in range(table.n_rows)}
        for i in range(table.n_rows):
            assert tree_classify(tree, table.row_object(i)) in decisions
        assert tree_depth(tree) <= len(table.condition_attrs)


class TestSerialization:
    def test_round_trip_table6(self, table6):
        tree = build_tree(table6)
        assert tree_from_dict(tree_to_dict(tree)) == tree

    def test_leaf_shape(self):
        assert tree_to_dict(Leaf("p")) == {"leaf": "p"}

    @given(decision_tables())
    @settings(max_examples=40, deadline=None)
    def test_round_trip_property(self, table):
        tree = build_tree(table)
        assert tree_from_dict(tree_to_dict(tree)) == tree

    @pytest.mark.parametrize(
        "payload",
        [
            "not a dict",
            {"split": "a"},
            {"split": "a", "branches": {}},
            {"split": "a", "branches": {"x": {"leaf": "p"}}},
            {"branches": {"x": {"leaf": "p"}}, "fallback": "p"},
        ],
    )
    def test_from_dict_structural_errors(self, payload):
        with pytest.raises(DataError):
            tree_from_dict(payload)
