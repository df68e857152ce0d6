from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from roughset import (
    AttributeLimitError,
    DataError,
    DecisionTable,
    UnknownAttributeError,
    approximation_report,
    dependency_degree,
    find_reducts,
    lower_approx,
    partition,
    positive_region,
    significance,
    upper_approx,
    validate,
)
from strategies import decision_tables

tables_and_targets = st.tuples(decision_tables(), st.data())


def draw_attr_subset(data, table, allow_empty=True):
    min_size = 0 if allow_empty else 1
    subset = data.draw(
        st.lists(
            st.sampled_from(table.condition_attrs),
            min_size=min_size,
            max_size=len(table.condition_attrs),
        )
    )
    return tuple(subset)


def draw_target(data, table):
    rows = data.draw(
        st.sets(st.integers(min_value=0, max_value=table.n_rows - 1))
    )
    return frozenset(rows)


class TestPartition:
    @given(decision_tables(), st.data())
    def test_matches_oracle(self, table, data):
        attrs = draw_attr_subset(data, table)
        part = partition(table, attrs)
        assert set(part.blocks) == oracles.oracle_blocks(table, attrs)

    @given(decision_tables(), st.data())
    def test_blocks_partition_universe(self, table, data):
        attrs = draw_attr_subset(data, table)
        part = partition(table, attrs)
        seen = set()
        for block in part.blocks:
            assert block, "no empty blocks"
            assert not (block & seen), "blocks are disjoint"
            seen |= block
        assert seen == set(range(table.n_rows))

    @given(decision_tables(), st.data())
    def test_blocks_ordered_by_smallest_member(self, table, data):
        attrs = draw_attr_subset(data, table)
        mins = [min(block) for block in partition(table, attrs).blocks]
        assert mins == sorted(mins)

    def test_empty_attrs_single_block(self):
        table = DecisionTable(("a",), "d", (("x", "p"), ("y", "q")))
        part = partition(table, ())
        assert part.blocks == (frozenset({0, 1}),)

    def test_decision_attr_allowed(self):
        table = DecisionTable(("a",), "d", (("x", "p"), ("x", "q")))
        part = partition(table, ("a", "d"))
        assert len(part.blocks) == 2

    def test_block_of(self, table6):
        part = partition(table6, ("Payload I",))
        assert part.block_of(1) == frozenset({1, 6, 16})
        with pytest.raises(KeyError):
            part.block_of(99)

    def test_to_dict_is_one_based(self):
        table = DecisionTable(("a",), "d", (("x", "p"), ("y", "q")))
        assert partition(table, ("a",)).to_dict() == {
            "attrs": ["a"],
            "blocks": [[1], [2]],
        }


class TestApproximations:
    @given(decision_tables(), st.data())
    def test_lower_upper_match_oracle(self, table, data):
        attrs = draw_attr_subset(data, table)
        target = draw_target(data, table)
        assert lower_approx(table, attrs, target) == oracles.oracle_lower(
            table, attrs, target
        )
        assert upper_approx(table, attrs, target) == oracles.oracle_upper(
            table, attrs, target
        )

    @given(decision_tables(), st.data())
    def test_report_invariants(self, table, data):
        attrs = draw_attr_subset(data, table)
        target = draw_target(data, table)
        report = approximation_report(table, attrs, target)
        assert report.lower <= target <= report.upper
        assert report.boundary == report.upper - report.lower
        assert report.is_crisp == (not report.boundary)
        if report.upper:
            assert report.accuracy == Fraction(len(report.lower), len(report.upper))
        else:
            assert report.accuracy == 1
        assert 0 <= report.accuracy <= 1

    def test_target_out_of_range(self, table6):
        with pytest.raises(DataError, match="out of range"):
            lower_approx(table6, ("Payload I",), {0, 30})

    def test_unknown_attr(self, table6):
        with pytest.raises(UnknownAttributeError):
            upper_approx(table6, ("Payload IX",), {0})

    def test_report_to_dict(self):
        table = DecisionTable(("a",), "d", (("x", "p"), ("x", "q"), ("y", "p")))
        report = approximation_report(table, ("a",), {0, 2})
        assert report.to_dict() == {
            "attrs": ["a"],
            "target": [1, 3],
            "lower": [3],
            "upper": [1, 2, 3],
            "boundary": [1, 2],
            "accuracy": {"num": 1, "den": 3, "decimal": str(1 / 3)},
            "is_crisp": False,
        }


class TestDependency:
    @given(decision_tables(), st.data())
    def test_positive_region_matches_oracle(self, table, data):
        attrs = draw_attr_subset(data, table)
        assert positive_region(table, attrs) == oracles.oracle_positive_region(
            table, attrs
        )
        assert dependency_degree(table, attrs) == oracles.oracle_gamma(
            table, attrs
        )

    @given(decision_tables(), st.data())
    def test_gamma_monotone_in_attrs(self, table, data):
        small = draw_attr_subset(data, table)
        extra = draw_attr_subset(data, table)
        large = tuple(dict.fromkeys(small + extra))
        assert dependency_degree(table, small) <= dependency_degree(table, large)

    @given(decision_tables())
    def test_gamma_one_iff_consistent(self, table):
        gamma = dependency_degree(table, table.condition_attrs)
        assert (gamma == 1) == validate(table).is_consistent

    def test_rejects_decision_attr(self, table6):
        with pytest.raises(UnknownAttributeError):
            dependency_degree(table6, ("C.F.",))

    def test_empty_attrs(self, table6):
        # one block holding both classes: nothing is certain
        assert dependency_degree(table6, ()) == 0


class TestReducts:
    @given(decision_tables(max_rows=8, max_attrs=4))
    @settings(max_examples=60, deadline=None)
    def test_matches_powerset_oracle(self, table):
        report = find_reducts(table)
        assert list(report.reducts) == oracles.oracle_reducts(table)
        # core is the intersection of the reducts
        names = set(table.condition_attrs)
        for red in report.reducts:
            names &= set(red)
        assert set(report.core) == names
        assert report.baseline_gamma == dependency_degree(
            table, table.condition_attrs
        )

    def test_attr_limit(self):
        attrs = tuple(f"a{k}" for k in range(21))
        row = tuple("x" for _ in range(22))
        table = DecisionTable(attrs, "d", (row,))
        with pytest.raises(AttributeLimitError):
            find_reducts(table)

    def test_reduct_attrs_in_column_order(self):
        # b alone decides; a is noise listed first
        table = DecisionTable(
            ("a", "b"),
            "d",
            (("x", "u", "p"), ("y", "u", "p"), ("x", "w", "q")),
        )
        report = find_reducts(table)
        assert report.reducts == (("b",),)
        assert report.core == ("b",)


class TestSignificance:
    def test_definition(self, table6):
        full = dependency_degree(table6, table6.condition_attrs)
        for attr in table6.condition_attrs:
            rest = tuple(a for a in table6.condition_attrs if a != attr)
            assert significance(table6, attr) == full - dependency_degree(
                table6, rest
            )

    def test_unknown_attr(self, table6):
        with pytest.raises(UnknownAttributeError):
            significance(table6, "Payload X")


class TestTable6Frozen:
    """Values computed once via the oracles, then pinned."""

    def test_gamma(self, table6):
        assert dependency_degree(table6, table6.condition_attrs) == 1
        assert dependency_degree(table6, ("Payload I",)) == Fraction(9, 30)

    def test_single_reduct_is_everything(self, table6):
        report = find_reducts(table6)
        assert report.reducts == (
            (
                "Payload I",
                "Payload II",
                "Payload III",
                "Payload IV",
                "Payload V",
            ),
        )
        assert report.core == report.reducts[0]
        assert report.baseline_gamma == 1

    def test_significance_values(self, table6):
        expected = {
            "Payload I": Fraction(7, 30),
            "Payload II": Fraction(4, 30),
            "Payload III": Fraction(5, 30),
            "Payload IV": Fraction(2, 30),
            "Payload V": Fraction(7, 30),
        }
        actual = {a: significance(table6, a) for a in table6.condition_attrs}
        assert actual == expected

    def test_payload1_partition(self, table6):
        part = partition(table6, ("Payload I",))
        assert [sorted(b) for b in part.blocks] == [
            [0, 2, 3, 4, 7, 8, 9, 11, 12, 13, 14, 18, 19, 20, 21, 22, 23, 25, 26, 27, 28],
            [1, 6, 16],
            [5, 15, 17],
            [10, 24, 29],
        ]
