"""Estimator wrappers so the analysis core drops into sklearn pipelines.

These accept any categorical string data, not just the bundled avionics
vocabulary; values are compared by exact string equality.
"""

from __future__ import annotations

from collections import Counter
from typing import Optional, Sequence

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .analysis import find_reducts
from .id3 import build_tree, tree_classify
from .rules import UNKNOWN, Verdict, classify, induce_rules
from .table import DecisionTable


def _resolve_feature_names(X, explicit: Optional[Sequence[str]], n_cols: int):
    if explicit is not None:
        names = tuple(str(name) for name in explicit)
        if len(names) != n_cols:
            raise ValueError(
                f"feature_names has {len(names)} entries for {n_cols} columns"
            )
        return names
    if hasattr(X, "columns"):
        return tuple(str(c) for c in X.columns)
    return tuple(f"x{i}" for i in range(n_cols))


def _build_table(X_arr, y_arr, names) -> tuple[DecisionTable, str]:
    decision_attr = "decision"
    while decision_attr in names:
        decision_attr += "_"
    rows = tuple(
        tuple(str(v) for v in row) + (str(label),)
        for row, label in zip(X_arr, y_arr)
    )
    return DecisionTable(tuple(names), decision_attr, rows), decision_attr


def _majority(y_arr) -> str:
    counts = Counter(str(v) for v in y_arr)
    return min(counts, key=lambda v: (-counts[v], v))


class RoughSetRuleClassifier(ClassifierMixin, BaseEstimator):
    """Classify by voting among induced certain rules.

    Parameters
    ----------
    feature_names : sequence of str, optional
        Column names for the rule antecedents.  Defaults to DataFrame
        columns when present, else x0..x{n-1}.
    fallback : {"majority", "unknown"}
        What predict() emits when no rule fires or the vote ties:
        the training majority class, or the literal string "unknown".
    """

    def __init__(self, feature_names: Optional[Sequence[str]] = None,
                 fallback: str = "majority"):
        self.feature_names = feature_names
        self.fallback = fallback

    def fit(self, X, y):
        if self.fallback not in ("majority", "unknown"):
            raise ValueError(
                f"fallback must be 'majority' or 'unknown', got {self.fallback!r}"
            )
        names = _resolve_feature_names(X, self.feature_names, np.shape(X)[1])
        X_arr, y_arr = check_X_y(X, y, dtype=None)
        table, decision_attr = _build_table(X_arr, y_arr, names)
        self.condition_attrs_ = names
        self.decision_attr_ = decision_attr
        self.rules_ = induce_rules(table)
        self.classes_ = np.unique(np.asarray(y_arr, dtype=object))
        self.majority_ = _majority(y_arr)
        self.n_features_in_ = len(names)
        return self

    def _check_predict_input(self, X):
        check_is_fitted(self, "rules_")
        X_arr = check_array(X, dtype=None)
        if X_arr.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X_arr.shape[1]} features, expected {self.n_features_in_}"
            )
        return X_arr

    def predict_verdicts(self, X) -> list[Verdict]:
        """Full verdict objects, including matched rules and alert flags."""
        X_arr = self._check_predict_input(X)
        return [
            classify(self.rules_, dict(zip(self.condition_attrs_,
                                           (str(v) for v in row))))
            for row in X_arr
        ]

    def predict(self, X):
        verdicts = self.predict_verdicts(X)
        out = []
        for verdict in verdicts:
            if verdict.decision == UNKNOWN and self.fallback == "majority":
                out.append(self.majority_)
            else:
                out.append(verdict.decision)
        return np.asarray(out, dtype=object)


class ID3Classifier(ClassifierMixin, BaseEstimator):
    """Plain ID3 over categorical string features, no pruning."""

    def __init__(self, feature_names: Optional[Sequence[str]] = None):
        self.feature_names = feature_names

    def fit(self, X, y):
        names = _resolve_feature_names(X, self.feature_names, np.shape(X)[1])
        X_arr, y_arr = check_X_y(X, y, dtype=None)
        table, decision_attr = _build_table(X_arr, y_arr, names)
        self.condition_attrs_ = names
        self.decision_attr_ = decision_attr
        self.tree_ = build_tree(table)
        self.classes_ = np.unique(np.asarray(y_arr, dtype=object))
        self.n_features_in_ = len(names)
        return self

    def predict(self, X):
        check_is_fitted(self, "tree_")
        X_arr = check_array(X, dtype=None)
        if X_arr.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X_arr.shape[1]} features, expected {self.n_features_in_}"
            )
        out = [
            tree_classify(self.tree_, dict(zip(self.condition_attrs_,
                                               (str(v) for v in row))))
            for row in X_arr
        ]
        return np.asarray(out, dtype=object)


class ReductFeatureSelector(TransformerMixin, BaseEstimator):
    """Keep only the columns of the first (smallest) reduct.

    Reducts are minimal attribute subsets preserving the dependency degree
    of the full table; ties are broken by attribute-name order, so the
    selection is deterministic.
    """

    def __init__(self, feature_names: Optional[Sequence[str]] = None):
        self.feature_names = feature_names

    def fit(self, X, y):
        names = _resolve_feature_names(X, self.feature_names, np.shape(X)[1])
        X_arr, y_arr = check_X_y(X, y, dtype=None)
        table, _ = _build_table(X_arr, y_arr, names)
        report = find_reducts(table)
        self.condition_attrs_ = names
        self.reducts_ = tuple(tuple(r) for r in report.reducts)
        self.core_ = tuple(report.core)
        self.gamma_ = report.baseline_gamma
        chosen = set(self.reducts_[0]) if self.reducts_ else set(names)
        self.support_ = np.asarray([name in chosen for name in names], dtype=bool)
        self.n_features_in_ = len(names)
        return self

    def get_support(self, indices: bool = False):
        check_is_fitted(self, "support_")
        if indices:
            return np.flatnonzero(self.support_)
        return self.support_.copy()

    def transform(self, X):
        check_is_fitted(self, "support_")
        X_arr = check_array(X, dtype=None)
        if X_arr.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X_arr.shape[1]} features, expected {self.n_features_in_}"
            )
        return X_arr[:, self.support_]

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "support_")
        if input_features is None:
            names = self.condition_attrs_
        else:
            names = tuple(str(n) for n in input_features)
            if len(names) != self.n_features_in_:
                raise ValueError(
                    f"input_features has {len(names)} entries, "
                    f"expected {self.n_features_in_}"
                )
        return np.asarray(
            [n for n, keep in zip(names, self.support_) if keep], dtype=object
        )

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y).transform(X)
