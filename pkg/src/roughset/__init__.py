"""Rough-set decision analysis over categorical decision tables.

Approximations, reducts, and induced decision rules, with an ID3 baseline,
an avionics consistency case study, an evaluation harness, a CLI, and
sklearn-compatible estimator wrappers.
"""

__version__ = "0.1.0"

from .errors import (
    AttributeLimitError,
    DataError,
    EmptyBodyError,
    InconsistentTableError,
    MissingAttributeError,
    MissingHeaderError,
    RaggedRowError,
    RuleFormatError,
    SchemaMismatchError,
    UnknownAttributeError,
    UnknownDecisionError,
    UnknownLevelError,
)
from .table import (
    DECISIONS,
    LEVELS,
    DecisionTable,
    Level,
    ValidationReport,
    canonicalize_decision,
    canonicalize_level,
    parse_table,
    serialize_table,
    validate,
)
from .analysis import (
    MAX_REDUCT_ATTRS,
    ApproximationReport,
    Partition,
    ReductReport,
    approximation_report,
    dependency_degree,
    find_reducts,
    lower_approx,
    partition,
    positive_region,
    significance,
    upper_approx,
)
from .rules import (
    UNKNOWN,
    Rule,
    RuleAudit,
    RuleAuditEntry,
    RuleSet,
    Verdict,
    attribute_frequency,
    audit_rules,
    classify,
    induce_rules,
    load_rules,
)
from .id3 import (
    Leaf,
    Split,
    TreeNode,
    build_tree,
    entropy,
    information_gain,
    tree_classify,
    tree_depth,
    tree_from_dict,
    tree_to_dict,
)
from .autopilot import (
    DECISION_ATTR,
    FACTOR_NAMES,
    PAYLOAD_ATTRS,
    PAYLOAD_FACTORS,
    PAYLOAD_IDS,
    FaultVector,
    PayloadTable,
    PipelineResult,
    full_pipeline,
    levels_object,
    payload_level,
    payload_tables,
    reference_rules,
    training_fixture,
)
from .evaluate import (
    ID3_APPROACH,
    RULES_APPROACH,
    EvalReport,
    compare,
    comparison_text,
    detection_rate,
    synth_test_set,
)
from .estimators import (
    ID3Classifier,
    ReductFeatureSelector,
    RoughSetRuleClassifier,
)

__all__ = [
    "__version__",
    # errors
    "DataError", "MissingHeaderError", "EmptyBodyError", "RaggedRowError",
    "UnknownLevelError", "UnknownDecisionError", "UnknownAttributeError",
    "InconsistentTableError", "SchemaMismatchError", "RuleFormatError",
    "MissingAttributeError", "AttributeLimitError",
    # tables
    "Level", "LEVELS", "DECISIONS", "DecisionTable", "ValidationReport",
    "canonicalize_level", "canonicalize_decision", "parse_table",
    "serialize_table", "validate",
    # analysis
    "Partition", "ApproximationReport", "ReductReport", "MAX_REDUCT_ATTRS",
    "partition", "lower_approx", "upper_approx", "approximation_report",
    "positive_region", "dependency_degree", "find_reducts", "significance",
    # rules
    "Rule", "RuleSet", "Verdict", "RuleAudit", "RuleAuditEntry", "UNKNOWN",
    "induce_rules", "audit_rules", "classify", "attribute_frequency",
    "load_rules",
    # id3
    "Leaf", "Split", "TreeNode", "entropy", "information_gain", "build_tree",
    "tree_classify", "tree_depth", "tree_to_dict", "tree_from_dict",
    # autopilot case study
    "FaultVector", "PayloadTable", "PipelineResult", "PAYLOAD_IDS",
    "PAYLOAD_ATTRS", "PAYLOAD_FACTORS", "FACTOR_NAMES", "DECISION_ATTR",
    "payload_tables", "payload_level", "training_fixture", "reference_rules",
    "full_pipeline", "levels_object",
    # evaluation
    "EvalReport", "detection_rate", "compare", "synth_test_set",
    "comparison_text", "RULES_APPROACH", "ID3_APPROACH",
    # sklearn wrappers
    "RoughSetRuleClassifier", "ID3Classifier", "ReductFeatureSelector",
]
