"""Verification toolkit for Hardy-type two-qubit nonlocality.

Four layers: Born-rule quantum predictions for an angle-parametrized
configuration family (three zero-probability joint events plus one strictly
positive one), exhaustive counterfactual machine checks of the statement SR
at both left contexts, deterministic local-strategy feasibility, and scalar
maximization of the paradox probability. A CLI exposes each layer as a
reproducible report.
"""

from __future__ import annotations

from .counterfactuals import (
    ALL_LEFT_EVENTS,
    DEFAULT_REQUIRED_LEFT_EVENTS,
    INSTANCE_FIELDS,
    AdmissibilityReport,
    Constraint,
    ConstraintSet,
    CounterfactualInstance,
    Ensemble,
    LocalityReport,
    Property1Report,
    Property2Report,
    SRVerdict,
    check_property1,
    check_property2,
    ensemble_admissible,
    enumerate_instances,
    evaluate_sr,
    hardy_constraint_set,
    locality_violation_report,
    realizes,
    satisfies_zeros,
)
from .hardy import (
    NO_SIGNALLING_TOL,
    OUTCOME_PAIRS,
    SETTING_PAIRS,
    ZERO_TOL,
    HardyConfiguration,
    JointProbabilityTable,
    NoSignallingReport,
    PredictionReport,
    build_hardy_configuration,
    from_hardy_notation,
    joint_probability_table,
    no_signalling_check,
    to_hardy_notation,
    verify_hardy_predictions,
)
from .lhv import (
    FeasibilityResult,
    LocalStrategy,
    TraceStep,
    enumerate_strategies,
    hardy_lhv_feasibility,
    strategy_realizes,
    strategy_satisfies,
)
from .optimize import (
    DEFAULT_BRACKET,
    ConvergenceError,
    FiniteDifferenceEstimate,
    ObjectiveReport,
    finite_difference_scan,
    maximize_paradox,
    paradox_probability,
    reference_curve,
    reference_grid_maximum,
)
from .quantum import (
    IDENTITY_TOL,
    INPUT_TOL,
    LEFT_SETTINGS,
    OUTCOMES,
    RIGHT_SETTINGS,
    BasisReport,
    MeasurementBasis,
    Outcome,
    Qubit2Vector,
    Setting,
    StateVector,
    ValidationError,
    born_joint_probability,
    inner_product,
    tensor_product,
    validate_basis,
)
from .render import UsageError, render_report, to_json_text

__version__ = "0.1.0"

__all__ = [
    "ALL_LEFT_EVENTS",
    "DEFAULT_BRACKET",
    "DEFAULT_REQUIRED_LEFT_EVENTS",
    "IDENTITY_TOL",
    "INPUT_TOL",
    "INSTANCE_FIELDS",
    "LEFT_SETTINGS",
    "NO_SIGNALLING_TOL",
    "OUTCOMES",
    "OUTCOME_PAIRS",
    "RIGHT_SETTINGS",
    "SETTING_PAIRS",
    "ZERO_TOL",
    "AdmissibilityReport",
    "BasisReport",
    "Constraint",
    "ConstraintSet",
    "ConvergenceError",
    "CounterfactualInstance",
    "Ensemble",
    "FeasibilityResult",
    "FiniteDifferenceEstimate",
    "HardyConfiguration",
    "JointProbabilityTable",
    "LocalStrategy",
    "LocalityReport",
    "MeasurementBasis",
    "NoSignallingReport",
    "ObjectiveReport",
    "Outcome",
    "PredictionReport",
    "Property1Report",
    "Property2Report",
    "Qubit2Vector",
    "SRVerdict",
    "Setting",
    "StateVector",
    "TraceStep",
    "UsageError",
    "ValidationError",
    "born_joint_probability",
    "build_hardy_configuration",
    "check_property1",
    "check_property2",
    "ensemble_admissible",
    "enumerate_instances",
    "enumerate_strategies",
    "evaluate_sr",
    "finite_difference_scan",
    "from_hardy_notation",
    "hardy_constraint_set",
    "hardy_lhv_feasibility",
    "inner_product",
    "joint_probability_table",
    "locality_violation_report",
    "maximize_paradox",
    "no_signalling_check",
    "paradox_probability",
    "realizes",
    "reference_curve",
    "reference_grid_maximum",
    "render_report",
    "satisfies_zeros",
    "strategy_realizes",
    "strategy_satisfies",
    "tensor_product",
    "to_hardy_notation",
    "to_json_text",
    "validate_basis",
    "verify_hardy_predictions",
]
