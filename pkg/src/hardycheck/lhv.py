"""Deterministic local strategies and their infeasibility under the Hardy constraints.

A local strategy pre-assigns an outcome to every measurement on both sides,
each side reading only its own setting:

    o_L : {L1, L2} -> {+, -}        o_R : {R1, R2} -> {+, -}

so every one of the four measurements carries a pre-assigned value at once
and the right side cannot see the left choice. There are 2**4 = 16 strategies.
Mixtures reduce to their support for every check here: a zero constraint must
hold in each supported strategy, and a positivity event is realized by a
mixture exactly when some supported strategy realizes it, so scanning the 16
deterministic strategies settles feasibility outright.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .counterfactuals import Constraint, ConstraintSet, CounterfactualInstance, hardy_constraint_set
from .quantum import OUTCOMES, Outcome, Setting, ValidationError

_SLOT = {Setting.L1: 0, Setting.L2: 1, Setting.R1: 2, Setting.R2: 3}


@dataclass(frozen=True)
class LocalStrategy:
    """Outcome pre-assignment, stored as (o_L(L1), o_L(L2), o_R(R1), o_R(R2))."""

    outcomes: tuple[Outcome, Outcome, Outcome, Outcome]

    def __post_init__(self) -> None:
        values = tuple(self.outcomes)
        if len(values) != 4 or not all(isinstance(o, Outcome) for o in values):
            raise ValidationError("a strategy needs exactly 4 Outcome entries")
        object.__setattr__(self, "outcomes", values)

    def left_outcome(self, setting: Setting) -> Outcome:
        if setting.side != "L":
            raise ValidationError(f"expected a left-side choice, got {setting}")
        return self.outcomes[_SLOT[setting]]

    def right_outcome(self, setting: Setting) -> Outcome:
        if setting.side != "R":
            raise ValidationError(f"expected a right-side choice, got {setting}")
        return self.outcomes[_SLOT[setting]]

    @property
    def index(self) -> int:
        rank = 0
        for outcome in self.outcomes:
            rank = (rank << 1) | (outcome is Outcome.MINUS)
        return rank

    def labels(self) -> tuple[str, ...]:
        return tuple(str(o) for o in self.outcomes)

    def __str__(self) -> str:
        return "(" + ", ".join(self.labels()) + ")"

    def as_instance(self) -> CounterfactualInstance:
        """Embed into the counterfactual carrier; the right entries ignore the left choice."""
        l1, l2, r1, r2 = self.outcomes
        return CounterfactualInstance((l1, l2, r1, r2, r1, r2))


@lru_cache(maxsize=1)
def enumerate_strategies() -> tuple[LocalStrategy, ...]:
    """All 16 strategies in lexicographic order ("+" < "-")."""
    return tuple(LocalStrategy(combo) for combo in itertools.product(OUTCOMES, repeat=4))


def strategy_realizes(strategy: LocalStrategy, constraint: Constraint) -> bool:
    left_setting, right_setting = constraint.settings
    return (
        strategy.left_outcome(left_setting) is constraint.outcomes[0]
        and strategy.right_outcome(right_setting) is constraint.outcomes[1]
    )


def strategy_satisfies(strategy: LocalStrategy, constraint_set: ConstraintSet) -> bool:
    """True when the strategy realizes none of the zero events.

    Positivity events are existentials over a set of strategies, so they are
    checked at the set level by :func:`hardy_lhv_feasibility`, not here.
    """
    return not any(strategy_realizes(strategy, zero) for zero in constraint_set.zeros)


@dataclass(frozen=True)
class TraceStep:
    """One constraint-propagation step of the infeasibility deduction."""

    constraint: str
    assignment: str
    kind: str  # "forced" or "contradiction"

    def to_json_dict(self) -> dict[str, object]:
        return {"constraint": self.constraint, "assignment": self.assignment, "kind": self.kind}


@dataclass(frozen=True)
class FeasibilityResult:
    """Witness scan over the 16 strategies, plus a deduction trace when empty.

    ``feasible`` is true exactly when ``witnesses`` is nonempty. For an
    infeasible set, ``assumed`` names the positivity assignments the deduction
    starts from and ``trace`` lists the forced steps up to the contradiction.
    """

    feasible: bool
    witnesses: tuple[LocalStrategy, ...]
    assumed: tuple[str, ...]
    trace: tuple[TraceStep, ...]
    constraint_set: ConstraintSet

    def to_json_dict(self) -> dict[str, object]:
        return {
            "feasible": self.feasible,
            "witness_count": len(self.witnesses),
            "witnesses": [list(w.labels()) for w in self.witnesses],
            "assumed": list(self.assumed),
            "trace": [step.to_json_dict() for step in self.trace],
            "constraint_set": self.constraint_set.to_json_dict(),
        }


def _variable_name(setting: Setting) -> str:
    return f"o_{setting.side}({setting})"


def _deduction_trace(constraint_set: ConstraintSet) -> tuple[tuple[str, ...], tuple[TraceStep, ...]]:
    """Unit propagation seeded by the positivity events, scanning zeros to a fixpoint."""
    assigned: dict[Setting, Outcome] = {}
    assumed: list[str] = []
    steps: list[TraceStep] = []
    for positive in constraint_set.positivity:
        parts = []
        for setting, outcome in zip(positive.settings, positive.outcomes):
            previous = assigned.get(setting)
            if previous is not None and previous is not outcome:
                steps.append(
                    TraceStep(
                        positive.label,
                        f"contradiction: {_variable_name(setting)} already forced to {previous}",
                        "contradiction",
                    )
                )
                return tuple(assumed), tuple(steps)
            assigned[setting] = outcome
            parts.append(f"{_variable_name(setting)} = {outcome}")
        assumed.append(f"{positive.label}: " + ", ".join(parts))
    changed = True
    while changed:
        changed = False
        for zero in constraint_set.zeros:
            left_setting, right_setting = zero.settings
            left_target, right_target = zero.outcomes
            left_now = assigned.get(left_setting)
            right_now = assigned.get(right_setting)
            if left_now is left_target and right_now is right_target:
                steps.append(
                    TraceStep(zero.label, f"contradiction: event {zero.event_text()} realized", "contradiction")
                )
                return tuple(assumed), tuple(steps)
            if left_now is left_target and right_now is None:
                assigned[right_setting] = right_target.opposite
                steps.append(
                    TraceStep(zero.label, f"forces {_variable_name(right_setting)} = {right_target.opposite}", "forced")
                )
                changed = True
            elif right_now is right_target and left_now is None:
                assigned[left_setting] = left_target.opposite
                steps.append(
                    TraceStep(zero.label, f"forces {_variable_name(left_setting)} = {left_target.opposite}", "forced")
                )
                changed = True
    return tuple(assumed), tuple(steps)


def hardy_lhv_feasibility(constraint_set: ConstraintSet | None = None) -> FeasibilityResult:
    """Scan all 16 strategies for one satisfying every zero and realizing every positivity event.

    For the full Hardy set the scan comes back empty and the deduction trace
    closes in three steps: assuming the (L1-, R1+) event, the zero on (L2,R1)
    forces o_L(L2) = -, the zero on (L1,R2) forces o_R(R2) = +, and the zero
    on (L2,R2) is then realized outright. Dropping any single constraint
    reopens feasibility.
    """
    cs = hardy_constraint_set() if constraint_set is None else constraint_set
    witnesses = tuple(
        strategy
        for strategy in enumerate_strategies()
        if strategy_satisfies(strategy, cs) and all(strategy_realizes(strategy, p) for p in cs.positivity)
    )
    if witnesses:
        return FeasibilityResult(True, witnesses, (), (), cs)
    assumed, trace = _deduction_trace(cs)
    return FeasibilityResult(False, (), assumed, trace, cs)
