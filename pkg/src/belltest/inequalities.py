"""Classical-bound checks for three dichotomic variables.

Three forms are evaluated, all with the convention that ``margin`` is the
slack of the bound: non-negative for every single classical law, and
negative exactly when the bound is violated.

* covariance form:   |<ab> - <cb>|  <=  1 - <ac>
* joint form:        P(a+, b+) + P(b-, c+)  >=  P(a+, c+)
* conditional form:  P(a+|b+) + P(c+|b-)  >=  P(a+|c+)
                     (requires each marginal to be fair)

The interference coefficient quantifies the departure of an observed
probability from the additive rule p = p1 + p2, normalized so that a
classical mixture gives 0 and any value with magnitude <= 1 can be written
as a cosine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateAlternatives
from .probability import (
    JointDistribution3,
    Outcome,
    VariableIndex,
    covariance,
    joint_plus_pair,
)

DEFAULT_TOLERANCE = 1e-9


class InequalityKind(Enum):
    BELL_COVARIANCE = "BellCovariance"
    WIGNER_JOINT = "WignerJoint"
    WIGNER_CONDITIONAL = "WignerConditional"


@dataclass(frozen=True)
class InequalityReport:
    kind: InequalityKind
    lhs_terms: tuple[float, ...]
    rhs: float
    margin: float
    violated: bool
    tolerance: float


@dataclass(frozen=True)
class CondTriple:
    """The three conditional probabilities entering the conditional form."""

    p_a_given_b_plus: float
    p_c_given_b_minus: float
    p_a_given_c_plus: float

    def __post_init__(self):
        for name, p in (
            ("p_a_given_b_plus", self.p_a_given_b_plus),
            ("p_c_given_b_minus", self.p_c_given_b_minus),
            ("p_a_given_c_plus", self.p_a_given_c_plus),
        ):
            if not (math.isfinite(p) and 0.0 <= p <= 1.0):
                raise ValueError(f"{name} must be in [0, 1], got {p!r}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.p_a_given_b_plus, self.p_c_given_b_minus, self.p_a_given_c_plus)


class InterferenceRegime(Enum):
    CLASSICAL = "Classical"
    TRIGONOMETRIC = "Trigonometric"
    HYPERBOLIC = "Hyperbolic"


@dataclass(frozen=True)
class InterferenceResult:
    coefficient: float
    regime: InterferenceRegime


def bell_covariance_check(
    joint: JointDistribution3, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """Covariance-form check; margin = (1 - <ac>) - |<ab> - <cb>|."""
    if tolerance < 0.0:
        raise ValueError("tolerance must be non-negative")
    cov_ab = covariance(joint, VariableIndex.A, VariableIndex.B)
    cov_cb = covariance(joint, VariableIndex.C, VariableIndex.B)
    cov_ac = covariance(joint, VariableIndex.A, VariableIndex.C)
    rhs = 1.0 - cov_ac
    margin = rhs - abs(cov_ab - cov_cb)
    return InequalityReport(
        kind=InequalityKind.BELL_COVARIANCE,
        lhs_terms=(cov_ab, cov_cb),
        rhs=rhs,
        margin=margin,
        violated=margin < -tolerance,
        tolerance=tolerance,
    )


def wigner_joint_check(
    joint: JointDistribution3, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """Joint-probability form; margin = P(a+,b+) + P(b-,c+) - P(a+,c+).

    For any 8-atom law this margin equals w(++-) + w(--+) identically.
    """
    p_ab = joint_plus_pair(
        joint, (VariableIndex.A, Outcome.PLUS), (VariableIndex.B, Outcome.PLUS)
    )
    p_bc = joint_plus_pair(
        joint, (VariableIndex.B, Outcome.MINUS), (VariableIndex.C, Outcome.PLUS)
    )
    p_ac = joint_plus_pair(
        joint, (VariableIndex.A, Outcome.PLUS), (VariableIndex.C, Outcome.PLUS)
    )
    margin = math.fsum((p_ab, p_bc, -p_ac))
    return InequalityReport(
        kind=InequalityKind.WIGNER_JOINT,
        lhs_terms=(p_ab, p_bc),
        rhs=p_ac,
        margin=margin,
        violated=margin < -tolerance,
        tolerance=tolerance,
    )


def wigner_conditional_check(
    triple: CondTriple, tolerance: float = DEFAULT_TOLERANCE
) -> InequalityReport:
    """Conditional-probability form; margin = p(a+|b+) + p(c+|b-) - p(a+|c+)."""
    p1, p2, p3 = triple.as_tuple()
    margin = p1 + p2 - p3
    return InequalityReport(
        kind=InequalityKind.WIGNER_CONDITIONAL,
        lhs_terms=(p1, p2),
        rhs=p3,
        margin=margin,
        violated=margin < -tolerance,
        tolerance=tolerance,
    )


def interference_coefficient(
    p: float, p1: float, p2: float, tolerance: float = DEFAULT_TOLERANCE
) -> InterferenceResult:
    """Normalized interference term (p - p1 - p2) / (2 sqrt(p1 p2)).

    |coefficient| <= 1 can be realized as cos(theta) (trigonometric regime);
    larger magnitudes fall outside that parameterization (hyperbolic).
    """
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"p must be in [0, 1], got {p!r}")
    if p1 <= 0.0 or p2 <= 0.0:
        raise DegenerateAlternatives(
            f"alternative probabilities must be positive, got p1={p1!r}, p2={p2!r}"
        )
    coefficient = (p - p1 - p2) / (2.0 * math.sqrt(p1 * p2))
    if abs(coefficient) <= tolerance:
        regime = InterferenceRegime.CLASSICAL
    elif abs(coefficient) <= 1.0 + tolerance:
        regime = InterferenceRegime.TRIGONOMETRIC
    else:
        regime = InterferenceRegime.HYPERBOLIC
    return InterferenceResult(coefficient=coefficient, regime=regime)
