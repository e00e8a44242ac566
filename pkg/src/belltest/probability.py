"""Finite classical probability machinery for three dichotomic variables.

The sample space has eight atoms, one per sign triple (s_a, s_b, s_c) with
each sign in {+1, -1}.  Atoms are kept in a fixed canonical order so that
serialized weight vectors are unambiguous:

    (+++, ++-, +-+, +--, -++, -+-, --+, ---)

i.e. index = 4*(s_a < 0) + 2*(s_b < 0) + (s_c < 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .errors import ZeroConditioningEvent

NORMALIZATION_TOL = 1e-12


class Outcome(IntEnum):
    """A dichotomic answer: yes = +1, no = -1."""

    PLUS = +1
    MINUS = -1

    @classmethod
    def from_sign(cls, value: int) -> "Outcome":
        if value == 1:
            return cls.PLUS
        if value == -1:
            return cls.MINUS
        raise ValueError(f"outcome must be +1 or -1, got {value!r}")

    @classmethod
    def from_token(cls, token: str) -> "Outcome":
        # Parse boundary: only the two explicit-sign spellings are accepted.
        if token == "+1":
            return cls.PLUS
        if token == "-1":
            return cls.MINUS
        raise ValueError(f"outcome token must be '+1' or '-1', got {token!r}")

    def token(self) -> str:
        return "+1" if self is Outcome.PLUS else "-1"


class VariableIndex(IntEnum):
    """Which of the three questions a value refers to; ordered A < B < C."""

    A = 0
    B = 1
    C = 2

    @classmethod
    def from_token(cls, token: str) -> "VariableIndex":
        try:
            return cls[token.upper()]
        except KeyError:
            raise ValueError(f"question token must be a/b/c, got {token!r}") from None

    def token(self) -> str:
        return self.name.lower()


#: Canonical atom order, sign triples (s_a, s_b, s_c).
ATOMS: tuple[tuple[int, int, int], ...] = tuple(
    (1 - 2 * (k >> 2 & 1), 1 - 2 * (k >> 1 & 1), 1 - 2 * (k & 1)) for k in range(8)
)

#: SIGNS[v][k] = sign of variable v in atom k.
SIGNS: tuple[tuple[int, ...], ...] = tuple(
    tuple(ATOMS[k][v] for k in range(8)) for v in range(3)
)


@dataclass(frozen=True)
class JointDistribution3:
    """A probability law on the 8 sign triples, in canonical atom order.

    Weights must be non-negative and sum to 1 within ``NORMALIZATION_TOL``;
    the constructor renormalizes exactly so downstream arithmetic can assume
    a unit total.
    """

    weights: tuple[float, ...]

    def __post_init__(self):
        if len(self.weights) != 8:
            raise ValueError(f"expected 8 atom weights, got {len(self.weights)}")
        w = [float(x) for x in self.weights]
        for k, x in enumerate(w):
            if not math.isfinite(x) or x < 0.0:
                raise ValueError(f"atom {k} has invalid weight {x!r}")
        total = math.fsum(w)
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValueError(f"weights sum to {total!r}, not 1 within {NORMALIZATION_TOL}")
        object.__setattr__(self, "weights", tuple(x / total for x in w))

    @classmethod
    def uniform(cls) -> "JointDistribution3":
        return cls((0.125,) * 8)

    @classmethod
    def point_mass(cls, triple: tuple[int, int, int]) -> "JointDistribution3":
        w = [0.0] * 8
        w[atom_index(triple)] = 1.0
        return cls(tuple(w))

    @classmethod
    def from_atoms(cls, atoms: dict[tuple[int, int, int], float]) -> "JointDistribution3":
        w = [0.0] * 8
        for triple, weight in atoms.items():
            w[atom_index(triple)] = float(weight)
        return cls(tuple(w))

    def atom(self, triple: tuple[int, int, int]) -> float:
        return self.weights[atom_index(triple)]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)


def atom_index(triple: tuple[int, int, int]) -> int:
    sa, sb, sc = triple
    for s in (sa, sb, sc):
        if s not in (1, -1):
            raise ValueError(f"atom signs must be +1/-1, got {triple!r}")
    return 4 * (sa < 0) + 2 * (sb < 0) + (sc < 0)


def covariance(joint: JointDistribution3, i: VariableIndex, j: VariableIndex) -> float:
    """E[xi_i * xi_j] over the 8 atoms; always in [-1, 1]."""
    si, sj, w = SIGNS[i], SIGNS[j], joint.weights
    return math.fsum(si[k] * sj[k] * w[k] for k in range(8))


def marginal_plus(joint: JointDistribution3, i: VariableIndex) -> float:
    """P(xi_i = +1)."""
    si, w = SIGNS[i], joint.weights
    return math.fsum(w[k] for k in range(8) if si[k] > 0)


def joint_plus_pair(
    joint: JointDistribution3,
    first: tuple[VariableIndex, Outcome],
    second: tuple[VariableIndex, Outcome],
) -> float:
    """P(xi_i = s_i and xi_j = s_j) for two distinct variables."""
    (i, oi), (j, oj) = first, second
    si, sj, w = SIGNS[i], SIGNS[j], joint.weights
    return math.fsum(w[k] for k in range(8) if si[k] == int(oi) and sj[k] == int(oj))


def conditional(
    joint: JointDistribution3,
    target: tuple[VariableIndex, Outcome],
    given: tuple[VariableIndex, Outcome],
) -> float:
    """P(target | given); raises ZeroConditioningEvent when P(given) = 0."""
    j, oj = given
    p_given = math.fsum(
        w for k, w in enumerate(joint.weights) if SIGNS[j][k] == int(oj)
    )
    if p_given == 0.0:
        raise ZeroConditioningEvent(
            f"P(xi_{j.token()} = {int(oj):+d}) = 0; conditional undefined"
        )
    p_both = joint_plus_pair(joint, target, given)
    return min(p_both / p_given, 1.0)


def random_joint(rng: np.random.Generator, concentration: float = 1.0) -> JointDistribution3:
    """Sample a joint law from a symmetric Dirichlet over the 8 atoms.

    concentration = 1 is uniform on the simplex; larger values concentrate
    near the uniform law.  Deterministic given the generator state.
    """
    if not concentration > 0.0:
        raise ValueError(f"concentration must be positive, got {concentration!r}")
    w = rng.dirichlet(np.full(8, concentration))
    return JointDistribution3(tuple(w))


def symmetrize(joint: JointDistribution3) -> JointDistribution3:
    """Average the law with its global sign flip.

    The flip maps atom k to atom 7-k, so the result is invariant under
    negating all three variables and every marginal is exactly 1/2.
    """
    w = joint.weights
    return JointDistribution3(tuple(0.5 * (w[k] + w[7 - k]) for k in range(8)))
