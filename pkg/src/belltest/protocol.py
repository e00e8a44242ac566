"""Two-question survey designs over classical or quantum-like populations.

Two designs are supported:

* three-ensemble: disjoint branches BA (ask b then a), BC (b then c) and
  CA (c then a), each with ``n_per_branch`` fresh agents;
* two-ensemble: branch S1 asks b first and routes "yes" answerers to
  question a and "no" answerers to question c; branch S2 asks c then a.
  S1 gets 2 * n_per_branch agents so its conditional sub-counts are
  comparable to the three-ensemble branches.

Classical agents carry one predetermined sign triple drawn from a joint
law, so their answers do not depend on question order.  Quantum agents
start unpolarized and collapse after each answer.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence, Union

import numpy as np

from .errors import EmptyConditioningBranch
from .probability import ATOMS, SIGNS, JointDistribution3, Outcome, VariableIndex
from .qubit import TWO_PI, BlochAngle, QuestionTriple
from .streams import counter_uniforms


class Branch(Enum):
    BA = "BA"
    BC = "BC"
    CA = "CA"
    S1 = "S1"
    S2 = "S2"


# Stream ids for the counter-based RNG, one per branch.
_BRANCH_STREAM = {Branch.BA: 1, Branch.BC: 2, Branch.CA: 3, Branch.S1: 4, Branch.S2: 5}

# Draw slots within an agent's stream.
_DRAW_FIRST = 0
_DRAW_SECOND = 1
_DRAW_ANGLE = 2


class DesignVariant(Enum):
    THREE_ENSEMBLE = "three"
    TWO_ENSEMBLE = "two"


@dataclass(frozen=True)
class ProtocolDesign:
    variant: DesignVariant
    n_per_branch: int

    def __post_init__(self):
        if self.n_per_branch < 1:
            raise ValueError("n_per_branch must be at least 1")


@dataclass(frozen=True)
class ClassicalHiddenVariable:
    """Each agent holds one fixed sign triple sampled from the joint law."""

    joint: JointDistribution3


@dataclass(frozen=True)
class QuantumUnpolarized:
    """Unpolarized agents answering projective questions with collapse.

    ``draw_initial_angle`` switches from the fair-coin shortcut to drawing
    each agent's pure angle uniformly; the two paths are statistically
    equivalent for these measurements.
    """

    questions: QuestionTriple
    draw_initial_angle: bool = False


PopulationModel = Union[ClassicalHiddenVariable, QuantumUnpolarized]


@dataclass(frozen=True)
class ResponseRecord:
    respondent_id: str
    branch: Branch
    first_question: VariableIndex
    first_answer: Outcome
    second_question: VariableIndex
    second_answer: Outcome

    def __post_init__(self):
        if self.first_question == self.second_question:
            raise ValueError("an agent is never asked the same question twice")


@dataclass(frozen=True)
class ResponseDataset:
    records: tuple[ResponseRecord, ...]
    metadata: dict = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[ResponseRecord]:
        return iter(self.records)


@dataclass(frozen=True)
class FrequencyTable:
    """Count-ratio estimates of the three conditionals, plus first-answer
    marginal counts per question (numerator, denominator)."""

    nu_a_given_b_plus: tuple[int, int]
    nu_c_given_b_minus: tuple[int, int]
    nu_a_given_c_plus: tuple[int, int]
    first_answer_counts: dict[VariableIndex, tuple[int, int]]

    def __post_init__(self):
        for num, den in (
            self.nu_a_given_b_plus,
            self.nu_c_given_b_minus,
            self.nu_a_given_c_plus,
        ):
            if not (0 <= num <= den):
                raise ValueError(f"invalid counts ({num}, {den})")

    def proportions(self) -> tuple[float, float, float]:
        return (
            self.nu_a_given_b_plus[0] / self.nu_a_given_b_plus[1],
            self.nu_c_given_b_minus[0] / self.nu_c_given_b_minus[1],
            self.nu_a_given_c_plus[0] / self.nu_a_given_c_plus[1],
        )


@dataclass(frozen=True)
class SymmetryEntry:
    question: VariableIndex
    plus_fraction: float
    n_first_asked: int
    flagged: bool


@dataclass(frozen=True)
class SymmetryReport:
    entries: tuple[SymmetryEntry, ...]
    tolerance: float

    @property
    def passed(self) -> bool:
        return not any(e.flagged for e in self.entries)


# --- simulation -------------------------------------------------------------


def _second_prob_quantum(
    first_plus: np.ndarray, q1: float, q2: np.ndarray
) -> np.ndarray:
    # State after the first answer: q1 for "yes", q1 + pi for "no".
    state = np.where(first_plus, q1, q1 + np.pi)
    return np.cos(0.5 * (state - q2)) ** 2


def _simulate_chunk(
    pop: PopulationModel,
    branch: Branch,
    seed: int,
    indices: np.ndarray,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Answers for one index range of one branch.

    Returns (first_answer_plus, second_question_code, second_answer_plus)
    where question codes are VariableIndex values.
    """
    stream = _BRANCH_STREAM[branch]
    u_first = counter_uniforms(seed, stream, indices, _DRAW_FIRST)

    first_q, second_q = _branch_questions(branch)

    if isinstance(pop, ClassicalHiddenVariable):
        cum = np.cumsum(pop.joint.as_array())
        atom = np.searchsorted(cum, u_first, side="right").clip(max=7)
        signs = np.asarray(ATOMS)[atom]  # (n, 3)
        first_plus = signs[:, first_q] > 0
        if branch is Branch.S1:
            second_code = np.where(first_plus, VariableIndex.A, VariableIndex.C)
        else:
            second_code = np.full(indices.shape, second_q, dtype=np.int64)
        second_plus = np.take_along_axis(
            signs, second_code.reshape(-1, 1), axis=1
        ).ravel() > 0
        return first_plus, second_code, second_plus

    q = pop.questions
    angles = {VariableIndex.A: q.a.phi, VariableIndex.B: q.b.phi, VariableIndex.C: q.c.phi}
    if pop.draw_initial_angle:
        phi0 = TWO_PI * counter_uniforms(seed, stream, indices, _DRAW_ANGLE)
        p_first = np.cos(0.5 * (phi0 - angles[first_q])) ** 2
    else:
        p_first = 0.5
    first_plus = u_first < p_first
    if branch is Branch.S1:
        second_code = np.where(first_plus, VariableIndex.A, VariableIndex.C)
    else:
        second_code = np.full(indices.shape, second_q, dtype=np.int64)
    second_angle = np.where(
        second_code == VariableIndex.A,
        angles[VariableIndex.A],
        np.where(second_code == VariableIndex.B, angles[VariableIndex.B], angles[VariableIndex.C]),
    )
    p_second = _second_prob_quantum(first_plus, angles[first_q], second_angle)
    u_second = counter_uniforms(seed, stream, indices, _DRAW_SECOND)
    second_plus = u_second < p_second
    return first_plus, second_code, second_plus


def _branch_questions(branch: Branch) -> tuple[VariableIndex, VariableIndex | None]:
    if branch is Branch.BA:
        return VariableIndex.B, VariableIndex.A
    if branch is Branch.BC:
        return VariableIndex.B, VariableIndex.C
    if branch in (Branch.CA, Branch.S2):
        return VariableIndex.C, VariableIndex.A
    return VariableIndex.B, None  # S1: second question depends on the answer


def _branch_plan(design: ProtocolDesign) -> list[tuple[Branch, int]]:
    n = design.n_per_branch
    if design.variant is DesignVariant.THREE_ENSEMBLE:
        return [(Branch.BA, n), (Branch.BC, n), (Branch.CA, n)]
    return [(Branch.S1, 2 * n), (Branch.S2, n)]


def run_protocol(
    pop: PopulationModel,
    design: ProtocolDesign,
    seed: int,
    workers: int = 1,
) -> ResponseDataset:
    """Simulate the full survey; bit-identical for any worker count."""
    if workers < 1:
        raise ValueError("workers must be at least 1")
    plan = _branch_plan(design)
    total = sum(n for _, n in plan)
    width = len(str(total))

    def branch_arrays(branch: Branch, n: int):
        indices = np.arange(n, dtype=np.uint64)
        if workers == 1 or n < 2 * workers:
            return _simulate_chunk(pop, branch, seed, indices)
        chunks = np.array_split(indices, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(lambda ix: _simulate_chunk(pop, branch, seed, ix), chunks)
            )
        return tuple(np.concatenate([p[k] for p in parts]) for k in range(3))

    records: list[ResponseRecord] = []
    offset = 0
    for branch, n in plan:
        first_plus, second_code, second_plus = branch_arrays(branch, n)
        first_q, _ = _branch_questions(branch)
        for i in range(n):
            records.append(
                ResponseRecord(
                    respondent_id=f"r{offset + i:0{width}d}",
                    branch=branch,
                    first_question=first_q,
                    first_answer=Outcome.PLUS if first_plus[i] else Outcome.MINUS,
                    second_question=VariableIndex(int(second_code[i])),
                    second_answer=Outcome.PLUS if second_plus[i] else Outcome.MINUS,
                )
            )
        offset += n
    metadata = {
        "seed": seed,
        "design": design.variant.value,
        "n_per_branch": design.n_per_branch,
        # S1 holds 2x n_per_branch agents so its routed sub-ensembles are
        # comparable in size to the dedicated branches.
        "s1_size": 2 * design.n_per_branch
        if design.variant is DesignVariant.TWO_ENSEMBLE
        else None,
    }
    return ResponseDataset(records=tuple(records), metadata=metadata)


# --- estimation -------------------------------------------------------------


def estimate_frequencies(data: ResponseDataset) -> FrequencyTable:
    """The count-ratio estimators of the three conditional probabilities."""
    if len(data) == 0:
        raise ValueError("dataset is empty")
    counts = {  # (numerator, denominator) accumulators
        "ab": [0, 0],
        "cb": [0, 0],
        "ac": [0, 0],
    }
    first_counts: dict[VariableIndex, list[int]] = {}
    for rec in data:
        fc = first_counts.setdefault(rec.first_question, [0, 0])
        fc[1] += 1
        if rec.first_answer is Outcome.PLUS:
            fc[0] += 1
        key = None
        if (
            rec.first_question is VariableIndex.B
            and rec.first_answer is Outcome.PLUS
            and rec.second_question is VariableIndex.A
        ):
            key = "ab"
        elif (
            rec.first_question is VariableIndex.B
            and rec.first_answer is Outcome.MINUS
            and rec.second_question is VariableIndex.C
        ):
            key = "cb"
        elif (
            rec.first_question is VariableIndex.C
            and rec.first_answer is Outcome.PLUS
            and rec.second_question is VariableIndex.A
        ):
            key = "ac"
        if key is not None:
            counts[key][1] += 1
            if rec.second_answer is Outcome.PLUS:
                counts[key][0] += 1
    for key, label in (("ab", "a|b+"), ("cb", "c|b-"), ("ac", "a|c+")):
        if counts[key][1] == 0:
            raise EmptyConditioningBranch(
                f"no respondent reached the {label} conditioning event"
            )
    return FrequencyTable(
        nu_a_given_b_plus=tuple(counts["ab"]),
        nu_c_given_b_minus=tuple(counts["cb"]),
        nu_a_given_c_plus=tuple(counts["ac"]),
        first_answer_counts={q: tuple(v) for q, v in sorted(first_counts.items())},
    )


def check_symmetry(data: ResponseDataset, tolerance: float) -> SymmetryReport:
    """Flag questions whose first-answer "yes" fraction strays from 1/2."""
    if len(data) == 0:
        raise ValueError("dataset is empty")
    first_counts: dict[VariableIndex, list[int]] = {}
    for rec in data:
        fc = first_counts.setdefault(rec.first_question, [0, 0])
        fc[1] += 1
        if rec.first_answer is Outcome.PLUS:
            fc[0] += 1
    entries = []
    for q in sorted(first_counts):
        plus, n = first_counts[q]
        fraction = plus / n
        entries.append(
            SymmetryEntry(
                question=q,
                plus_fraction=fraction,
                n_first_asked=n,
                flagged=abs(fraction - 0.5) > tolerance,
            )
        )
    return SymmetryReport(entries=tuple(entries), tolerance=tolerance)


# --- paired hidden-variable sampling ----------------------------------------

Triple = tuple[int, int, int]


def sample_entangled_pairs(
    joint: JointDistribution3, n: int, rng: np.random.Generator
) -> list[tuple[Triple, Triple]]:
    """Draw n sign triples and emit each one twice, mimicking perfectly
    correlated pair preparation."""
    cum = np.cumsum(joint.as_array())
    atoms = np.searchsorted(cum, rng.random(n), side="right").clip(max=7)
    return [(ATOMS[k], ATOMS[k]) for k in atoms]


def check_perfect_correlation(pairs: Sequence[tuple[Triple, Triple]]) -> bool:
    """True iff both members of every pair agree on all three components."""
    return all(left == right for left, right in pairs)
