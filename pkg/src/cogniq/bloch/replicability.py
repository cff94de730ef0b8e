"""Simulate participants answering a sequence of the two questions.

Every participant carries their own particle. Answering a question breaks its
membrane and sends the particle to a vertex; the next question is then asked
from a coordinate :math:`\\pm 1` (same question) or :math:`\\pm\\gamma`
(other question). Two policies are available:

- ``"memoryless"``: every answer is drawn from the membrane of the question;
- ``"memory"``: once a participant answered a question, its membrane is
  replaced, for this participant, by a :class:`.CertainMembrane` giving the
  previous answer. This is response replicability.

"""

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from cogniq.bloch.membrane_model import MembraneTwoQuestionModel
from cogniq.bloch.membranes import CertainMembrane
from cogniq.constants import DEFAULT_SEED
from cogniq.core.errors import ContractViolation
from cogniq.core.random_models import spawn_generators

POLICIES_T = Literal["memory", "memoryless"]
#: Number of participants simulated with the same generator.
CHUNK_SIZE = 10_000


@dataclass(frozen=True)
class ReplicabilityStats:
    """Outcome statistics of a simulated sequence of questions.

    Parameters
    ----------
    sequence : tuple[str, ...]
        Questions, in the order they are asked.
    policy : {"memory", "memoryless"}
        Policy of the simulation.
    participants : int
        Number of simulated participants.
    yes_frequencies : tuple[float, ...]
        Frequency of ``yes`` at every position of the sequence.
    agreement : dict[str, float]
        For every question asked again, frequency of the repeated answer
        being equal to the first answer to this question. Keys look like
        ``"G@2 == G@0"``.
    patterns : dict[str, int]
        Number of participants per answer pattern, e.g. ``"yny"``.

    """

    sequence: tuple[str, ...]
    policy: POLICIES_T
    participants: int
    yes_frequencies: tuple[float, ...]
    agreement: dict[str, float] = field(default_factory=dict)
    patterns: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict[str, object]:
        """Convert to a JSON-serializable dictionary."""
        return {
            "sequence": list(self.sequence),
            "policy": self.policy,
            "participants": self.participants,
            "yes_frequencies": list(self.yes_frequencies),
            "agreement": dict(self.agreement),
            "patterns": dict(sorted(self.patterns.items())),
        }


def _simulate_chunk(
    model: MembraneTwoQuestionModel,
    sequence: Sequence[str],
    size: int,
    policy: POLICIES_T,
    rng: np.random.Generator,
) -> np.ndarray:
    """Give the answers of ``size`` participants, one column per question."""
    answers = np.zeros((size, len(sequence)), dtype=bool)
    last_question: str | None = None
    last_vertex = np.zeros(size)
    first_answer_at: dict[str, int] = {}

    for position, question in enumerate(sequence):
        if last_question is None:
            coordinates = np.full(size, model.coordinate(question))
        elif last_question == question:
            coordinates = last_vertex
        else:
            coordinates = model.gamma * last_vertex

        break_points = model.membrane(question).sample_break_points(size, rng)
        if policy == "memory" and question in first_answer_at:
            previous = answers[:, first_answer_at[question]]
            for outcome in (True, False):
                mask = previous == outcome
                break_points[mask] = CertainMembrane(
                    outcome
                ).sample_break_points(int(mask.sum()), rng)

        answers[:, position] = break_points <= coordinates
        last_vertex = np.where(answers[:, position], 1.0, -1.0)
        last_question = question
        first_answer_at.setdefault(question, position)
    return answers


def simulate_replicability(
    model: MembraneTwoQuestionModel,
    sequence: Sequence[str] = ("G", "C", "G"),
    participants: int = 10_000,
    policy: POLICIES_T = "memory",
    seed: int = DEFAULT_SEED,
) -> ReplicabilityStats:
    """Simulate ``participants`` answering ``sequence``.

    Participants are simulated chunk by chunk, each chunk with its own
    generator spawned from ``seed``.

    Parameters
    ----------
    model : MembraneTwoQuestionModel
        Initial state, geometry and membranes.
    sequence : Sequence[str], optional
        Questions of ``model``, in the order they are asked.
    participants : int, optional
        Number of simulated participants.
    policy : {"memory", "memoryless"}, optional
        If answered questions keep their answer.
    seed : int, optional
        Root seed.

    """
    sequence = tuple(sequence)
    if participants < 1:
        raise ContractViolation(f"Need {participants = } >= 1")
    if not sequence:
        raise ContractViolation("Sequence of questions is empty.")
    if policy not in ("memory", "memoryless"):
        raise ContractViolation(f"Unknown {policy = }")
    for question in sequence:
        model.index(question)

    n_chunks = -(-participants // CHUNK_SIZE)
    chunks = []
    for i, rng in enumerate(spawn_generators(seed, n_chunks)):
        size = min(CHUNK_SIZE, participants - i * CHUNK_SIZE)
        chunks.append(_simulate_chunk(model, sequence, size, policy, rng))
    answers = np.concatenate(chunks)

    agreement = {}
    first_position: dict[str, int] = {}
    for position, question in enumerate(sequence):
        if question not in first_position:
            first_position[question] = position
            continue
        first = first_position[question]
        key = f"{question}@{position} == {question}@{first}"
        agreement[key] = float(
            np.mean(answers[:, position] == answers[:, first])
        )

    patterns = Counter(
        "".join("y" if answer else "n" for answer in row) for row in answers
    )
    stats = ReplicabilityStats(
        sequence=sequence,
        policy=policy,
        participants=participants,
        yes_frequencies=tuple(float(f) for f in answers.mean(axis=0)),
        agreement=agreement,
        patterns=dict(patterns),
    )
    logging.info(f"Replicability with {policy = }: {agreement}")
    return stats


def replicability_agreement(
    model: MembraneTwoQuestionModel, first: str, second: str
) -> float:
    """Give the probability that ``first``, ``second``, ``first`` repeats.

    This is the exact value for the ``"memoryless"`` policy: after a ``yes``
    to ``first`` (probability :math:`F_X(e_X)`), the repeated answer is
    ``yes`` with probability
    :math:`F_Y(\\gamma)F_X(\\gamma) + (1 - F_Y(\\gamma))F_X(-\\gamma)`; the
    ``no`` branch is symmetric.

    """
    if first == second:
        raise ContractViolation("Need two different questions.")
    gamma = model.gamma
    cdf_x, cdf_y = model.membrane(first).cdf, model.membrane(second).cdf
    p_yes = float(cdf_x(model.coordinate(first)))

    repeat_yes = cdf_y(gamma) * cdf_x(gamma) + (1.0 - cdf_y(gamma)) * cdf_x(
        -gamma
    )
    repeat_no = cdf_y(-gamma) * (1.0 - cdf_x(gamma)) + (
        1.0 - cdf_y(-gamma)
    ) * (1.0 - cdf_x(-gamma))
    return float(p_yes * repeat_yes + (1.0 - p_yes) * repeat_no)
