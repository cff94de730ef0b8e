"""Define :class:`SequentialTable`, the data of a two-question experiment.

Two questions ``A`` and ``B`` are asked in both orders. For each order, the
four probabilities of the answer pairs are stored under keys ``"yy"``,
``"yn"``, ``"ny"`` and ``"nn"``; the first letter is the answer to the
question asked first. With ``questions = ("C", "G")``, ``order_ab["yn"]`` is
:math:`\\mu_{CyGn}` and ``order_ba["yn"]`` is :math:`\\mu_{GyCn}`.

"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType
from typing import Self

import numpy as np

from cogniq.constants import EMPIRICAL_SUM_TOL, MODEL_SUM_TOL
from cogniq.core.errors import ContractViolation

ANSWER_PAIRS = ("yy", "yn", "ny", "nn")


def _check_order(
    name: str, probabilities: Mapping[str, float], sum_tol: float
) -> dict[str, float]:
    """Validate the four probabilities of one order."""
    if set(probabilities) != set(ANSWER_PAIRS):
        raise ContractViolation(
            f"{name} must have keys {ANSWER_PAIRS}, got {list(probabilities)}"
        )
    checked = {pair: float(probabilities[pair]) for pair in ANSWER_PAIRS}
    for pair, value in checked.items():
        if not 0.0 <= value <= 1.0:
            raise ContractViolation(
                f"{name}[{pair!r}] = {value} not in [0, 1]"
            )
    total = sum(checked.values())
    if abs(total - 1.0) > sum_tol:
        logging.error(f"Probabilities of {name} sum to {total}")
        raise ContractViolation(
            f"{name} probabilities sum to {total}, not 1 within {sum_tol}"
        )
    return checked


@dataclass(frozen=True, eq=False)
class SequentialTable:
    """The eight probabilities of a two-question, two-order experiment.

    Parameters
    ----------
    questions : tuple[str, str]
        Labels of questions ``A`` and ``B``.
    order_ab : Mapping[str, float]
        Probabilities when ``A`` is asked first.
    order_ba : Mapping[str, float]
        Probabilities when ``B`` is asked first.
    model_generated : bool, optional
        If the table was predicted by a model, in which case each order must
        sum to 1 within :data:`.MODEL_SUM_TOL`. Empirical tables, rounded to
        a few decimals, only need to within :data:`.EMPIRICAL_SUM_TOL`.

    """

    questions: tuple[str, str]
    order_ab: Mapping[str, float]
    order_ba: Mapping[str, float]
    model_generated: bool = False

    def __post_init__(self) -> None:
        """Check the invariants of both orders."""
        questions = tuple(self.questions)
        if len(questions) != 2 or questions[0] == questions[1]:
            raise ContractViolation(f"Need two distinct {questions = }")
        tol = MODEL_SUM_TOL if self.model_generated else EMPIRICAL_SUM_TOL
        order_ab = _check_order(self.label_ab, self.order_ab, tol)
        order_ba = _check_order(self.label_ba, self.order_ba, tol)
        object.__setattr__(self, "questions", questions)
        object.__setattr__(self, "order_ab", MappingProxyType(order_ab))
        object.__setattr__(self, "order_ba", MappingProxyType(order_ba))

    @classmethod
    def from_vector(
        cls,
        questions: tuple[str, str],
        values: np.ndarray | list[float],
        model_generated: bool = False,
    ) -> Self:
        """Create from the eight values ordered as :meth:`as_vector`."""
        values = [float(value) for value in values]
        if len(values) != 8:
            raise ContractViolation(f"Expected 8 values, got {len(values)}")
        return cls(
            questions,
            dict(zip(ANSWER_PAIRS, values[:4], strict=True)),
            dict(zip(ANSWER_PAIRS, values[4:], strict=True)),
            model_generated=model_generated,
        )

    @property
    def label_ab(self) -> str:
        """Give the name of the order where ``A`` is asked first."""
        return f"order_{self.questions[0]}{self.questions[1]}"

    @property
    def label_ba(self) -> str:
        """Give the name of the order where ``B`` is asked first."""
        return f"order_{self.questions[1]}{self.questions[0]}"

    def as_vector(self) -> np.ndarray:
        """Give the eight values, ``A``-first order then ``B``-first order."""
        return np.array(
            [self.order_ab[pair] for pair in ANSWER_PAIRS]
            + [self.order_ba[pair] for pair in ANSWER_PAIRS]
        )

    def mu(self, first: str, second: str) -> float:
        """Give a sequential probability with the usual notation.

        Parameters
        ----------
        first : str
            Question asked first and its answer, e.g. ``"Cy"``.
        second : str
            Question asked second and its answer, e.g. ``"Gn"``.

        Returns
        -------
        float
            The probability :math:`\\mu_{CyGn}`.

        """
        (q_1, a_1), (q_2, a_2) = _split(first), _split(second)
        if (q_1, q_2) == self.questions:
            return self.order_ab[a_1 + a_2]
        if (q_2, q_1) == self.questions:
            return self.order_ba[a_1 + a_2]
        raise ContractViolation(
            f"{first}{second} does not match {self.questions = }"
        )

    def to_dict(self) -> dict[str, object]:
        """Convert to the JSON schema of sequential datasets."""
        return {
            "questions": list(self.questions),
            self.label_ab: dict(self.order_ab),
            self.label_ba: dict(self.order_ba),
        }


def _split(question_answer: str) -> tuple[str, str]:
    """Split ``"Cy"`` into ``("C", "y")``."""
    answer = question_answer[-1:]
    if answer not in ("y", "n") or len(question_answer) < 2:
        raise ContractViolation(
            f"Expected a question label followed by y or n, got "
            f"{question_answer!r}"
        )
    return question_answer[:-1], answer
