"""Model two questions with membranes in a three-dimensional Bloch sphere.

Both questions are two-outcome measurements whose segments are diameters of
the sphere, with axes :math:`m_a` and :math:`m_b` of cosine ``gamma``. The
particle has projections ``e_a`` and ``e_b`` on them. Answering a question
sends the particle on a vertex of its segment, so that the coordinate on the
other axis becomes :math:`\\pm\\gamma`.

"""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from cogniq.bloch.membranes import RhoMembrane, UniformMembrane
from cogniq.core.errors import ContractViolation, InconsistentGeometry
from cogniq.order_effects.hilbert_model import gram_is_feasible
from cogniq.order_effects.sequential_table import SequentialTable


@dataclass(frozen=True, eq=False)
class MembraneTwoQuestionModel:
    """Geometry and membranes of two questions asked to the same entity.

    Parameters
    ----------
    e_a, e_b : float
        Coordinates of the particle along the axis of each question.
    gamma : float
        Cosine of the angle between the two axes.
    membrane_a, membrane_b : RhoMembrane
        Membranes of the two questions.
    questions : tuple[str, str], optional
        Labels of the questions.

    """

    e_a: float
    e_b: float
    gamma: float
    membrane_a: RhoMembrane = UniformMembrane()
    membrane_b: RhoMembrane = UniformMembrane()
    questions: tuple[str, str] = ("A", "B")

    def __post_init__(self) -> None:
        """Check that a particle with these coordinates exists."""
        for name in ("e_a", "e_b", "gamma"):
            value = getattr(self, name)
            if not -1.0 <= value <= 1.0:
                raise ContractViolation(f"{name} = {value} not in [-1, 1]")
            object.__setattr__(self, name, float(value))
        if not gram_is_feasible(self.e_a, self.e_b, self.gamma):
            raise InconsistentGeometry(
                f"No particle with e_a = {self.e_a}, e_b = {self.e_b} for "
                f"gamma = {self.gamma}"
            )
        questions = tuple(self.questions)
        if len(questions) != 2 or questions[0] == questions[1]:
            raise ContractViolation(f"Need two distinct {questions = }")
        object.__setattr__(self, "questions", questions)

    def membrane(self, question: str) -> RhoMembrane:
        """Give the membrane of ``question``."""
        return (self.membrane_a, self.membrane_b)[self.index(question)]

    def coordinate(self, question: str) -> float:
        """Give the initial coordinate of the particle on ``question``."""
        return (self.e_a, self.e_b)[self.index(question)]

    def index(self, question: str) -> int:
        """Give 0 for the first question, 1 for the second."""
        if question not in self.questions:
            raise ContractViolation(
                f"Unknown {question = }, model has {self.questions}"
            )
        return self.questions.index(question)

    def to_dict(self) -> dict[str, object]:
        """Describe the model in a JSON-serializable way."""
        a, b = self.questions
        return {
            "questions": list(self.questions),
            f"e_{a}": self.e_a,
            f"e_{b}": self.e_b,
            "gamma": self.gamma,
            f"membrane_{a}": self.membrane_a.to_dict(),
            f"membrane_{b}": self.membrane_b.to_dict(),
        }


def membrane_table_vector(
    e_first: tuple[float, float],
    gamma: float,
    cdf_a: Callable[[float], float],
    cdf_b: Callable[[float], float],
) -> np.ndarray:
    """Give the eight probabilities in the order of :meth:`.as_vector`.

    Parameters
    ----------
    e_first : tuple[float, float]
        Coordinates ``e_a``, ``e_b``.
    gamma : float
        Cosine between the axes.
    cdf_a, cdf_b : Callable[[float], float]
        Cumulative masses of the membranes.

    """
    out = np.empty(8)
    for offset, (e, cdf_first, cdf_second) in enumerate(
        ((e_first[0], cdf_a, cdf_b), (e_first[1], cdf_b, cdf_a))
    ):
        p_first = float(cdf_first(e))
        after_yes = float(cdf_second(gamma))
        after_no = float(cdf_second(-gamma))
        out[4 * offset : 4 * offset + 4] = (
            p_first * after_yes,
            p_first * (1.0 - after_yes),
            (1.0 - p_first) * after_no,
            (1.0 - p_first) * (1.0 - after_no),
        )
    return out


def predict_membrane_table(
    model: MembraneTwoQuestionModel,
) -> SequentialTable:
    """Give the sequential probabilities predicted by ``model``.

    For instance, with ``questions = ("C", "G")``:
    :math:`\\mu_{CyGy} = F_C(e_C)F_G(\\gamma)` and
    :math:`\\mu_{CnGy} = (1 - F_C(e_C))F_G(-\\gamma)`.

    """
    values = membrane_table_vector(
        (model.e_a, model.e_b),
        model.gamma,
        model.membrane_a.cdf,
        model.membrane_b.cdf,
    )
    return SequentialTable.from_vector(
        model.questions, values, model_generated=True
    )
