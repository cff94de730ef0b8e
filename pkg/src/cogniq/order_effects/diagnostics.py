"""Diagnose question order effects in a :class:`.SequentialTable`.

Every projective Hilbert-space model obeys the QQ-equality :math:`q = 0`, and
every two-dimensional model with rank-1 projectors also obeys :math:`q' = 0`.
Empirical tables that violate them cannot be fitted exactly by such models.

"""

from typing import NamedTuple

from cogniq.constants import Q_PRIME_MAX
from cogniq.core.errors import DegenerateMarginal
from cogniq.order_effects.sequential_table import SequentialTable

#: Below this value, a first-question marginal cannot be conditioned on.
MARGINAL_EPS = 1e-9


class QPrime(NamedTuple):
    """Value of :math:`q'` and its ratio to the maximum value, 0.25."""

    value: float
    ratio: float


def compute_q(table: SequentialTable) -> float:
    """Give the signed value of the QQ-equality.

    With ``questions = (A, B)``:
    :math:`q = \\mu_{ByAy} - \\mu_{AyBy} + \\mu_{BnAn} - \\mu_{AnBn}`.

    """
    return (
        table.order_ba["yy"]
        - table.order_ab["yy"]
        + table.order_ba["nn"]
        - table.order_ab["nn"]
    )


def compute_q_prime(table: SequentialTable) -> QPrime:
    """Give :math:`q'`, which vanishes for 2D rank-1 Hilbert models.

    With ``questions = (A, B)``:
    :math:`q' = \\mu_{AyBn}\\mu_{AnBn} - \\mu_{AnBy}\\mu_{AyBy}`.

    """
    ab = table.order_ab
    value = ab["yn"] * ab["nn"] - ab["ny"] * ab["yy"]
    return QPrime(value, value / Q_PRIME_MAX)


def first_question_marginals(table: SequentialTable) -> dict[str, float]:
    """Give the probability of answering ``yes`` to the question asked first.

    Keys are the order labels, e.g. ``"order_CG"``.

    """
    ab, ba = table.order_ab, table.order_ba
    return {
        table.label_ab: ab["yy"] + ab["yn"],
        table.label_ba: ba["yy"] + ba["yn"],
    }


def conditional_probabilities(
    table: SequentialTable,
) -> dict[str, dict[str, float]]:
    """Give the probabilities of the second answer knowing the first one.

    Returns
    -------
    dict[str, dict[str, float]]
        For every order label, the four conditionals keyed like
        ``"Gy|Cy"``.

    Raises
    ------
    DegenerateMarginal
        If an answer to a first question has a probability lower than
        :data:`MARGINAL_EPS`.

    """
    out = {}
    a, b = table.questions
    for label, order, first, second in (
        (table.label_ab, table.order_ab, a, b),
        (table.label_ba, table.order_ba, b, a),
    ):
        conditionals = {}
        for first_answer in ("y", "n"):
            marginal = order[first_answer + "y"] + order[first_answer + "n"]
            if marginal <= MARGINAL_EPS:
                raise DegenerateMarginal(
                    f"P({first}{first_answer}) = {marginal} in {label}"
                )
            for second_answer in ("y", "n"):
                key = f"{second}{second_answer}|{first}{first_answer}"
                conditionals[key] = (
                    order[first_answer + second_answer] / marginal
                )
        out[label] = conditionals
    return out


def order_effect_sizes(table: SequentialTable) -> dict[str, float]:
    """Measure how much each ``yes`` rate depends on the question position.

    Returns
    -------
    dict[str, float]
        For each question ``X``: ``"P(Xy) first"``, ``"P(Xy) second"`` and
        their difference ``"P(Xy) first - second"``.

    """
    a, b = table.questions
    ab, ba = table.order_ab, table.order_ba
    positions = {
        a: (ab["yy"] + ab["yn"], ba["yy"] + ba["ny"]),
        b: (ba["yy"] + ba["yn"], ab["yy"] + ab["ny"]),
    }
    out = {}
    for question, (first, second) in positions.items():
        out[f"P({question}y) first"] = first
        out[f"P({question}y) second"] = second
        out[f"P({question}y) first - second"] = first - second
    return out
