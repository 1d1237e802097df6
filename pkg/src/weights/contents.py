"""Contents of boxes, content sequences of weights and skew shapes.

Convention: the box in row i, column j has content i - j, and the last box
of row i of a weight lambda has content c(lambda)_i = i - lambda_i.
"""

from collections import Counter
from typing import List, Tuple

from ..errors import InvalidWeightError
from ..models.base import Context, Partition, Weight


def fit_to_rank(lam, ctx: Context) -> Weight:
    """lambda as a weight of rank ctx.rank; rejects weights with too many rows."""
    weight = Weight.of(lam)
    if len(weight.trimmed()) > ctx.rank:
        raise InvalidWeightError(f"weight {weight} has more than {ctx.rank} rows")
    return weight.padded(ctx.rank)


def content_sequence(lam, ctx: Context) -> Tuple[int, ...]:
    """(c(lambda)_1, ..., c(lambda)_n), padding lambda with zeros to the rank."""
    weight = fit_to_rank(lam, ctx)
    return tuple(i - x for i, x in enumerate(weight.entries, start=1))


def box_contents(lam: Partition) -> Counter:
    """Multiset of contents of the boxes of lambda."""
    return Counter(
        i - j
        for i, part in enumerate(lam.parts, start=1)
        for j in range(1, part + 1)
    )


def content_sum(lam: Partition) -> int:
    """Sum of box contents, sum_i (i * lambda_i - lambda_i (lambda_i + 1) / 2)."""
    return sum(i * part - part * (part + 1) // 2 for i, part in enumerate(lam.parts, start=1))


def skew_boxes(lam: Partition, mu: Partition) -> List[Tuple[int, int, int]]:
    """(row, column, content) of the boxes of lambda/mu in row-major order."""
    if not lam.contains(mu):
        raise InvalidWeightError(f"{mu} is not contained in {lam}")
    return [
        (i, j, i - j)
        for i, part in enumerate(lam.parts, start=1)
        for j in range(mu.part(i - 1) + 1, part + 1)
    ]


def is_dominant(lam) -> bool:
    """lambda_1 >= lambda_2 >= ... >= lambda_n >= 0."""
    return Weight.of(lam).is_partition()
