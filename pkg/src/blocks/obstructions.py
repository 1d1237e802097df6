"""Necessary conditions for two labels to be linked."""

from typing import List

from ..errors import InvalidWeightError
from ..models.base import Context, Partition
from ..weights.contents import content_sum


def content_scalar(lam: Partition, mu: Partition, ctx: Context) -> int:
    """t(delta - 1) + sum of contents of lambda - sum of contents of mu, |lambda| - |mu| = 2t."""
    difference = lam.degree - mu.degree
    if difference < 0 or difference % 2:
        raise InvalidWeightError(
            f"|lambda| - |mu| must be even and nonnegative, got {difference}"
        )
    t = difference // 2
    return t * (ctx.delta - 1) + content_sum(lam) - content_sum(mu)


def content_obstruction(lam: Partition, mu: Partition, ctx: Context) -> bool:
    """True iff the content scalar vanishes (mod p in characteristic p)."""
    return ctx.reduce(content_scalar(lam, mu, ctx)) == 0


def pieri_two_box_additions(mu: Partition) -> List[Partition]:
    """Partitions eta with eta/mu two boxes in distinct rows, lexicographically decreasing.

    These are the eta with eta^T/mu^T a horizontal two-strip, i.e. the
    Specht factors of the two-box induction in the transposed labelling.
    """
    parts = list(mu.parts) + [0, 0]
    results = set()
    for first in range(len(parts)):
        for second in range(first + 1, len(parts)):
            grown = list(parts)
            grown[first] += 1
            grown[second] += 1
            if all(a >= b for a, b in zip(grown, grown[1:])):
                results.add(Partition(tuple(grown)))
    return sorted(results, reverse=True)
