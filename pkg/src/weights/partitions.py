"""Partition combinatorics: conjugates, containment, boxes and label sets."""

from typing import Iterator, List, Tuple

from ..errors import UnsupportedParameterError
from ..models.base import Context, Partition


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram (rows become columns)."""
    if lam.is_empty():
        return Partition(())
    return Partition(tuple(
        sum(1 for part in lam.parts if part > column)
        for column in range(lam.parts[0])
    ))


def intersection(lam: Partition, mu: Partition) -> Partition:
    """Componentwise minimum, the largest partition inside both."""
    return Partition(tuple(min(a, b) for a, b in zip(lam.parts, mu.parts)))


def contains(lam: Partition, mu: Partition) -> bool:
    return lam.contains(mu)


def removable_boxes(lam: Partition) -> List[Tuple[int, int]]:
    """1-based (row, column) of boxes whose removal leaves a partition."""
    return [
        (i, part)
        for i, part in enumerate(lam.parts, start=1)
        if part > lam.part(i)
    ]


def addable_boxes(lam: Partition) -> List[Tuple[int, int]]:
    """1-based (row, column) of boxes whose addition gives a partition."""
    boxes = []
    for i in range(1, lam.length + 2):
        column = lam.part(i - 1) + 1
        if i == 1 or lam.part(i - 2) >= column:
            boxes.append((i, column))
    return boxes


def hook_length(lam: Partition, row: int, column: int) -> int:
    """Hook length of the box in 1-based (row, column)."""
    arm = lam.part(row - 1) - column
    leg = sum(1 for part in lam.parts[row:] if part >= column)
    return arm + leg + 1


def partitions_of(m: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of m, lexicographically decreasing."""
    if largest is None:
        largest = m
    if m == 0:
        yield Partition(())
        return
    for first in range(min(m, largest), 0, -1):
        for rest in partitions_of(m - first, first):
            yield Partition((first,) + rest.parts)


def label_partitions(n: int) -> List[Partition]:
    """Partitions of n, n-2, ..., down to 1 or 0, degree descending then lex."""
    labels = []
    for degree in range(n, -1, -2):
        labels.extend(partitions_of(degree))
    return labels


def enumerate_label_set(ctx: Context) -> List[Partition]:
    """The label set of simple modules of B_n(delta)."""
    if ctx.delta == 0:
        raise UnsupportedParameterError(
            "the label set for delta = 0 needs a modified construction"
        )
    return label_partitions(ctx.rank)


def in_label_set(lam: Partition, n: int) -> bool:
    return lam.degree <= n and (n - lam.degree) % 2 == 0
