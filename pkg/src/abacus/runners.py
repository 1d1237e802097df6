"""Abacus encoding of partitions and the runner-count orbit criterion.

Row i of lambda is the bead at position lambda_i + b - i. With
2b = 2 - delta (mod p) the bead of a row with content c sits on runner
(b - c) mod p, so runner 0 holds the rows whose content is fixed by
x -> 2 - delta - x and runners l, p - l hold the swapped pairs.
"""

import logging
from typing import Iterable, Tuple

import numpy as np

from ..errors import InvalidWeightError, UnsupportedParameterError
from ..models.abacus import Abacus
from ..models.base import Context, Partition

logger = logging.getLogger(__name__)


def bead_positions(lam: Partition, b: int) -> Tuple[int, ...]:
    """Positions lambda_i + b - i for i = 1..b, decreasing."""
    if lam.length > b:
        raise InvalidWeightError(f"{lam} has {lam.length} parts, more than b = {b}")
    return tuple(lam.part(i - 1) + b - i for i in range(1, b + 1))


def partition_from_positions(positions: Iterable[int]) -> Partition:
    ordered = sorted(positions, reverse=True)
    b = len(ordered)
    return Partition(tuple(pos - b + i for i, pos in enumerate(ordered, start=1)))


def _require_modular(ctx: Context):
    if not ctx.is_modular:
        raise UnsupportedParameterError("the abacus needs characteristic p > 2")


def choose_bead_count(ctx: Context, *partitions: Partition) -> int:
    """Smallest b >= max(n, parts) with 2b = 2 - delta (mod p)."""
    _require_modular(ctx)
    p = ctx.p
    residue = ((2 - ctx.delta) * pow(2, -1, p)) % p
    floor = max([ctx.rank] + [lam.length for lam in partitions])
    return floor + (residue - floor) % p


def check_bead_count(ctx: Context, b: int, *partitions: Partition) -> None:
    _require_modular(ctx)
    if (2 * b - 2 + ctx.delta) % ctx.p:
        raise InvalidWeightError(f"b = {b} does not satisfy 2b = 2 - delta mod {ctx.p}")
    if b < max([ctx.rank] + [lam.length for lam in partitions]):
        raise InvalidWeightError(f"b = {b} is smaller than n or the number of parts")


def encode(lam: Partition, b: int, ctx: Context) -> Abacus:
    _require_modular(ctx)
    return Abacus(ctx.p, b, bead_positions(lam, b), ctx.rank)


def decode(abacus: Abacus) -> Partition:
    return partition_from_positions(abacus.positions)


def runner_counts(abacus: Abacus) -> Tuple[int, ...]:
    """Number of beads on each runner 0..p-1."""
    positions = np.asarray(abacus.positions, dtype=np.int64)
    return tuple(int(x) for x in np.bincount(positions % abacus.p, minlength=abacus.p))


def black_beads_on_runner(abacus: Abacus, runner: int) -> int:
    return sum(
        1 for _, position, black in abacus.beads()
        if black and position % abacus.p == runner
    )


def beads_changing_runners(first: Abacus, second: Abacus) -> int:
    """Minimal number of beads that move between paired runners."""
    a = runner_counts(first)
    b = runner_counts(second)
    return sum(abs(a[l] - b[l]) for l in range(1, (first.p - 1) // 2 + 1))


def orbit_equiv_abacus(lam: Partition, mu: Partition, ctx: Context, b: int | None = None) -> bool:
    """Runner-count test for lambda and mu lying in one W_p-orbit.

    (i) equal counts on runner 0, (ii) equal totals on each pair of runners
    l and p - l, (iii) without a black bead on runner 0, an even number of
    beads changes runners. Labels of different degree parity are never linked.
    """
    _require_modular(ctx)
    if (lam.degree - mu.degree) % 2:
        return False
    if b is None:
        b = choose_bead_count(ctx, lam, mu)
    else:
        check_bead_count(ctx, b, lam, mu)
    first = encode(lam, b, ctx)
    second = encode(mu, b, ctx)
    a = runner_counts(first)
    c = runner_counts(second)
    p = ctx.p
    if a[0] != c[0]:
        return False
    if any(a[l] + a[p - l] != c[l] + c[p - l] for l in range(1, (p - 1) // 2 + 1)):
        return False
    if black_beads_on_runner(first, 0) == 0 and beads_changing_runners(first, second) % 2:
        logger.debug("%s and %s differ by an odd number of runner changes", lam, mu)
        return False
    return True
