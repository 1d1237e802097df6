"""p-cores: bead sliding, runner-count degrees and enumeration by defects."""

import logging
import math
from typing import Dict, Iterator, List, Sequence, Tuple

from ..models.base import Partition
from .runners import bead_positions, partition_from_positions

logger = logging.getLogger(__name__)


def runner_occupancy(lam: Partition, p: int, b: int) -> Tuple[int, ...]:
    counts = [0] * p
    for position in bead_positions(lam, b):
        counts[position % p] += 1
    return tuple(counts)


def core_positions(counts: Sequence[int], p: int) -> List[int]:
    """Beads slid as far up each runner as they go."""
    return [runner + p * level for runner, k in enumerate(counts) for level in range(k)]


def core_degree(counts: Sequence[int], p: int) -> int:
    """Degree of the p-core with the given runner counts."""
    b = sum(counts)
    return sum(core_positions(counts, p)) - b * (b - 1) // 2


def p_core(lam: Partition, p: int) -> Partition:
    b = max(lam.length, 1)
    return partition_from_positions(core_positions(runner_occupancy(lam, p, b), p))


def is_p_core(lam: Partition, p: int) -> bool:
    return p_core(lam, p) == lam


def core_from_defects(p: int, defects: Sequence[int]) -> Partition:
    """The p-core whose runner counts exceed a common level by ``defects``.

    The defects sum to zero; the core has degree
    (p/2) sum v_r^2 + sum r v_r.
    """
    if len(defects) != p or sum(defects) != 0:
        raise ValueError(f"need {p} defects summing to zero, got {tuple(defects)}")
    level = max(0, -min(defects))
    counts = [level + v for v in defects]
    return partition_from_positions(core_positions(counts, p))


def defect_degree(p: int, defects: Sequence[int]) -> int:
    return (p * sum(v * v for v in defects)) // 2 + sum(r * v for r, v in enumerate(defects))


def enumerate_cores(p: int, max_size: int) -> List[Partition]:
    """All p-cores of degree at most max_size, by degree then lexicographically decreasing."""
    # sum_r (v_r + r/p)^2 <= (2/p)(max_size + sum_r r^2 / (2p)) bounds every defect
    radius_sq = (2.0 / p) * (max_size + sum(r * r for r in range(p)) / (2.0 * p))
    radius = math.sqrt(radius_sq)
    found: Dict[Partition, None] = {}

    def extend(prefix: List[int], used: float):
        r = len(prefix)
        if r == p - 1:
            last = -sum(prefix)
            defects = prefix + [last]
            if defect_degree(p, defects) <= max_size:
                found[core_from_defects(p, defects)] = None
            return
        low = math.floor(-radius - r / p)
        high = math.ceil(radius - r / p)
        for v in range(low, high + 1):
            cost = (v + r / p) ** 2
            if used + cost <= radius_sq + 1e-9:
                extend(prefix + [v], used + cost)

    extend([], 0.0)
    cores = sorted(found, key=lambda lam: (lam.degree, tuple(-x for x in lam.parts)))
    logger.info("enumerated %d %d-cores of degree <= %d", len(cores), p, max_size)
    return cores
