"""Block decompositions of the label set."""

import logging
from typing import Callable, Dict, Hashable, List

from ..errors import InvalidWeightError, UnsupportedParameterError
from ..models.base import Context, Partition
from ..models.block import BlockDecomposition, DecompositionKind
from ..weights.partitions import enumerate_label_set, in_label_set
from ..weyl.orbits import orbit_key
from .balanced import is_balanced

logger = logging.getLogger(__name__)


def _classes(labels: List[Partition], key: Callable[[Partition], Hashable]) -> List[List[Partition]]:
    """Group labels by an orbit invariant, classes ordered by first member."""
    grouped: Dict[Hashable, List[Partition]] = {}
    for label in labels:
        grouped.setdefault(key(label), []).append(label)
    return list(grouped.values())


def same_block_char0(lam: Partition, mu: Partition, ctx: Context) -> bool:
    """Whether L(lambda^T) and L(mu^T) share a block; equals W-orbit membership."""
    for label in (lam, mu):
        if not in_label_set(label, ctx.rank):
            raise InvalidWeightError(f"{label} is not a label for n = {ctx.rank}")
    return is_balanced(lam, mu, ctx)


def block_decomposition_char0(ctx: Context) -> BlockDecomposition:
    if ctx.is_modular:
        raise UnsupportedParameterError("exact blocks are decided in characteristic 0")
    labels = enumerate_label_set(ctx)
    classes = _classes(labels, lambda label: orbit_key(label, ctx))
    logger.info("n=%d delta=%d: %d labels in %d blocks", ctx.rank, ctx.delta, len(labels), len(classes))
    return BlockDecomposition(ctx, classes, DecompositionKind.EXACT_BLOCKS)


def orbit_decomposition_affine(ctx: Context) -> BlockDecomposition:
    """Classes of W_p-orbits on the label set; each is a union of blocks."""
    if not ctx.is_modular:
        raise UnsupportedParameterError("affine orbit classes need characteristic p")
    labels = enumerate_label_set(ctx)
    classes = _classes(labels, lambda label: orbit_key(label, ctx))
    logger.info(
        "n=%d delta=%d p=%d: %d labels in %d orbit classes",
        ctx.rank, ctx.delta, ctx.p, len(labels), len(classes)
    )
    return BlockDecomposition(ctx, classes, DecompositionKind.ORBIT_UPPER_BOUND)


def classes_refine(fine: BlockDecomposition, coarse: BlockDecomposition) -> bool:
    """Every class of ``fine`` lies inside a single class of ``coarse``."""
    owner = {}
    for index, members in enumerate(coarse.classes):
        for label in members:
            owner[label] = index
    for members in fine.classes:
        targets = {owner.get(label) for label in members}
        if len(targets) != 1 or None in targets:
            return False
    return True
