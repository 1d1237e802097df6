"""Balanced pairs of partitions: the characteristic 0 block criterion."""

from collections import Counter
import logging
from typing import List, Tuple

from ..errors import UnsupportedParameterError
from ..models.base import Context, Partition
from ..weights.contents import skew_boxes
from ..weights.partitions import intersection

logger = logging.getLogger(__name__)


def _pairs_off(boxes: List[Tuple[int, int, int]], delta: int) -> bool:
    """Contents can be paired with sums 1 - delta."""
    counts = Counter(content for _, _, content in boxes)
    for content, count in counts.items():
        partner = 1 - delta - content
        if partner == content:
            if count % 2:
                return False
        elif counts.get(partner, 0) != count:
            return False
    return True


def _excluded_configuration(boxes: List[Tuple[int, int, int]], delta: int) -> bool:
    """Every box of content (2 - delta)/2 sits beside one of content -delta/2 in
    its row, and there is an odd number of them."""
    upper = (2 - delta) // 2
    lower = upper - 1
    rows_upper = {row for row, _, content in boxes if content == upper}
    rows_lower = {row for row, _, content in boxes if content == lower}
    if len(rows_upper) % 2 == 0:
        return False
    return rows_upper <= rows_lower


def is_balanced(lam: Partition, mu: Partition, ctx: Context) -> bool:
    if ctx.is_modular:
        raise UnsupportedParameterError("balanced pairs are defined in characteristic 0")
    nu = intersection(lam, mu)
    for outer in (lam, mu):
        boxes = skew_boxes(outer, nu)
        if not _pairs_off(boxes, ctx.delta):
            return False
        if ctx.delta % 2 == 0 and _excluded_configuration(boxes, ctx.delta):
            logger.debug("%s/%s has the excluded configuration", outer, nu)
            return False
    return True
