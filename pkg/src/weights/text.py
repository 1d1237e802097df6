"""Text forms of weights and partitions: comma-separated integers, "" for the empty one."""

from ..errors import InvalidWeightError
from ..models.base import Partition, Weight


def _integers(text: str):
    text = text.strip()
    if text in ("", "∅"):
        return ()
    try:
        return tuple(int(token) for token in text.split(","))
    except ValueError:
        raise InvalidWeightError(f"not a comma-separated list of integers: {text!r}") from None


def parse_weight(text: str, rank: int = 0) -> Weight:
    entries = _integers(text)
    if rank and len(Weight(entries).trimmed()) > rank:
        raise InvalidWeightError(f"weight {text!r} has more than {rank} coordinates")
    return Weight(entries, rank)


def format_weight(weight: Weight) -> str:
    return str(weight)


def parse_partition(text: str) -> Partition:
    return Partition(_integers(text))


def format_partition(lam: Partition) -> str:
    return str(lam)
