"""Abacus model."""

from dataclasses import dataclass
from typing import Tuple

from ..errors import InvalidWeightError


@dataclass(frozen=True)
class Abacus:
    """b beads on p runners; the bead with index i <= n is black, the rest grey.

    Positions are stored in decreasing order, so positions[i - 1] is the bead
    of row i. Position x sits on runner x mod p, in row x // p.
    """
    p: int
    b: int
    positions: Tuple[int, ...]
    n: int

    def __post_init__(self):
        positions = tuple(sorted({int(x) for x in self.positions}, reverse=True))
        if len(positions) != self.b:
            raise InvalidWeightError(
                f"abacus needs {self.b} distinct bead positions, got {len(self.positions)}"
            )
        if positions and positions[-1] < 0:
            raise InvalidWeightError("bead positions must be nonnegative")
        object.__setattr__(self, "positions", positions)

    def runner_of(self, position: int) -> int:
        return position % self.p

    def is_black(self, index: int) -> bool:
        """Colour of the bead with 1-based index (row) ``index``."""
        return index <= self.n

    def beads(self):
        """Yield (index, position, black) for every bead."""
        for index, position in enumerate(self.positions, start=1):
            yield index, position, self.is_black(index)

    def to_dict(self) -> dict:
        return {"p": self.p, "b": self.b, "n": self.n, "positions": list(self.positions)}
