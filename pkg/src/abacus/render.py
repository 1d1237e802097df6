"""Text renderings of an abacus."""

from ..errors import InvalidWeightError
from ..models.abacus import Abacus

BLACK = "●"
GREY = "○"
SPACE = "."


def render(abacus: Abacus) -> str:
    """Runners as columns 0..p-1, one line per row of positions, top row first."""
    if not abacus.positions:
        return ""
    colour = {position: BLACK if black else GREY for _, position, black in abacus.beads()}
    rows = abacus.positions[0] // abacus.p + 1
    lines = []
    for row in range(rows):
        lines.append("".join(
            colour.get(row * abacus.p + runner, SPACE) for runner in range(abacus.p)
        ))
    return "\n".join(lines)


def compact(abacus: Abacus) -> str:
    """Machine form p:b:n:pos1,pos2,..."""
    positions = ",".join(str(x) for x in abacus.positions)
    return f"{abacus.p}:{abacus.b}:{abacus.n}:{positions}"


def parse_compact(text: str) -> Abacus:
    try:
        p, b, n, positions = text.strip().split(":")
        beads = tuple(int(x) for x in positions.split(",")) if positions else ()
        return Abacus(int(p), int(b), beads, int(n))
    except ValueError as exc:
        raise InvalidWeightError(f"not a compact abacus: {text!r} ({exc})") from None
