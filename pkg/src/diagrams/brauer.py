"""Brauer diagrams: construction, enumeration and concatenation.

Node k > 0 is the northern node k, node -k the southern node k-bar.
The product a*b stacks a on top of b: the southern nodes of a are glued to
the northern nodes of b, and closed loops in the middle are counted.
"""

import re
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import DiagramError
from ..models.diagram import BrauerDiagram, node_key

_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def nodes(n: int) -> List[int]:
    return list(range(1, n + 1)) + [-k for k in range(1, n + 1)]


def identity(n: int) -> BrauerDiagram:
    return BrauerDiagram(n, tuple((k, -k) for k in range(1, n + 1)))


def permutation_diagram(perm: Sequence[int]) -> BrauerDiagram:
    """Northern node i joined to southern node perm[i-1]."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise DiagramError(f"{tuple(perm)} is not a permutation of 1..{n}")
    return BrauerDiagram(n, tuple((i, -image) for i, image in enumerate(perm, start=1)))


def x_ij(n: int, i: int, j: int) -> BrauerDiagram:
    """Arcs {i, j} and {i-bar, j-bar}, all other strands vertical."""
    if not 1 <= i < j <= n:
        raise DiagramError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    pairs = [(i, j), (-i, -j)] + [(k, -k) for k in range(1, n + 1) if k not in (i, j)]
    return BrauerDiagram(n, tuple(pairs))


def cup_cap(n: int) -> BrauerDiagram:
    """The diagram U with arcs on the last two strands."""
    if n < 2:
        raise DiagramError("cup_cap needs n >= 2")
    return x_ij(n, n - 1, n)


def embed(diagram: BrauerDiagram) -> BrauerDiagram:
    """B_{n-2} into B_n by adding a northern and a southern arc at the right-hand end."""
    n = diagram.n + 2
    return BrauerDiagram(n, diagram.pairs + ((n - 1, n), (-(n - 1), -n)))


def propagating_count(diagram: BrauerDiagram) -> int:
    """Number of pairs joining a northern node to a southern node."""
    return sum(1 for a, b in diagram.pairs if (a > 0) != (b > 0))


def as_permutation(diagram: BrauerDiagram) -> Optional[Tuple[int, ...]]:
    """perm with perm[i-1] = j for the pair (i, -j), or None unless all lines propagate."""
    if propagating_count(diagram) != diagram.n:
        return None
    mate = diagram.mate()
    return tuple(-mate[i] for i in range(1, diagram.n + 1))


def compose_permutations(first: Sequence[int], second: Sequence[int]) -> Tuple[int, ...]:
    """first then second: i -> second(first(i))."""
    return tuple(second[image - 1] for image in first)


def compose(a: BrauerDiagram, b: BrauerDiagram) -> Tuple[int, BrauerDiagram]:
    """(loops, C) with a*b = delta^loops * C."""
    if a.n != b.n:
        raise DiagramError(f"cannot compose diagrams of sizes {a.n} and {b.n}")
    top = a.mate()
    bottom = b.mate()
    visited_middle = set()

    def walk(node: int, in_top: bool) -> int:
        # follow a path from a boundary node until it reaches the boundary again
        while True:
            if in_top:
                partner = top[node]
                if partner > 0:
                    return partner
                middle = -partner
                visited_middle.add(middle)
                node, in_top = middle, False
            else:
                partner = bottom[node]
                if partner < 0:
                    return partner
                visited_middle.add(partner)
                node, in_top = -partner, True

    pairs = []
    done = set()
    for k in range(1, a.n + 1):
        if k not in done:
            end = walk(k, True)
            pairs.append((k, end))
            done.update((k, end))
        if -k not in done:
            end = walk(-k, False)
            pairs.append((-k, end))
            done.update((-k, end))

    loops = 0
    for start in range(1, a.n + 1):
        if start in visited_middle:
            continue
        loops += 1
        middle = start
        while middle not in visited_middle:
            visited_middle.add(middle)
            middle = bottom[middle]        # into b, back to the middle
            visited_middle.add(middle)
            middle = -top[-middle]         # through a, back to the middle
    return loops, BrauerDiagram(a.n, tuple(pairs))


def all_diagrams(n: int) -> List[BrauerDiagram]:
    """All (2n - 1)!! perfect matchings on 2n nodes."""

    def pairings(items: List[int]) -> Iterator[List[Tuple[int, int]]]:
        if not items:
            yield []
            return
        first = items[0]
        for index in range(1, len(items)):
            rest = items[1:index] + items[index + 1:]
            for tail in pairings(rest):
                yield [(first, items[index])] + tail

    return [BrauerDiagram(n, tuple(pairs)) for pairs in pairings(nodes(n))]


def random_diagram(n: int, rng: np.random.Generator) -> BrauerDiagram:
    """Uniformly random perfect matching."""
    shuffled = [int(x) for x in rng.permutation(nodes(n))]
    return BrauerDiagram(n, tuple(zip(shuffled[0::2], shuffled[1::2])))


def parse_diagram(text: str, n: int = 0) -> BrauerDiagram:
    """Parse "(1,2),(-1,-2)"; n defaults to the largest node mentioned."""
    pairs = [(int(a), int(b)) for a, b in _PAIR.findall(text)]
    if _PAIR.sub("", text).replace(",", "").strip():
        raise DiagramError(f"not a diagram: {text!r}")
    size = n or max((abs(x) for pair in pairs for x in pair), default=0)
    return BrauerDiagram(size, tuple(pairs))


def format_diagram(diagram: BrauerDiagram) -> str:
    return str(diagram)


def diagram_table(diagram: BrauerDiagram) -> Dict[int, int]:
    """Mate table in node order."""
    mate = diagram.mate()
    return {node: mate[node] for node in sorted(mate, key=node_key)}
