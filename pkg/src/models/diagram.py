"""Brauer diagram and algebra element models."""

from dataclasses import dataclass, field
from typing import Dict, Tuple, Union
from fractions import Fraction

from ..errors import DiagramError
from .base import Context

Scalar = Union[int, Fraction]


def node_key(node: int) -> Tuple[bool, int]:
    """Northern nodes 1..n first, then southern nodes -1..-n."""
    return (node < 0, abs(node))


@dataclass(frozen=True)
class BrauerDiagram:
    """Perfect matching on northern nodes 1..n and southern nodes -1..-n.

    Pairs are canonical: each pair ordered by node_key and the pairs sorted
    by their first node, so equal matchings compare and hash equal.
    """
    n: int
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise DiagramError(f"diagram size must be nonnegative, got {self.n}")
        pairs = tuple(sorted(
            (tuple(sorted(pair, key=node_key)) for pair in self.pairs),
            key=lambda pair: node_key(pair[0])
        ))
        nodes = [node for pair in pairs for node in pair]
        expected = sorted(list(range(1, self.n + 1)) + list(range(-self.n, 0)), key=node_key)
        if any(len(pair) != 2 for pair in pairs) or sorted(nodes, key=node_key) != expected:
            raise DiagramError(
                f"pairs {self.pairs} are not a perfect matching on 2*{self.n} nodes"
            )
        object.__setattr__(self, "pairs", pairs)

    def mate(self) -> Dict[int, int]:
        """Map each node to the node it is joined to."""
        result = {}
        for a, b in self.pairs:
            result[a] = b
            result[b] = a
        return result

    def __str__(self) -> str:
        return ",".join(f"({a},{b})" for a, b in self.pairs)


@dataclass
class AlgebraElement:
    """Finite linear combination of diagrams with exact scalars.

    Coefficients are Fractions in characteristic 0 and residues mod p otherwise.
    Zero coefficients are never stored.
    """
    n: int
    context: Context
    terms: Dict[BrauerDiagram, Scalar] = field(default_factory=dict)

    def coefficient(self, diagram: BrauerDiagram) -> Scalar:
        return self.terms.get(diagram, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"diagram": str(d), "coefficient": str(c)}
                for d, c in sorted(self.terms.items(), key=lambda item: str(item[0]))
            ]
        }
