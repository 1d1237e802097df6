"""Block decomposition and split-certificate models."""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from .base import Context, Partition
from .reflection import OrbitWitness


class DecompositionKind(str, Enum):
    EXACT_BLOCKS = "exact-blocks"                   # characteristic 0
    ORBIT_UPPER_BOUND = "orbit-upper-bound"         # characteristic p: unions of blocks


@dataclass
class BlockDecomposition:
    """Classes of the label set; every label lies in exactly one class."""
    context: Context
    classes: List[List[Partition]]
    kind: DecompositionKind

    def class_of(self, label: Partition) -> Optional[List[Partition]]:
        for members in self.classes:
            if label in members:
                return members
        return None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "classes": [[str(label) for label in members] for members in self.classes]
        }

    def to_text(self) -> str:
        """Context header, then one class per line as semicolon-separated labels."""
        ctx = self.context
        lines = [f"# n={ctx.rank} delta={ctx.delta} p={ctx.characteristic} kind={self.kind.value}"]
        for members in self.classes:
            lines.append(";".join(str(label) for label in members))
        return "\n".join(lines) + "\n"


@dataclass
class SplitCertificate:
    """lambda |- n and mu |- n-2 in one affine orbit but in different blocks."""
    lam: Partition
    mu: Partition
    context: Context
    removed_row: int
    lambda_is_core: bool = False
    mu_is_core: bool = False
    witness: Optional[OrbitWitness] = None

    def to_dict(self) -> dict:
        return {
            "lambda": str(self.lam),
            "mu": str(self.mu),
            "context": self.context.to_dict(),
            "removed_row": self.removed_row,
            "lambda_is_core": self.lambda_is_core,
            "mu_is_core": self.mu_is_core,
            "witness": self.witness.to_dict() if self.witness else None
        }
