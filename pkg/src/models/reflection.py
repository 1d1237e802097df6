"""Reflection generators, words and orbit witnesses."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Tuple

from ..errors import BrauerError, InvalidWeightError


class RootKind(str, Enum):
    DIFF = "diff"   # e_i - e_j
    SUM = "sum"     # e_i + e_j


@dataclass(frozen=True)
class ReflectionGen:
    """The reflection s_{beta, rp} for beta = e_i - e_j or e_i + e_j, i < j."""
    kind: RootKind
    i: int
    j: int
    shift: int = 0

    def __post_init__(self):
        kind = RootKind(self.kind)
        if not 1 <= self.i < self.j:
            raise InvalidWeightError(
                f"generator indices must satisfy 1 <= i < j, got ({self.i}, {self.j})"
            )
        object.__setattr__(self, "kind", kind)

    @classmethod
    def diff(cls, i: int, j: int, shift: int = 0) -> 'ReflectionGen':
        """s_{e_i - e_j, rp} for any i != j; reversed indices negate the shift."""
        if i > j:
            return cls(RootKind.DIFF, j, i, -shift)
        return cls(RootKind.DIFF, i, j, shift)

    @classmethod
    def sum(cls, i: int, j: int, shift: int = 0) -> 'ReflectionGen':
        """s_{e_i + e_j, rp} for any i != j."""
        return cls(RootKind.SUM, min(i, j), max(i, j), shift)

    def __str__(self) -> str:
        sign = "+" if self.kind == RootKind.SUM else ""
        level = f";{self.shift}" if self.shift else ""
        return f"s[{self.i},{sign}{self.j}{level}]"

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "i": self.i, "j": self.j, "shift": self.shift}


@dataclass(frozen=True)
class ReflectionWord:
    """A product of generators, written left to right and applied rightmost first."""
    gens: Tuple[ReflectionGen, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))

    @classmethod
    def from_applied(cls, applied) -> 'ReflectionWord':
        """Word whose action applies the given generators in the given order."""
        return cls(tuple(reversed(list(applied))))

    def applied_order(self) -> Tuple[ReflectionGen, ...]:
        return tuple(reversed(self.gens))

    def reversed(self) -> 'ReflectionWord':
        return ReflectionWord(tuple(reversed(self.gens)))

    def __mul__(self, other: 'ReflectionWord') -> 'ReflectionWord':
        return ReflectionWord(self.gens + other.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[ReflectionGen]:
        return iter(self.gens)

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.gens)


@dataclass(frozen=True)
class OrbitWitness:
    """A permutation pi (pi[i-1] = pi(i), 1-based) and signs sigma with d(sigma) even."""
    pi: Tuple[int, ...]
    sigma: Tuple[int, ...]

    def __post_init__(self):
        pi = tuple(int(x) for x in self.pi)
        sigma = tuple(int(s) for s in self.sigma)
        if sorted(pi) != list(range(1, len(pi) + 1)):
            raise BrauerError(f"pi = {pi} is not a permutation of 1..{len(pi)}")
        if len(sigma) != len(pi) or any(s not in (1, -1) for s in sigma):
            raise BrauerError(f"sigma = {sigma} must be {len(pi)} signs")
        if sigma.count(-1) % 2:
            raise BrauerError("d(sigma) must be even")
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "sigma", sigma)

    @classmethod
    def identity(cls, n: int) -> 'OrbitWitness':
        return cls(tuple(range(1, n + 1)), (1,) * n)

    @property
    def d_sigma(self) -> int:
        return self.sigma.count(-1)

    def to_dict(self) -> dict:
        return {"pi": list(self.pi), "sigma": list(self.sigma)}
