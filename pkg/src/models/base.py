"""Base data models: parameter context, weights and partitions."""

from dataclasses import dataclass, field
from numbers import Rational
from typing import Iterator, Tuple

import sympy

from ..errors import InvalidContextError, InvalidWeightError


def _as_integer(value, what: str) -> int:
    if isinstance(value, bool):
        raise InvalidContextError(f"{what} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, (Rational, float)) and value == int(value):
        return int(value)
    raise InvalidContextError(
        f"{what} must be an integer, got {value!r}; "
        "for non-integral delta the Brauer algebra is semisimple over C"
    )


@dataclass(frozen=True)
class Context:
    """Rank n, parameter delta and characteristic (0 or a prime p > 2).

    In characteristic p the parameter is stored as its residue in [0, p).
    """
    rank: int
    delta: int
    characteristic: int = 0

    def __post_init__(self):
        rank = _as_integer(self.rank, "rank")
        if rank < 1:
            raise InvalidContextError(f"rank must be positive, got {rank}")
        p = _as_integer(self.characteristic, "characteristic")
        if p != 0 and (p <= 2 or not sympy.isprime(p)):
            raise InvalidContextError(
                f"characteristic must be 0 or a prime greater than 2, got {p}"
            )
        delta = _as_integer(self.delta, "delta")
        if p:
            delta %= p
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "characteristic", p)
        object.__setattr__(self, "delta", delta)

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def is_modular(self) -> bool:
        return self.characteristic != 0

    def reduce(self, value: int) -> int:
        """Residue of value in characteristic p; the value itself in characteristic 0."""
        return value % self.characteristic if self.characteristic else value

    def with_rank(self, rank: int) -> 'Context':
        return Context(rank, self.delta, self.characteristic)

    def to_dict(self) -> dict:
        return {"n": self.rank, "delta": self.delta, "p": self.characteristic}


def _trim(entries: Tuple[int, ...]) -> Tuple[int, ...]:
    end = len(entries)
    while end and entries[end - 1] == 0:
        end -= 1
    return entries[:end]


@dataclass(frozen=True, eq=False)
class Weight:
    """Integer coordinates of an element of the weight lattice in the basis e_i.

    Trailing zeros carry no meaning: equality and hashing ignore them.
    """
    entries: Tuple[int, ...]
    rank: int = 0

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        rank = self.rank or max(len(entries), 1)
        if len(entries) > rank:
            if any(entries[rank:]):
                raise InvalidWeightError(
                    f"weight {entries} does not fit in rank {rank}"
                )
            entries = entries[:rank]
        entries = entries + (0,) * (rank - len(entries))
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "rank", rank)

    @classmethod
    def of(cls, values, rank: int = 0) -> 'Weight':
        if isinstance(values, Weight):
            return values.padded(rank) if rank else values
        if isinstance(values, Partition):
            values = values.parts
        return cls(tuple(values), rank)

    def padded(self, rank: int) -> 'Weight':
        return Weight(self.entries, rank)

    def trimmed(self) -> Tuple[int, ...]:
        return _trim(self.entries)

    @property
    def size(self) -> int:
        """|lambda|, the sum of the coordinates."""
        return sum(self.entries)

    def is_partition(self) -> bool:
        return all(x >= 0 for x in self.entries) and all(
            a >= b for a, b in zip(self.entries, self.entries[1:])
        )

    def to_partition(self) -> 'Partition':
        return Partition(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return self.rank

    def __eq__(self, other) -> bool:
        if isinstance(other, Weight):
            return self.trimmed() == other.trimmed()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.trimmed())

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.trimmed())


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing nonnegative parts, trailing zeros trimmed."""
    parts: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        parts = _trim(tuple(int(x) for x in self.parts))
        if any(x < 0 for x in parts):
            raise InvalidWeightError(f"partition {parts} has negative parts")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidWeightError(f"partition {parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self.parts)

    def part(self, index: int) -> int:
        """0-based part, zero beyond the last row."""
        return self.parts[index] if 0 <= index < len(self.parts) else 0

    def as_weight(self, rank: int = 0) -> Weight:
        return Weight(self.parts, rank or max(len(self.parts), 1))

    def contains(self, other: 'Partition') -> bool:
        """True iff other is a subdiagram of self."""
        return other.length <= self.length and all(
            a >= b for a, b in zip(self.parts, other.parts)
        )

    def is_empty(self) -> bool:
        return not self.parts

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)


EMPTY = Partition(())
