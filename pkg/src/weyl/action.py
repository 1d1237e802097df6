"""Dot action of the type D Weyl group and its affine extension on weights.

rho = (-delta/2, -delta/2 - 1, ...) has half-integer entries, so it is never
built. The reflection formulas below are its closed integer forms:

    s[i,j;r]  : lambda - (lambda_i - lambda_j - i + j - rp)(e_i - e_j)
    s[i,+j;r] : lambda - (lambda_i + lambda_j - delta + 2 - i - j - rp)(e_i + e_j)
"""

import logging
import re
from typing import Iterable, Tuple

from ..errors import InvalidWeightError, UnsupportedParameterError
from ..models.base import Context, Weight
from ..models.reflection import ReflectionGen, ReflectionWord, RootKind
from ..weights.contents import fit_to_rank

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"^s\[(\d+),(\+?)(\d+)(?:;(-?\d+))?\]$")


def reflect(gen: ReflectionGen, entries: Tuple[int, ...], delta: int, p: int = 0) -> Tuple[int, ...]:
    """Apply one generator to a coordinate tuple for an explicit integer delta."""
    if gen.j > len(entries):
        raise InvalidWeightError(
            f"generator {gen} needs rank at least {gen.j}, weight has {len(entries)}"
        )
    i, j = gen.i, gen.j
    rp = gen.shift * p
    result = list(entries)
    if gen.kind == RootKind.DIFF:
        coefficient = result[i - 1] - result[j - 1] - i + j - rp
        result[i - 1] -= coefficient
        result[j - 1] += coefficient
    else:
        coefficient = result[i - 1] + result[j - 1] - delta + 2 - i - j - rp
        result[i - 1] -= coefficient
        result[j - 1] -= coefficient
    return tuple(result)


def dot_action_shifted(gen: ReflectionGen, lam, delta: int, p: int = 0) -> Weight:
    """The generator acting through the dot action for parameter ``delta``.

    With p = 0 only unshifted generators make sense; with p > 0 the shift r
    contributes rp. ``delta`` is used as given, without reduction.
    """
    weight = Weight.of(lam)
    return Weight(reflect(gen, weight.entries, delta, p), weight.rank)


def apply_generator(gen: ReflectionGen, lam, ctx: Context) -> Weight:
    if gen.shift and not ctx.is_modular:
        raise UnsupportedParameterError(
            f"affine generator {gen} is not defined in characteristic 0"
        )
    weight = fit_to_rank(lam, ctx)
    return Weight(reflect(gen, weight.entries, ctx.delta, ctx.characteristic), ctx.rank)


def apply_word(word: ReflectionWord, lam, ctx: Context) -> Weight:
    """Apply the word rightmost generator first."""
    weight = fit_to_rank(lam, ctx)
    for gen in word.applied_order():
        weight = apply_generator(gen, weight, ctx)
    return weight


def translation(i: int, j: int, r: int, lam, ctx: Context) -> Weight:
    """s[i,+j;r] after s[i,+j]; equals lambda + rp(e_i + e_j)."""
    word = ReflectionWord((ReflectionGen.sum(i, j, r), ReflectionGen.sum(i, j)))
    return apply_word(word, lam, ctx)


def generators(ctx: Context, shifts: Iterable[int] = (0,)):
    """All generators of rank ctx.rank with the given affine levels."""
    shifts = list(shifts)
    for i in range(1, ctx.rank + 1):
        for j in range(i + 1, ctx.rank + 1):
            for r in shifts:
                yield ReflectionGen(RootKind.DIFF, i, j, r)
                yield ReflectionGen(RootKind.SUM, i, j, r)


def parse_word(text: str) -> ReflectionWord:
    """Parse whitespace-separated tokens s[i,j], s[i,+j], s[i,j;r], s[i,+j;r]."""
    gens = []
    for token in text.split():
        match = _TOKEN.match(token)
        if not match:
            raise InvalidWeightError(f"not a reflection token: {token!r}")
        i, plus, j, level = match.groups()
        kind = RootKind.SUM if plus else RootKind.DIFF
        gens.append(ReflectionGen(kind, int(i), int(j), int(level or 0)))
    return ReflectionWord(tuple(gens))


def format_word(word: ReflectionWord) -> str:
    return str(word)
