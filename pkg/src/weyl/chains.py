"""Constructive linking chains between balanced partitions (characteristic 0).

The chain first descends from lambda to nu = lambda n mu and from mu to nu,
then joins the first descent with the reverse of the second.

Descents work in doubled coordinates X_k = 2 eta_k - delta - 2(k - 1), on
which s[i,j] swaps X_i and X_j and s[i,+j] sends (X_i, X_j) to (-X_j, -X_i).
A partition has strictly decreasing X. For eta containing nu in one orbit,
the values of X(eta) missing from X(nu) form a set A with -A the values of
X(nu) missing from X(eta). Read in order of decreasing |x|, A never has
more negative than positive entries so far, which is the statement nu <= eta.

A step picks the row whose last box has minimal content among the rows
carrying A (the largest value a of A) and pairs it with the row carrying
the first negative value of A after a, or the next positive one when there
is none. One sum reflection negates the two values and diff reflections
sort X again, so the target is a partition between nu and eta in the same
orbit and A loses both values. When only a is left, the fixed zero row
takes the place of the partner.
"""

import logging
from dataclasses import dataclass
from typing import List, Set, Tuple

from ..blocks.balanced import is_balanced
from ..errors import ChainConstructionError, NotBalancedError, UnsupportedParameterError
from ..models.base import Context, Partition
from ..models.reflection import ReflectionGen, ReflectionWord
from ..weights.contents import fit_to_rank
from ..weights.partitions import intersection
from .action import apply_word

logger = logging.getLogger(__name__)


@dataclass
class ChainStep:
    """One descent step: the partitions before and after, and the generators used."""
    source: Partition
    target: Partition
    applied: Tuple[ReflectionGen, ...]


def _doubled(eta: Partition, ctx: Context) -> List[int]:
    weight = fit_to_rank(eta, ctx)
    return [2 * x - ctx.delta - 2 * k for k, x in enumerate(weight.entries)]


def _pair(missing: Set[int]) -> Tuple[int, int]:
    """The two values of A negated by the next step; 0 stands for the fixed row."""
    ordered = sorted(missing, key=abs, reverse=True)
    top = ordered[0]
    if top < 0:
        raise ChainConstructionError(f"value {top} would have to grow")
    partner = next((x for x in ordered[1:] if x < 0), None)
    if partner is None:
        partner = ordered[1] if len(ordered) > 1 else 0
    return top, partner


def _step(eta: Partition, nu: Partition, ctx: Context) -> ChainStep:
    current = _doubled(eta, ctx)
    missing = set(current) - set(_doubled(nu, ctx))
    top, partner = _pair(missing)
    if partner == 0 and 0 not in current:
        raise ChainConstructionError(f"{eta} and {nu} need an odd number of sign changes")

    i, j = sorted((current.index(top), current.index(partner)))
    applied = [ReflectionGen.sum(i + 1, j + 1)]
    current[i], current[j] = -current[j], -current[i]
    for position, value in enumerate(sorted(current, reverse=True)):
        source = current.index(value)
        if source != position:
            applied.append(ReflectionGen.diff(position + 1, source + 1))
            current[position], current[source] = current[source], current[position]

    landing = apply_word(ReflectionWord.from_applied(applied), eta, ctx)
    if not landing.is_partition():
        raise ChainConstructionError(f"step from {eta} left the partitions at {landing}")
    return ChainStep(eta, landing.to_partition(), tuple(applied))


def _descend(eta: Partition, nu: Partition, ctx: Context) -> List[ChainStep]:
    steps = []
    while eta != nu:
        step = _step(eta, nu, ctx)
        steps.append(step)
        logger.debug("chain step %s -> %s via %s", eta, step.target,
                     ReflectionWord.from_applied(step.applied))
        eta = step.target
    return steps


def linking_path(lam: Partition, mu: Partition, ctx: Context) -> List[ChainStep]:
    """The steps of the chain from lambda to mu, in order of application."""
    if ctx.is_modular:
        raise UnsupportedParameterError("linking chains are built in characteristic 0")
    if not is_balanced(lam, mu, ctx):
        raise NotBalancedError(f"{lam} and {mu} are not balanced for delta = {ctx.delta}")
    nu = intersection(lam, mu)
    down = _descend(lam, nu, ctx)
    up = [
        ChainStep(step.target, step.source, tuple(reversed(step.applied)))
        for step in reversed(_descend(mu, nu, ctx))
    ]
    return down + up


def linking_chain(lam: Partition, mu: Partition, ctx: Context) -> ReflectionWord:
    """A word w with w . lambda = mu for a balanced pair lambda, mu."""
    applied = [gen for step in linking_path(lam, mu, ctx) for gen in step.applied]
    return ReflectionWord.from_applied(applied)
