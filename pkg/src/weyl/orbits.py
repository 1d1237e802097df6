"""Orbit membership for the finite and affine dot actions.

mu lies in the orbit of lambda iff there is a permutation pi and signs sigma
with d(sigma) even such that, for each row i, either sigma(i) = +1 and
c(mu)_i = c(lambda)_pi(i), or sigma(i) = -1 and c(mu)_i + c(lambda)_pi(i) =
2 - delta. In characteristic p the equalities hold mod p and |lambda| - |mu|
must be even.

Witnesses are found by class counting. The map x -> 2 - delta - x pairs the
content values into classes {x, 2 - delta - x}; a class with a + a' rows of
lambda and b + b' rows of mu is matchable iff a + a' = b + b', and the number
of -1 labels it needs is congruent to a - b mod 2 whatever matching is used.
Only the fixed class (2x = 2 - delta) takes either label, so the parity of
d(sigma) can be repaired exactly when that class is occupied.
"""

from collections import Counter, defaultdict, deque
from itertools import permutations, product
import logging
import math
from typing import Dict, List, Optional, Set, Tuple

from ..config import get_config
from ..errors import ChainConstructionError, InvalidWeightError, UnsupportedParameterError
from ..models.base import Context, Weight
from ..models.reflection import OrbitWitness, ReflectionGen, ReflectionWord, RootKind
from ..weights.contents import content_sequence, fit_to_rank
from .action import generators, reflect

logger = logging.getLogger(__name__)


def _involution_target(ctx: Context) -> int:
    return ctx.reduce(2 - ctx.delta)


def _fixed_value(ctx: Context) -> Optional[int]:
    """The content value x with 2x = 2 - delta, if any."""
    target = 2 - ctx.delta
    if ctx.is_modular:
        return (target * pow(2, -1, ctx.p)) % ctx.p
    return target // 2 if target % 2 == 0 else None


def _class_witness(lam_contents: Tuple[int, ...], mu_contents: Tuple[int, ...],
                   ctx: Context) -> Optional[OrbitWitness]:
    target = _involution_target(ctx)
    fixed = _fixed_value(ctx)
    lam_values = [ctx.reduce(c) for c in lam_contents]
    mu_values = [ctx.reduce(c) for c in mu_contents]
    a = Counter(lam_values)
    b = Counter(mu_values)

    def partner(x: int) -> int:
        return ctx.reduce(target - x)

    minus_needed: Dict[int, int] = defaultdict(int)
    parity = 0
    representatives = {min(x, partner(x)) for x in set(a) | set(b)}
    for x in sorted(representatives):
        y = partner(x)
        if x == y:
            if a[x] != b[x]:
                return None
            continue
        if a[x] + a[y] != b[x] + b[y]:
            return None
        m = max(0, b[x] - a[x])
        minus_needed[x] = m
        minus_needed[y] = a[x] - b[x] + m
        parity ^= (a[x] - b[x]) & 1

    if parity:
        if fixed is None or a[fixed] == 0:
            return None
        minus_needed[fixed] = 1

    pools: Dict[int, deque] = defaultdict(deque)
    for row, value in enumerate(lam_values, start=1):
        pools[value].append(row)

    pi: List[int] = []
    sigma: List[int] = []
    for value in mu_values:
        if minus_needed[value] > 0:
            minus_needed[value] -= 1
            pi.append(pools[partner(value)].popleft())
            sigma.append(-1)
        else:
            pi.append(pools[value].popleft())
            sigma.append(1)
    return OrbitWitness(tuple(pi), tuple(sigma))


def verify_witness(lam, mu, witness: OrbitWitness, ctx: Context) -> bool:
    """Re-check the defining congruences of a witness."""
    cl = content_sequence(lam, ctx)
    cm = content_sequence(mu, ctx)
    if len(witness.pi) != ctx.rank or witness.d_sigma % 2:
        return False
    target = 2 - ctx.delta
    for i, (image, sign) in enumerate(zip(witness.pi, witness.sigma)):
        if sign == 1:
            gap = cm[i] - cl[image - 1]
        else:
            gap = cm[i] + cl[image - 1] - target
        if ctx.reduce(gap) != 0:
            return False
    return True


def orbit_member_finite(lam, mu, ctx: Context) -> Optional[OrbitWitness]:
    """Witness that mu lies in the W-orbit of lambda, or None."""
    if ctx.is_modular:
        raise UnsupportedParameterError("orbit_member_finite needs characteristic 0")
    witness = _class_witness(content_sequence(lam, ctx), content_sequence(mu, ctx), ctx)
    logger.debug("finite orbit %s ~ %s: %s", Weight.of(lam), Weight.of(mu), witness)
    return witness


def orbit_member_affine(lam, mu, ctx: Context) -> Optional[OrbitWitness]:
    """Witness that mu lies in the W_p-orbit of lambda, or None."""
    if not ctx.is_modular:
        raise UnsupportedParameterError("orbit_member_affine needs characteristic p")
    lam_w = fit_to_rank(lam, ctx)
    mu_w = fit_to_rank(mu, ctx)
    if (lam_w.size - mu_w.size) % 2:
        return None
    witness = _class_witness(content_sequence(lam_w, ctx), content_sequence(mu_w, ctx), ctx)
    logger.debug("affine orbit %s ~ %s: %s", lam_w, mu_w, witness)
    return witness


def orbit_member(lam, mu, ctx: Context) -> Optional[OrbitWitness]:
    """Finite or affine membership according to the characteristic."""
    if ctx.is_modular:
        return orbit_member_affine(lam, mu, ctx)
    return orbit_member_finite(lam, mu, ctx)


def orbit_key(lam, ctx: Context) -> Tuple:
    """Invariant shared by two weights exactly when they lie in one orbit.

    Row counts per content class, the parity of rows sitting on the smaller
    value of each class (dropped when the fixed class is occupied), and in
    characteristic p the parity of |lambda|.
    """
    weight = fit_to_rank(lam, ctx)
    target = _involution_target(ctx)
    fixed = _fixed_value(ctx)
    values = [ctx.reduce(c) for c in content_sequence(weight, ctx)]
    classes = Counter(min(x, ctx.reduce(target - x)) for x in values)
    parity = None
    if fixed is None or fixed not in values:
        parity = sum(1 for x in values if x < ctx.reduce(target - x)) % 2
    size = weight.size % 2 if ctx.is_modular else None
    return tuple(sorted(classes.items())), parity, size


def brute_force_witness(lam, mu, ctx: Context) -> Optional[OrbitWitness]:
    """Exhaustive search over permutations and sign labellings."""
    limit = get_config().search.brute_force_max_rank + 2
    if ctx.rank > limit:
        raise UnsupportedParameterError(
            f"exhaustive witness search is limited to rank {limit}, got {ctx.rank}"
        )
    lam_w = fit_to_rank(lam, ctx)
    mu_w = fit_to_rank(mu, ctx)
    if ctx.is_modular and (lam_w.size - mu_w.size) % 2:
        return None
    cl = content_sequence(lam_w, ctx)
    cm = content_sequence(mu_w, ctx)
    target = 2 - ctx.delta

    for perm in permutations(range(ctx.rank)):
        options = []
        for i, k in enumerate(perm):
            labels = []
            if ctx.reduce(cm[i] - cl[k]) == 0:
                labels.append(1)
            if ctx.reduce(cm[i] + cl[k] - target) == 0:
                labels.append(-1)
            if not labels:
                break
            options.append(labels)
        else:
            for sigma in product(*options):
                if sigma.count(-1) % 2 == 0:
                    return OrbitWitness(tuple(k + 1 for k in perm), sigma)
    return None


def _shift_range(ctx: Context, box_bound: int) -> range:
    if not ctx.is_modular:
        return range(0, 1)
    reach = 4 * box_bound + abs(ctx.delta) + 2 * ctx.rank + 2
    levels = math.ceil(reach / ctx.p) + 1
    return range(-levels, levels + 1)


def orbit_closure(lam, ctx: Context, box_bound: int) -> Set[Weight]:
    """Weights reachable from lambda by generators without leaving the box.

    Breadth-first search; every coordinate of every visited weight lies in
    [-box_bound, box_bound].
    """
    start = fit_to_rank(lam, ctx)
    if any(abs(x) > box_bound for x in start.entries):
        raise InvalidWeightError(f"weight {start} lies outside the box of size {box_bound}")

    gens = list(generators(ctx, _shift_range(ctx, box_bound)))
    seen = {start.entries}
    frontier = deque([start.entries])
    while frontier:
        current = frontier.popleft()
        for gen in gens:
            image = reflect(gen, current, ctx.delta, ctx.characteristic)
            if image in seen or any(abs(x) > box_bound for x in image):
                continue
            seen.add(image)
            frontier.append(image)
    logger.debug("orbit closure of %s within %d: %d weights", start, box_bound, len(seen))
    return {Weight(entries, ctx.rank) for entries in seen}


def word_from_witness(lam, mu, witness: OrbitWitness, ctx: Context) -> ReflectionWord:
    """Factor the finite-orbit element taking lambda to mu into generators.

    Works in doubled coordinates X = 2(lambda + rho), on which s[i,j] swaps
    X_i and X_j and s[i,+j] sends (X_i, X_j) to (-X_j, -X_i).
    """
    if ctx.is_modular:
        raise UnsupportedParameterError("word_from_witness needs characteristic 0")
    if not verify_witness(lam, mu, witness, ctx):
        raise InvalidWeightError(f"witness {witness} does not relate {lam} and {mu}")
    n = ctx.rank
    lam_w = fit_to_rank(lam, ctx)
    mu_w = fit_to_rank(mu, ctx)
    current = [2 * x - ctx.delta - 2 * k for k, x in enumerate(lam_w.entries)]
    wanted = [2 * x - ctx.delta - 2 * k for k, x in enumerate(mu_w.entries)]
    applied: List[ReflectionGen] = []

    def act(gen: ReflectionGen):
        i, j = gen.i - 1, gen.j - 1
        if gen.kind == RootKind.DIFF:
            current[i], current[j] = current[j], current[i]
        else:
            current[i], current[j] = -current[j], -current[i]
        applied.append(gen)

    for i in range(n):
        goal = wanted[i]
        if current[i] == goal:
            continue
        same = next((j for j in range(i + 1, n) if current[j] == goal), None)
        if same is not None:
            act(ReflectionGen.diff(i + 1, same + 1))
            continue
        opposite = next((j for j in range(i + 1, n) if current[j] == -goal), None)
        if opposite is not None:
            act(ReflectionGen.sum(i + 1, opposite + 1))
            continue
        if current[i] != -goal:
            raise ChainConstructionError(f"no coordinate matches {goal} at row {i + 1}")
        if i + 1 < n:
            # flip the signs of rows i and k together
            k = next((j for j in range(i + 1, n) if current[j] == 0), i + 1)
            act(ReflectionGen.diff(i + 1, k + 1))
            act(ReflectionGen.sum(i + 1, k + 1))
            continue
        zero = next((j for j in range(i) if current[j] == 0), None)
        if zero is None:
            raise ChainConstructionError("sign of the last row cannot be corrected")
        act(ReflectionGen.sum(zero + 1, i + 1))
        act(ReflectionGen.diff(zero + 1, i + 1))

    return ReflectionWord.from_applied(applied)
