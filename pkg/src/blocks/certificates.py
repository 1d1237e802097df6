"""Certificates for affine orbits that split into several blocks.

A certificate is a pair lambda |- n, mu |- n-2 where mu removes two boxes
from one row of lambda, both are p-cores, mu lies in the W_p-orbit of
lambda, and no other label of B_n lies in that orbit. Removing two boxes
from a row moves one bead from runner 1 to runner p-1, so the orbit is
preserved only through the runner pair {1, p-1}, and there must be a black
bead on runner 0.

With only lambda and mu in the orbit, the two would be linked only through
a Specht factor of the two-box induction of mu; such factors add two boxes
in distinct rows, and lambda, being a p-core, is alone in its symmetric
group block. So lambda^T and mu^T label different blocks.
"""

import logging
from itertools import product
from typing import List, Optional

from ..abacus.cores import core_degree, enumerate_cores, is_p_core, runner_occupancy
from ..abacus.runners import (
    black_beads_on_runner, choose_bead_count, encode, orbit_equiv_abacus, runner_counts
)
from ..config import get_config
from ..errors import UnsupportedParameterError
from ..models.base import Context, Partition
from ..models.block import SplitCertificate
from ..weyl.orbits import orbit_member_affine, verify_witness
from .obstructions import pieri_two_box_additions

logger = logging.getLogger(__name__)


def _two_boxes_from_row(lam: Partition, mu: Partition, row: int) -> bool:
    if row < 1 or row > lam.length:
        return False
    expected = list(lam.parts)
    expected[row - 1] -= 2
    return tuple(x for x in expected if x) == mu.parts and (
        lam.part(row - 1) - 2 >= lam.part(row)
    )


def orbit_labels_below(lam: Partition, ctx: Context, b: int) -> List[tuple]:
    """Runner-count vectors of orbit members of lambda reaching a degree <= n, parity n.

    Every runner-count vector with the orbit's runner-0 count and pair totals
    is reached by partitions of degree core_degree + p*m, m >= 0.
    Assumes a black bead on runner 0, where condition (iii) is void.
    """
    p = ctx.p
    counts = runner_occupancy(lam, p, b)
    totals = [counts[l] + counts[p - l] for l in range(1, (p - 1) // 2 + 1)]
    reached = []
    for choice in product(*(range(total + 1) for total in totals)):
        vector = [counts[0]] + [0] * (p - 1)
        for l, (k, total) in enumerate(zip(choice, totals), start=1):
            vector[l] = k
            vector[p - l] = total - k
        degree = core_degree(vector, p)
        if (degree - ctx.rank) % 2:
            degree += p
        if degree <= ctx.rank:
            reached.append(tuple(vector))
    return reached


def check_split_certificate(cand: SplitCertificate) -> bool:
    """True iff every defining property of the certificate holds."""
    ctx = cand.context
    lam, mu = cand.lam, cand.mu
    if not ctx.is_modular:
        return False
    if lam.degree != ctx.rank or mu.degree != ctx.rank - 2:
        return False
    if not _two_boxes_from_row(lam, mu, cand.removed_row):
        return False
    if lam in pieri_two_box_additions(mu):
        return False
    p = ctx.p
    if not (is_p_core(lam, p) and is_p_core(mu, p)):
        return False
    if cand.witness is None or not verify_witness(lam, mu, cand.witness, ctx):
        return False
    if not orbit_equiv_abacus(lam, mu, ctx):
        return False
    b = choose_bead_count(ctx, lam, mu)
    if black_beads_on_runner(encode(lam, b, ctx), 0) == 0:
        return False
    expected = {runner_counts(encode(lam, b, ctx)), runner_counts(encode(mu, b, ctx))}
    others = set(orbit_labels_below(lam, ctx, b)) - expected
    if others:
        logger.debug("%s / %s: %d other labels share the orbit", lam, mu, len(others))
        return False
    return True


def _candidate(lam: Partition, row: int, p: int, delta: int) -> Optional[SplitCertificate]:
    ctx = Context(lam.degree, delta, p)
    parts = list(lam.parts)
    parts[row - 1] -= 2
    mu = Partition(tuple(parts))
    b = choose_bead_count(ctx, lam, mu)
    if (lam.part(row - 1) + b - row) % p != 1:
        return None
    if not is_p_core(mu, p):
        return None
    witness = orbit_member_affine(lam, mu, ctx)
    if witness is None:
        return None
    return SplitCertificate(lam, mu, ctx, row, True, True, witness)


def search_split_certificates(ctx: Context, max_n: Optional[int] = None) -> List[SplitCertificate]:
    """All certified pairs with |lambda| <= max_n for the given p and delta."""
    if not ctx.is_modular:
        raise UnsupportedParameterError("split certificates live in characteristic p")
    if max_n is None:
        max_n = get_config().search.certificate_max_n
    found = []
    for lam in enumerate_cores(ctx.p, max_n):
        if lam.degree < 2:
            continue
        for row in range(1, lam.length + 1):
            if lam.part(row - 1) - 2 < lam.part(row):
                continue
            cand = _candidate(lam, row, ctx.p, ctx.delta)
            if cand is not None and check_split_certificate(cand):
                found.append(cand)
    logger.info("p=%d delta=%d: %d split certificates up to n=%d", ctx.p, ctx.delta, len(found), max_n)
    return found
