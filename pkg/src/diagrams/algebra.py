"""Exact arithmetic in the Brauer algebra B_n(delta) on the diagram basis."""

import logging
from fractions import Fraction
from typing import Dict, Iterable, Optional

from ..errors import DiagramError, UnsupportedParameterError
from ..models.base import Context
from ..models.diagram import AlgebraElement, BrauerDiagram, Scalar
from .brauer import compose, cup_cap, identity, x_ij

logger = logging.getLogger(__name__)


def normalize(value, ctx: Context) -> Scalar:
    """A Fraction in characteristic 0, a residue mod p otherwise."""
    if not ctx.is_modular:
        return Fraction(value)
    fraction = Fraction(value)
    if fraction.denominator % ctx.p == 0:
        raise UnsupportedParameterError(f"{value} has no image modulo {ctx.p}")
    return fraction.numerator * pow(fraction.denominator, -1, ctx.p) % ctx.p


def inverse(value, ctx: Context) -> Scalar:
    value = normalize(value, ctx)
    if value == 0:
        raise UnsupportedParameterError("cannot invert zero")
    if ctx.is_modular:
        return pow(value, -1, ctx.p)
    return 1 / value


def element(ctx: Context, terms: Optional[Dict[BrauerDiagram, object]] = None) -> AlgebraElement:
    """Element of B_n(delta) with normalized, nonzero coefficients."""
    cleaned = {}
    for diagram, coefficient in (terms or {}).items():
        if diagram.n != ctx.rank:
            raise DiagramError(f"diagram of size {diagram.n} in B_{ctx.rank}")
        value = normalize(coefficient, ctx)
        if value:
            cleaned[diagram] = value
    return AlgebraElement(ctx.rank, ctx, cleaned)


def basis(diagram: BrauerDiagram, ctx: Context) -> AlgebraElement:
    return element(ctx, {diagram: 1})


def one(ctx: Context) -> AlgebraElement:
    return basis(identity(ctx.rank), ctx)


def _accumulate(target: Dict[BrauerDiagram, Scalar], diagram: BrauerDiagram, value, ctx: Context):
    total = normalize(target.get(diagram, 0) + value, ctx)
    if total:
        target[diagram] = total
    else:
        target.pop(diagram, None)


def add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.n != y.n:
        raise DiagramError(f"cannot add elements of B_{x.n} and B_{y.n}")
    terms = dict(x.terms)
    for diagram, coefficient in y.terms.items():
        _accumulate(terms, diagram, coefficient, x.context)
    return AlgebraElement(x.n, x.context, terms)


def scale(x: AlgebraElement, factor) -> AlgebraElement:
    return element(x.context, {d: factor * c for d, c in x.terms.items()})


def total(elements: Iterable[AlgebraElement], ctx: Context) -> AlgebraElement:
    result = element(ctx)
    for x in elements:
        result = add(result, x)
    return result


def multiply(x: AlgebraElement, y: AlgebraElement, ctx: Context) -> AlgebraElement:
    """Bilinear product; each pair of diagrams contributes delta^loops times their concatenation."""
    if x.n != y.n:
        raise DiagramError(f"cannot multiply elements of B_{x.n} and B_{y.n}")
    terms: Dict[BrauerDiagram, Scalar] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            loops, c = compose(a, b)
            _accumulate(terms, c, ca * cb * ctx.delta ** loops, ctx)
    return AlgebraElement(x.n, ctx, terms)


def e_n(ctx: Context) -> AlgebraElement:
    """The idempotent (1/delta) U, U the arcs on the last two strands."""
    if ctx.rank < 2:
        raise UnsupportedParameterError("e_n needs n >= 2")
    if ctx.delta == 0:
        raise UnsupportedParameterError("e_n is undefined for delta = 0")
    return element(ctx, {cup_cap(ctx.rank): inverse(ctx.delta, ctx)})


def build_Tn(ctx: Context) -> AlgebraElement:
    """T_n, the sum of X_{i,j} over 1 <= i < j <= n."""
    n = ctx.rank
    if n < 2:
        raise UnsupportedParameterError("T_n needs n >= 2")
    result = element(ctx, {x_ij(n, i, j): 1 for i in range(1, n + 1) for j in range(i + 1, n + 1)})
    logger.debug("T_%d has %d terms", n, len(result))
    return result
