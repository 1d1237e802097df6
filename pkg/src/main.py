#!/usr/bin/env python3
"""
Brauer blocks - Command Line Interface

Orbit membership, block decompositions, linking chains, abaci and
diagram arithmetic for the Brauer algebra B_n(delta).
"""

import argparse
import json
import logging
import re
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from .abacus import (
    check_bead_count, choose_bead_count, compact, encode, is_p_core, p_core, render, runner_counts
)
from .blocks import (
    block_decomposition_char0, content_obstruction, content_scalar, is_balanced,
    orbit_decomposition_affine, same_block_char0, search_split_certificates
)
from .config import configure_logging, get_config, load_config
from .diagrams import build_Tn, e_n, element, multiply, parse_diagram
from .errors import BrauerError, InvalidContextError
from .models.base import Context, Partition, Weight
from .projection import render_projection_svg
from .weights import conjugate, parse_partition, parse_weight
from .weyl import apply_word, linking_chain, orbit_member, parse_word
from .weyl.orbits import orbit_member_affine

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2

_NEGATIVE_LIST = re.compile(r"^-\d+(,-?\d+)*$")


@dataclass
class Outcome:
    """Result of one query, ready for text or JSON output."""
    context: Dict[str, Any]
    result: Any
    text: str
    witness: Any = None
    positive: bool = True


def emit_json(query: Dict[str, Any], outcome: Outcome, indent: Optional[int] = None) -> str:
    """Stable schema: query, context, result, witness, in that order."""
    payload = {
        "query": query,
        "context": outcome.context,
        "result": outcome.result,
        "witness": outcome.witness,
    }
    return json.dumps(payload, indent=indent, ensure_ascii=False)


def protect_negative_lists(argv: List[str]) -> List[str]:
    """Keep "-4,2,5" from being read as an option."""
    return [" " + token if _NEGATIVE_LIST.match(token) else token for token in argv]


class BlocksCLI:
    """Command-line interface for the blocks toolkit."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.config = get_config()
        self.labels = args.labels or self.config.output.labels

    # -- argument helpers -------------------------------------------------

    def _label(self, text: str) -> Partition:
        lam = parse_partition(text)
        return conjugate(lam) if self.labels == "transpose" else lam

    def _context(self, rank: Optional[int], delta: Optional[int] = None) -> Context:
        args = self.args
        delta = args.delta if delta is None else delta
        if delta is None:
            raise InvalidContextError("--delta is required")
        if rank is None:
            raise InvalidContextError("--n is required")
        return Context(rank, delta, args.p)

    def _pair_context(self, lam: Partition, mu: Partition) -> Context:
        rank = self.args.n if self.args.n is not None else max(lam.degree, mu.degree, 1)
        return self._context(rank)

    def _pairs(self) -> List[Tuple[str, str]]:
        args = self.args
        if args.pairs:
            pairs = []
            with open(args.pairs) as f:
                for line in f:
                    line = line.strip()
                    if not line or line.startswith("#"):
                        continue
                    if ";" not in line:
                        raise InvalidContextError(f"expected 'lambda;mu', got {line!r}")
                    first, second = line.split(";", 1)
                    pairs.append((first, second))
            return pairs
        if len(args.items) != 2:
            raise InvalidContextError(f"{args.command} needs two labels or --pairs FILE")
        return [(args.items[0], args.items[1])]

    # -- pair queries -----------------------------------------------------

    def orbit(self, first: str, second: str) -> Outcome:
        args = self.args
        if self.labels == "transpose":
            lam, mu = Weight.of(self._label(first)), Weight.of(self._label(second))
        else:
            lam, mu = parse_weight(first), parse_weight(second)
        rank = args.n if args.n is not None else max(len(lam), len(mu), 1)
        ctx = self._context(rank)
        witness = orbit_member(lam, mu, ctx)
        text = f"{first.strip()} ~ {second.strip()}: {'in orbit' if witness else 'not in orbit'}"
        if witness:
            text += f"\n  pi    = {list(witness.pi)}\n  sigma = {list(witness.sigma)}"
        return Outcome(ctx.to_dict(), {"in_orbit": witness is not None}, text,
                       witness.to_dict() if witness else None, witness is not None)

    def balanced(self, first: str, second: str) -> Outcome:
        lam, mu = self._label(first), self._label(second)
        ctx = self._pair_context(lam, mu)
        value = is_balanced(lam, mu, ctx)
        return Outcome(ctx.to_dict(), {"balanced": value},
                       f"{lam} / {mu}: {'balanced' if value else 'not balanced'}", None, value)

    def block(self, first: str, second: str) -> Outcome:
        lam, mu = self._label(first), self._label(second)
        ctx = self._pair_context(lam, mu)
        if ctx.is_modular:
            witness = orbit_member_affine(lam, mu, ctx)
            value, kind = witness is not None, "orbit-upper-bound"
            witness = witness.to_dict() if witness else None
        else:
            value, kind, witness = same_block_char0(lam, mu, ctx), "exact-blocks", None
        text = f"{lam} / {mu}: {'same' if value else 'different'} {'class' if ctx.is_modular else 'block'}"
        return Outcome(ctx.to_dict(), {"same_block": value, "kind": kind}, text, witness, value)

    def obstruction(self, first: str, second: str) -> Outcome:
        lam, mu = self._label(first), self._label(second)
        if lam.degree < mu.degree:
            lam, mu = mu, lam
        ctx = self._pair_context(lam, mu)
        scalar = content_scalar(lam, mu, ctx)
        vanishes = content_obstruction(lam, mu, ctx)
        text = f"{lam} / {mu}: content scalar {scalar} ({'vanishes' if vanishes else 'obstructs'})"
        return Outcome(ctx.to_dict(), {"scalar": scalar, "vanishes": vanishes}, text, None, vanishes)

    # -- single queries ---------------------------------------------------

    def blocks(self) -> Outcome:
        ctx = self._context(self.args.n)
        if ctx.is_modular:
            decomposition = orbit_decomposition_affine(ctx)
        else:
            decomposition = block_decomposition_char0(ctx)
        return Outcome(ctx.to_dict(), decomposition.to_dict(), decomposition.to_text().rstrip("\n"))

    def chain(self) -> Outcome:
        first, second = self._single_pair()
        lam, mu = self._label(first), self._label(second)
        ctx = self._pair_context(lam, mu)
        word = linking_chain(lam, mu, ctx)
        landing = apply_word(word, lam, ctx)
        text = f"{word}\n  {lam} -> {landing}"
        return Outcome(ctx.to_dict(), {"word": str(word), "length": len(word)}, text)

    def abacus(self) -> Outcome:
        args = self.args
        if not args.items:
            raise InvalidContextError("abacus needs a partition")
        lam = self._label(args.items[0])
        if not args.p:
            raise InvalidContextError("abacus needs --p")
        delta = args.delta
        if delta is None and args.b is not None:
            delta = (2 - 2 * args.b) % args.p
        rank = args.n if args.n is not None else max(lam.degree, 1)
        ctx = self._context(rank, delta)
        if args.b is None:
            b = choose_bead_count(ctx, lam)
        else:
            b = args.b
            check_bead_count(ctx, b, lam)
        abacus = encode(lam, b, ctx)
        counts = runner_counts(abacus)
        p = ctx.p
        totals = [counts[l] + counts[p - l] for l in range(1, (p - 1) // 2 + 1)]
        summary = f"runner 0: {counts[0]}; " + "; ".join(
            f"runners {l}/{p - l}: {total}" for l, total in enumerate(totals, start=1)
        )
        result = {
            "compact": compact(abacus),
            "runner_counts": list(counts),
            "pair_totals": totals,
        }
        return Outcome(ctx.to_dict(), result, f"{render(abacus)}\n{summary}")

    def pcore(self) -> Outcome:
        args = self.args
        if not args.items or not args.p:
            raise InvalidContextError("pcore needs a partition and --p")
        lam = self._label(args.items[0])
        core = p_core(lam, args.p)
        value = is_p_core(lam, args.p)
        context = {"n": lam.degree}
        if args.delta is not None:
            context["delta"] = args.delta % args.p
        context["p"] = args.p
        text = f"{args.p}-core of {lam}: {str(core) or '∅'}" + (" (already a core)" if value else "")
        return Outcome(context, {"core": str(core), "is_core": value}, text, None, value)

    def certify(self) -> Outcome:
        args = self.args
        ctx = self._context(args.n or 1)
        found = search_split_certificates(ctx, args.max_n)
        lines = [f"{c.lam} / {c.mu} (row {c.removed_row})" for c in found]
        context = {"n": None, "delta": ctx.delta, "p": ctx.p}
        text = "\n".join(lines) if lines else "no certificates found"
        return Outcome(context, [c.to_dict() for c in found], text, None, bool(found))

    def diagram(self) -> Outcome:
        args = self.args
        if not args.items:
            raise InvalidContextError("diagram needs one of: product A B, e_n, T_n")
        ctx = self._context(args.n)
        mode, operands = args.items[0].strip(), args.items[1:]
        if mode == "product":
            if len(operands) != 2:
                raise InvalidContextError("product needs two diagrams")
            x, y = (element(ctx, {parse_diagram(text, ctx.rank): 1}) for text in operands)
            value = multiply(x, y, ctx)
            result = value.to_dict()
        elif mode == "e_n":
            value = e_n(ctx)
            result = value.to_dict()
            result["idempotent"] = multiply(value, value, ctx).terms == value.terms
        elif mode == "T_n":
            value = build_Tn(ctx)
            result = value.to_dict()
        else:
            raise InvalidContextError(f"unknown diagram mode {mode!r}")
        text = "\n".join(f"{t['coefficient']} * {t['diagram']}" for t in value.to_dict()["terms"]) or "0"
        return Outcome(ctx.to_dict(), result, text)

    def project(self) -> Outcome:
        args = self.args
        ctx = self._context(args.n)
        weight = parse_weight(args.items[0], ctx.rank) if args.items else None
        window = None
        if args.window:
            lo, hi = (int(x) for x in args.window.split(","))
            window = (lo, hi)
        svg = render_projection_svg(args.i, args.j, ctx, window, weight)
        if args.out:
            with open(args.out, "w") as f:
                f.write(svg)
            text = f"wrote {args.out}"
        else:
            text = svg
        return Outcome(ctx.to_dict(), {"plane": [args.i, args.j], "out": args.out}, text)

    def word(self) -> Outcome:
        args = self.args
        if len(args.items) != 2:
            raise InvalidContextError("word needs a word and a weight")
        word = parse_word(args.items[0])
        rank = args.n if args.n is not None else max(
            [len(parse_weight(args.items[1]))] + [g.j for g in word]
        )
        ctx = self._context(rank)
        image = apply_word(word, parse_weight(args.items[1], rank), ctx)
        return Outcome(ctx.to_dict(), {"weight": str(image)}, str(image))

    def _single_pair(self) -> Tuple[str, str]:
        if len(self.args.items) != 2:
            raise InvalidContextError(f"{self.args.command} needs two labels")
        return self.args.items[0], self.args.items[1]

    # -- dispatch ---------------------------------------------------------

    def run(self) -> int:
        args = self.args
        pair_queries: Dict[str, Callable[[str, str], Outcome]] = {
            "orbit": self.orbit,
            "balanced": self.balanced,
            "block": self.block,
            "obstruction": self.obstruction,
        }
        if args.command in pair_queries:
            outcomes = [
                (first, second, pair_queries[args.command](first, second))
                for first, second in self._pairs()
            ]
        else:
            outcome = getattr(self, args.command)()
            outcomes = [(None, None, outcome)]

        indent = self.config.output.json_indent
        for first, second, outcome in outcomes:
            if args.json:
                query = {"command": args.command, "args": self._query_args(first, second)}
                print(emit_json(query, outcome, indent))
            else:
                print(outcome.text)

        negative = any(not outcome.positive for _, _, outcome in outcomes)
        return EXIT_NEGATIVE if args.strict and negative else EXIT_OK

    def _query_args(self, first: Optional[str], second: Optional[str]) -> List[str]:
        if first is not None:
            return [first.strip(), second.strip()]
        return [item.strip() for item in self.args.items]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="Rank n of B_n(delta)")
    common.add_argument("--delta", type=int, help="Parameter delta")
    common.add_argument("--p", type=int, default=0, help="Characteristic (0 or a prime > 2)")
    common.add_argument("--b", type=int, help="Bead count override, 2b = 2 - delta mod p")
    common.add_argument("--json", action="store_true", help="Machine-readable output")
    common.add_argument("--strict", action="store_true", help="Exit 1 on a negative answer")
    common.add_argument("--labels", choices=["geometric", "transpose"],
                        help="Inputs are weights lambda or simple-module labels lambda^T")
    common.add_argument("--pairs", help="File with one 'lambda;mu' pair per line")
    common.add_argument("--out", help="Output file for SVG")
    common.add_argument("--config", help="JSON configuration file")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging")

    parser = argparse.ArgumentParser(
        prog="brauer-blocks",
        description="Blocks of the Brauer algebra via type-D Weyl group orbits"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "orbit": "Finite or affine orbit membership with witness",
        "balanced": "Balanced-pair test (characteristic 0)",
        "block": "Same-block query",
        "blocks": "Decomposition of the label set",
        "chain": "Reflection word linking a balanced pair",
        "abacus": "Abacus of a partition with runner counts",
        "pcore": "p-core of a partition",
        "obstruction": "Content scalar of a pair",
        "certify": "Search split certificates",
        "diagram": "Products, e_n and T_n in B_n(delta)",
        "project": "SVG projection onto the (i, j) plane",
        "word": "Apply a reflection word to a weight",
    }
    for name, text in helps.items():
        command = sub.add_parser(name, parents=[common], help=text)
        command.add_argument("items", nargs="*", help="Weights, partitions, diagrams or words")
        if name == "certify":
            command.add_argument("--max-n", type=int, dest="max_n", help="Largest |lambda| searched")
        if name == "project":
            command.add_argument("--i", type=int, default=1)
            command.add_argument("--j", type=int, default=2)
            command.add_argument("--window", help="lo,hi coordinate range")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(protect_negative_lists(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID

    config = load_config(args.config) if args.config else get_config()
    if args.verbose:
        config.logging.level = "DEBUG"
    configure_logging(config.logging)

    try:
        return BlocksCLI(args).run()
    except (BrauerError, OSError) as exc:
        logger.debug("query failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
