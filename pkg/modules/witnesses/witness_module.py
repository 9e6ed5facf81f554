import argparse
from pathlib import Path
from typing import List

from modules.base_module import EnhancedBaseModule
from modules.errors import VerificationMismatch
from modules.group_core import make_group
from modules.permgroup import contains
from modules.witnesses.completion import odd_parity_generator, three_cycle_any, three_cycle_odd
from modules.witnesses.movers import mover_two_transitive, transposition_any
from modules.witnesses.proof_context import build_proof_context
from modules.witnesses.witness_io import format_witness, write_witness_file
from modules.witnesses.witness_types import ProofContext, WitnessWord


class WitnessModule(EnhancedBaseModule):
    @property
    def name(self) -> str:
        return "Witness"

    @property
    def commands(self) -> List[str]:
        return ["witness", "w"]

    @property
    def example(self) -> str:
        return "witness move --group cyclic:6 --points 0 3 1 5"

    def add_arguments(self, parser: argparse.ArgumentParser, common: argparse.ArgumentParser):
        actions = parser.add_subparsers(dest="action", required=True)
        specs = {
            "move": ("x x2 y y2 with x -> y and x2 -> y2", 4),
            "transposition": ("a b, for groups of even order", 2),
            "anycycle": ("a b c, for groups of odd order", 3),
        }
        for action, (points_help, count) in specs.items():
            sub = actions.add_parser(action, parents=[common], help=f"word for points {points_help}")
            sub.add_argument("--group", required=True)
            sub.add_argument("--points", type=int, nargs=count, required=True, metavar="P", help=points_help)
            sub.add_argument("--out", type=Path)
        three = actions.add_parser("threecycle", parents=[common], help="3-cycle inside one block (odd order)")
        three.add_argument("--group", required=True)
        three.add_argument("--block", type=int, default=0)
        three.add_argument("--coords", type=int, nargs=2, default=[0, 1], metavar="C")
        three.add_argument("--out", type=Path)
        odd = actions.add_parser("odd", parents=[common], help="generator of odd parity")
        odd.add_argument("--group", required=True)
        odd.add_argument("--out", type=Path)

    def _context(self, descriptor: str) -> ProofContext:
        g = make_group(descriptor, self.settings.degree_limit)
        seed = self.settings.default_seed
        seeds = range(seed, seed + self.settings.cross_seed_count)
        return build_proof_context(g, True, seeds, self.settings.degree_limit, self.settings.subgroup_generator_bound)

    def _build(self, ctx: ProofContext, args: argparse.Namespace) -> WitnessWord:
        if args.action == "move":
            return mover_two_transitive(ctx, *args.points)
        if args.action == "transposition":
            return transposition_any(ctx, *args.points)
        if args.action == "anycycle":
            return three_cycle_any(ctx, *args.points)
        if args.action == "threecycle":
            return three_cycle_odd(ctx, args.block, *args.coords)
        return odd_parity_generator(ctx)

    def _run_impl(self, args: argparse.Namespace) -> int:
        ctx = self._context(args.group)
        word = self._build(ctx, args)
        if not contains(ctx.bsgs, word.product):
            raise VerificationMismatch(
                "witness product is outside the generated group",
                expected={"member": True},
                computed={"member": False},
            )
        self.logger.info(f"{args.action} witness for {args.group}: {len(word)} factors")
        if args.out:
            write_witness_file(word, args.out)
            print(f"wrote {len(word)} factors to {args.out}")
        else:
            print(format_witness(word), end="")
        return 0
