import argparse
from typing import List

from modules.base_module import EnhancedBaseModule
from modules.errors import VerificationMismatch
from modules.verify.experiment import psquare_analysis, run_experiment, run_matrix
from modules.verify.verify_types import ExperimentReport, Verdict


class VerifyModule(EnhancedBaseModule):
    @property
    def name(self) -> str:
        return "Verify"

    @property
    def commands(self) -> List[str]:
        return ["verify", "v"]

    @property
    def example(self) -> str:
        return "verify --group cyclic:6 --cross"

    def add_arguments(self, parser: argparse.ArgumentParser, common: argparse.ArgumentParser):
        target = parser.add_mutually_exclusive_group(required=True)
        target.add_argument("--group", help="group descriptor, e.g. cyclic:6")
        target.add_argument("--matrix", action="store_true", help="run the shipped test matrix")
        parser.add_argument("--cross", action="store_true", help="include transforms over a second subgroup K")

    def _emit_report(self, report: ExperimentReport):
        self.emit(report.porcelain_lines() if self.settings.porcelain else report.human_lines())

    def _run_impl(self, args: argparse.Namespace) -> int:
        seed = self.settings.default_seed
        if args.matrix:
            reports = run_matrix(self.settings, args.cross, seed)
        else:
            reports = [run_experiment(args.group, args.cross, seed, self.settings)]
        for i, report in enumerate(reports):
            if i:
                print()
            self._emit_report(report)
        failed = [r for r in reports if not r.matches_prediction]
        if failed:
            raise VerificationMismatch(
                f"{len(failed)} verdict(s) differ from the prediction",
                expected={r.descriptor: r.predicted.value for r in failed},
                computed={r.descriptor: r.verdict.value for r in failed},
            )
        return 0


class PsquareModule(EnhancedBaseModule):
    @property
    def name(self) -> str:
        return "Psquare"

    @property
    def commands(self) -> List[str]:
        return ["psquare", "p2"]

    @property
    def example(self) -> str:
        return "psquare --p 3"

    def add_arguments(self, parser: argparse.ArgumentParser, common: argparse.ArgumentParser):
        parser.add_argument("--p", type=int, required=True, help="a prime with p^2 within the degree limit")

    def _run_impl(self, args: argparse.Namespace) -> int:
        report = psquare_analysis(args.p, self.settings)
        self.emit(report.lines())
        if not report.holds:
            raise VerificationMismatch(
                f"cyclic group of order {args.p}^2 does not behave as predicted",
                expected={"part1": Verdict.PROPER_IMPRIMITIVE.value, "part2": Verdict.SYMMETRIC.value},
                computed={"part1": report.verdict_before.value, "part2": report.verdict_after.value},
            )
        return 0
