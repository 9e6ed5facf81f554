from dataclasses import dataclass, field
from enum import Enum
from math import factorial
from typing import List, Optional, Tuple

from modules.group_core import Subgroup
from modules.permgroup import GroupFacts
from modules.transforms import BlockSystem, Permutation


class Verdict(Enum):
    SYMMETRIC = "SYMMETRIC"
    PROPER_IMPRIMITIVE = "PROPER_IMPRIMITIVE"
    OTHER = "OTHER"

    @classmethod
    def of(cls, facts: GroupFacts) -> "Verdict":
        if facts.is_symmetric:
            return cls.SYMMETRIC
        if facts.order < facts.factorial and facts.minimal_block_systems:
            return cls.PROPER_IMPRIMITIVE
        return cls.OTHER


def _blocks_text(blocks: Tuple[BlockSystem, ...]) -> str:
    return ";".join(str(b) for b in blocks) or "none"


@dataclass(frozen=True)
class ExperimentReport:
    descriptor: str
    n: int
    h: Subgroup
    k: Optional[Subgroup]
    include_cross: bool
    seed: int
    generator_count: int
    order: int
    verdict: Verdict
    predicted: Verdict
    transitivity: int
    block_systems: Tuple[BlockSystem, ...]
    closure_checked: bool = False
    elapsed: float = field(default=0.0, compare=False)

    @property
    def factorial(self) -> int:
        return factorial(self.n)

    @property
    def matches_prediction(self) -> bool:
        return self.verdict is self.predicted

    def porcelain_lines(self) -> List[str]:
        return [
            f"descriptor={self.descriptor}",
            f"n={self.n}",
            f"h={self.h}",
            f"k={self.k if self.k is not None else 'none'}",
            f"cross={str(self.include_cross).lower()}",
            f"seed={self.seed}",
            f"generators={self.generator_count}",
            f"order={self.order}",
            f"factorial={self.factorial}",
            f"verdict={self.verdict.value}",
            f"predicted={self.predicted.value}",
            f"transitivity={self.transitivity}",
            f"blocks={_blocks_text(self.block_systems)}",
            f"closure_checked={str(self.closure_checked).lower()}",
        ]

    def human_lines(self) -> List[str]:
        rows = [
            ("group", f"{self.descriptor} (n={self.n})"),
            ("H", str(self.h)),
            ("K", str(self.k) if self.k is not None else "-"),
            ("cross", "yes" if self.include_cross else "no"),
            ("generators", str(self.generator_count)),
            ("order", str(self.order)),
            ("n!", str(self.factorial)),
            ("verdict", self.verdict.value),
            ("expected", self.predicted.value),
            ("transitivity", str(self.transitivity)),
            ("blocks", _blocks_text(self.block_systems)),
            ("elapsed", f"{self.elapsed:.3f}s"),
        ]
        width = max(len(key) for key, _ in rows)
        return [f"{key.ljust(width)}  {value}" for key, value in rows]


@dataclass(frozen=True)
class PsquareReport:
    p: int
    before: GroupFacts
    after: GroupFacts
    extra: Permutation
    closure_size: Optional[int] = None

    @property
    def verdict_before(self) -> Verdict:
        return Verdict.of(self.before)

    @property
    def verdict_after(self) -> Verdict:
        return Verdict.of(self.after)

    @property
    def holds(self) -> bool:
        return self.verdict_before is Verdict.PROPER_IMPRIMITIVE and self.verdict_after is Verdict.SYMMETRIC

    def lines(self) -> List[str]:
        closure = "skipped" if self.closure_size is None else str(self.closure_size)
        return [
            f"p={self.p}",
            f"n={self.p * self.p}",
            *(f"part1.{line}" for line in self.before.report_lines()),
            f"part1.closure={closure}",
            f"part1.verdict={self.verdict_before.value}",
            f"extra={self.extra}",
            *(f"part2.{line}" for line in self.after.report_lines()),
            f"part2.verdict={self.verdict_after.value}",
        ]
