from dataclasses import dataclass, field
from math import factorial
from typing import Any, Dict, List, Tuple

from modules.transforms.transform_types import BlockSystem, Permutation


@dataclass(frozen=True)
class Bsgs:
    """Base and strong generating set; transversals[i] maps each point of the i-th basic orbit to a coset representative."""

    degree: int
    base: Tuple[int, ...]
    strong_generators: Tuple[Permutation, ...]
    transversals: Tuple[Dict[int, Permutation], ...] = field(repr=False)
    order: int
    # the sympy group the chain was read from, kept for sifting
    group: Any = field(repr=False, compare=False)


@dataclass(frozen=True)
class GroupFacts:
    degree: int
    order: int
    is_symmetric: bool
    is_alternating: bool
    transitivity: int
    minimal_block_systems: Tuple[BlockSystem, ...] = ()

    @property
    def factorial(self) -> int:
        return factorial(self.degree)

    @property
    def is_imprimitive(self) -> bool:
        return bool(self.minimal_block_systems)

    def report_lines(self) -> List[str]:
        blocks = ";".join(str(b) for b in self.minimal_block_systems) or "none"
        return [
            f"order={self.order}",
            f"factorial={self.factorial}",
            f"is_symmetric={self.is_symmetric}",
            f"is_alternating={self.is_alternating}",
            f"transitivity={self.transitivity}",
            f"blocks={blocks}",
        ]
