from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from modules.group_core import GroupTable, Subgroup
from modules.permgroup import Bsgs, compose
from modules.signatures import BreveMap, Etls
from modules.transforms import EhConfig, GeneratorFamily, NamedGenerator, Permutation


@dataclass(frozen=True)
class WordFactor:
    family: GeneratorFamily
    params: Tuple[int, ...]
    inverted: bool = False

    def inverse(self) -> "WordFactor":
        return WordFactor(self.family, self.params, not self.inverted)

    def __str__(self) -> str:
        text = f"{self.family.value}(" + ",".join(str(p) for p in self.params) + ")"
        return text + "^-1" if self.inverted else text


@dataclass(frozen=True)
class WitnessWord:
    """Named generators composed left to right; product is their exact composite."""

    factors: Tuple[WordFactor, ...]
    product: Permutation

    @property
    def degree(self) -> int:
        return self.product.degree

    def inverted(self) -> "WitnessWord":
        return WitnessWord(tuple(f.inverse() for f in reversed(self.factors)), self.product.inverse())

    def concat(self, other: "WitnessWord") -> "WitnessWord":
        return WitnessWord(self.factors + other.factors, compose(self.product, other.product))

    def conjugated_by(self, pi: "WitnessWord") -> "WitnessWord":
        """self^pi = pi^-1 self pi."""
        return pi.inverted().concat(self).concat(pi)

    def __len__(self) -> int:
        return len(self.factors)


@dataclass(frozen=True, eq=False)
class ProofContext:
    group: GroupTable = field(repr=False)
    config: EhConfig = field(repr=False)
    alpha: Etls = field(repr=False)
    alpha_breve: BreveMap = field(repr=False)
    beta: Optional[Etls] = field(repr=False)
    generators: Tuple[NamedGenerator, ...] = field(repr=False)
    bsgs: Bsgs = field(repr=False)

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def h(self) -> Subgroup:
        return self.config.h

    @property
    def k(self) -> Optional[Subgroup]:
        return self.config.k

    @property
    def lam(self) -> int:
        return self.config.lam

    @property
    def mu(self) -> int:
        return self.config.mu

    def generating_set(self) -> List[Permutation]:
        return [gen.perm for gen in self.generators]

    def block(self, x: int) -> int:
        return x % self.lam

    def coordinate(self, x: int) -> int:
        return x // self.lam

    def point(self, block: int, coordinate: int) -> int:
        return block + self.lam * coordinate
