from dataclasses import dataclass, field
from math import prod
from typing import Tuple

from modules.errors import SignatureError
from modules.group_core import GroupTable, Subgroup, SubgroupChain


@dataclass(frozen=True)
class LogSignature:
    """Blocks whose product map (x_1, ..., x_s) -> blocks[0][x_1] ... blocks[s-1][x_s] factors G uniquely."""

    group: GroupTable = field(compare=False, repr=False)
    blocks: Tuple[Tuple[int, ...], ...]

    @property
    def radices(self) -> Tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def s(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return prod(self.radices)


@dataclass(frozen=True)
class Etls:
    """A logarithmic signature whose block i transverses levels[i] in levels[i + 1] of its chain."""

    signature: LogSignature
    chain: SubgroupChain

    @property
    def group(self) -> GroupTable:
        return self.signature.group

    @property
    def s(self) -> int:
        return self.signature.s

    def _require_two_steps(self):
        if self.s != 2:
            raise SignatureError(f"alpha1/alpha2 are defined for s = 2 only, got s = {self.s}")

    @property
    def alpha1(self) -> Tuple[int, ...]:
        self._require_two_steps()
        return self.signature.blocks[0]

    @property
    def alpha2(self) -> Tuple[int, ...]:
        self._require_two_steps()
        return self.signature.blocks[1]

    @property
    def subgroup(self) -> Subgroup:
        return self.chain.levels[1]

    @property
    def mu(self) -> int:
        return len(self.alpha1)

    @property
    def lam(self) -> int:
        return len(self.alpha2)


@dataclass(frozen=True, eq=False)
class BreveMap:
    """x -> forward[x] is the bijection I_n -> G; backward undoes it."""

    forward: Tuple[int, ...]
    backward: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.forward)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BreveMap) and self.forward == other.forward

    def __hash__(self) -> int:
        return hash(self.forward)


@dataclass(frozen=True)
class KnapsackDigits:
    digits: Tuple[int, ...]
    radices: Tuple[int, ...]

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i]
