from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Optional, Tuple

from modules.errors import BadShape, InvalidChain, MissingSecondarySubgroup, NotAPermutation
from modules.group_core import GroupTable, Subgroup, SubgroupChain


@dataclass(frozen=True)
class Permutation:
    """A bijection of I_n; images[x] is the image of x. Products compose left to right."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(len(images))):
            raise NotAPermutation(f"{list(images)} is not a bijection of 0..{len(images) - 1}")
        object.__setattr__(self, 'images', images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        images = list(range(n))
        images[a], images[b] = b, a
        return cls(tuple(images))

    @classmethod
    def cycle(cls, n: int, *points: int) -> "Permutation":
        """points[0] -> points[1] -> ... -> points[-1] -> points[0]."""
        images = list(range(n))
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
        return cls(tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def support(self) -> List[int]:
        return [x for x, y in enumerate(self.images) if x != y]

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        result = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cyc) > 1:
                result.append(tuple(cyc))
        return result

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.images)


@dataclass(frozen=True)
class BlockSystem:
    lam: int
    mu: int
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.lam < 2 or self.mu < 2:
            raise BadShape(f"a nontrivial block system needs lambda, mu >= 2, got {self.lam}, {self.mu}")
        if len(self.blocks) != self.lam or any(len(b) != self.mu for b in self.blocks):
            raise BadShape(f"expected {self.lam} blocks of size {self.mu}")
        points = sorted(x for b in self.blocks for x in b)
        if points != list(range(self.lam * self.mu)):
            raise BadShape("blocks do not partition the points")

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]]) -> "BlockSystem":
        blocks = tuple(sorted(tuple(sorted(c)) for c in cells))
        return cls(lam=len(blocks), mu=len(blocks[0]) if blocks else 0, blocks=blocks)

    @property
    def n(self) -> int:
        return self.lam * self.mu

    def block_of(self, x: int) -> int:
        for i, block in enumerate(self.blocks):
            if x in block:
                return i
        raise BadShape(f"point {x} is in no block")

    def respected_by(self, p: Permutation) -> bool:
        cells = {frozenset(b) for b in self.blocks}
        return all(frozenset(p(x) for x in b) in cells for b in self.blocks)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(str(x) for x in b) + "}" for b in self.blocks) + "}"


class GeneratorFamily(Enum):
    BLOCKWISE = "blockwise"
    REGULAR = "regular"
    DIAGONAL = "diagonal"
    CROSS = "cross"
    CROSS_RANDOM = "cross_random"


@dataclass(frozen=True)
class NamedGenerator:
    family: GeneratorFamily
    params: Tuple[int, ...]
    perm: Permutation = field(compare=False)

    @property
    def label(self) -> str:
        return f"{self.family.value}(" + ",".join(str(p) for p in self.params) + ")"


@dataclass(frozen=True)
class EhConfig:
    """Everything needed to assemble the structured generating subset of Eh."""

    group: GroupTable = field(repr=False)
    primary_chain: SubgroupChain
    secondary_chain: Optional[SubgroupChain] = None
    include_cross: bool = False
    seeds: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.primary_chain.s != 2:
            raise InvalidChain(f"the primary chain must be <1> < H < G, got s = {self.primary_chain.s}")
        if self.include_cross:
            if self.secondary_chain is None:
                raise MissingSecondarySubgroup("cross transforms need a secondary subgroup K")
            if self.secondary_chain.levels[1] == self.primary_chain.levels[1]:
                raise InvalidChain("the secondary subgroup must differ from H")
        object.__setattr__(self, 'seeds', tuple(self.seeds))

    @property
    def h(self) -> Subgroup:
        return self.primary_chain.levels[1]

    @property
    def k(self) -> Optional[Subgroup]:
        return self.secondary_chain.levels[1] if self.secondary_chain is not None else None

    @property
    def lam(self) -> int:
        return self.group.n // self.h.order

    @property
    def mu(self) -> int:
        return self.h.order
