from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Iterator, Tuple

import numpy as np

from modules.errors import ChainTooShort, InvalidChain


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group as its multiplication table over I_n, identity at index 0."""

    mul: np.ndarray
    inv: np.ndarray
    descriptor: str = "table"
    # relabeling[new_index] is the label the element carried in the raw input
    relabeling: Tuple[int, ...] = ()

    def __post_init__(self):
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)

    @property
    def n(self) -> int:
        return int(self.mul.shape[0])

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.n)

    def product(self, *elements: int) -> int:
        return reduce(lambda a, b: int(self.mul[a, b]), elements, 0)

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"GroupTable({self.descriptor!r}, n={self.n})"


@dataclass(frozen=True)
class Subgroup:
    elements: Tuple[int, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_members', frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    @classmethod
    def of(cls, elements: Iterable[int]) -> "Subgroup":
        return cls(tuple(sorted(set(int(x) for x in elements))))

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"


@dataclass(frozen=True)
class SubgroupChain:
    """<1> = levels[0] < levels[1] < ... < levels[s] = G."""

    levels: Tuple[Subgroup, ...]
    n: int

    def __post_init__(self):
        if not self.levels or self.levels[0].elements != (0,):
            raise InvalidChain("a chain must start at the trivial subgroup")
        if self.levels[-1].elements != tuple(range(self.n)):
            raise InvalidChain("a chain must end at the whole group")
        for lower, upper in zip(self.levels, self.levels[1:]):
            if lower.order >= upper.order or not set(lower.elements) <= set(upper.elements):
                raise InvalidChain(f"{lower} is not properly contained in {upper}")
        if self.s < 2:
            raise ChainTooShort(f"a chain needs s >= 2 steps, got s = {self.s}")

    @property
    def s(self) -> int:
        return len(self.levels) - 1


@dataclass(frozen=True)
class CosetDecomposition:
    subgroup: Subgroup
    reps: Tuple[int, ...]
    cosets: Tuple[Tuple[int, ...], ...] = field(repr=False)

    @property
    def lam(self) -> int:
        return len(self.reps)

    @property
    def mu(self) -> int:
        return self.subgroup.order
