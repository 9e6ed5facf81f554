from dataclasses import dataclass, field
from typing import Optional

from modules.group_core import GroupTable
from modules.signatures import LogSignature
from modules.transforms import Permutation


@dataclass(frozen=True)
class PgmKey:
    """A signature pair and its cached round function enc = alpha o beta^-1 with dec = enc^-1."""

    group: GroupTable = field(compare=False, repr=False)
    alpha: LogSignature
    beta: LogSignature
    enc: Permutation = field(repr=False)
    dec: Permutation = field(repr=False)
    seed: Optional[int] = None

    @property
    def n(self) -> int:
        return self.group.n
