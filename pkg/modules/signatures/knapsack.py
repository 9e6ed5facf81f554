from math import prod
from typing import Sequence

from modules.errors import OutOfRange
from modules.signatures.signature_types import KnapsackDigits


def knapsack_split(x: int, radices: Sequence[int]) -> KnapsackDigits:
    """Mixed-radix digits of x, last radix least significant: x = x_2 + lambda * x_1 when s = 2."""
    total = prod(radices)
    if not 0 <= x < total:
        raise OutOfRange(f"{x} is outside 0..{total - 1}")
    digits = []
    for r in reversed(radices):
        x, d = divmod(x, r)
        digits.append(d)
    return KnapsackDigits(tuple(reversed(digits)), tuple(radices))


def knapsack_join(digits: Sequence[int], radices: Sequence[int]) -> int:
    if len(digits) != len(radices):
        raise OutOfRange(f"{len(digits)} digits for {len(radices)} radices")
    x = 0
    for d, r in zip(digits, radices):
        if not 0 <= d < r:
            raise OutOfRange(f"digit {d} is outside 0..{r - 1}")
        x = x * r + d
    return x
