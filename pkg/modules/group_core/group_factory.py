import itertools
import logging
import math
import re
from typing import List, Tuple

import numpy as np
from rapidfuzz import fuzz

from modules.errors import OrderOverflow, UnknownSpec
from modules.group_core.group_table import validate_table
from modules.group_core.group_types import GroupTable
from settings import DEFAULT_DEGREE_LIMIT

logger = logging.getLogger(__name__)

FAMILIES = ("cyclic", "dihedral", "quaternion", "symmetric")
PRODUCT_SEPARATOR = re.compile(r"\s*[x×]\s*")

# Unit part of the product of two quaternion units 1, i, j, k, as (sign, unit)
_QUATERNION_UNITS = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)


def _suggest(family: str) -> str:
    best = max(FAMILIES, key=lambda f: fuzz.ratio(family, f))
    if fuzz.ratio(family, best) > 60:
        return f" (did you mean {best!r}?)"
    return ""


def parse_descriptor(spec: str) -> List[Tuple[str, int]]:
    """Split 'cyclic:2xcyclic:4' into [('cyclic', 2), ('cyclic', 4)]."""
    factors = []
    for part in PRODUCT_SEPARATOR.split(spec.strip().lower()):
        if not part:
            raise UnknownSpec(f"empty factor in group descriptor {spec!r}")
        family, _, arg = part.partition(":")
        if family not in FAMILIES:
            raise UnknownSpec(f"unknown group family {family!r}{_suggest(family)}")
        if family == "quaternion":
            if arg:
                raise UnknownSpec("quaternion takes no parameter")
            factors.append((family, 8))
            continue
        if not arg.isdigit() or int(arg) < 1:
            raise UnknownSpec(f"{family} needs a positive integer parameter, got {arg!r}")
        param = int(arg)
        if family == "symmetric" and param > 5:
            raise UnknownSpec("symmetric:k is only offered for k <= 5")
        factors.append((family, param))
    return factors


def descriptor_order(factors: List[Tuple[str, int]]) -> int:
    order = 1
    for family, param in factors:
        if family == "dihedral":
            order *= 2 * param
        elif family == "symmetric":
            order *= math.factorial(param)
        else:
            order *= param
    return order


def _cyclic(m: int) -> np.ndarray:
    idx = np.arange(m)
    return (idx[:, None] + idx[None, :]) % m


def _dihedral(m: int) -> np.ndarray:
    # r^a s^e * r^b s^f = r^(a + (-1)^e b) s^(e + f), stored at index a + m*e
    n = 2 * m
    table = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        a, e = x % m, x // m
        for y in range(n):
            b, f = y % m, y // m
            rot = (a + (b if e == 0 else -b)) % m
            table[x, y] = rot + m * ((e + f) % 2)
    return table


def _quaternion() -> np.ndarray:
    # index u + 4*s encodes (-1)^s times unit u of (1, i, j, k)
    table = np.zeros((8, 8), dtype=np.int64)
    for x in range(8):
        for y in range(8):
            sign, unit = _QUATERNION_UNITS[x % 4][y % 4]
            negative = (sign < 0) ^ (x >= 4) ^ (y >= 4)
            table[x, y] = unit + 4 * int(negative)
    return table


def _symmetric(k: int) -> np.ndarray:
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.zeros((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            # left-to-right: apply p, then q
            table[i, j] = index[tuple(q[p[x]] for x in range(k))]
    return table


def _direct_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    na, nb = a.shape[0], b.shape[0]
    # pair (x, y) lives at index x*nb + y
    return (a[:, None, :, None] * nb + b[None, :, None, :]).reshape(na * nb, na * nb)


_BUILDERS = {
    "cyclic": _cyclic,
    "dihedral": _dihedral,
    "quaternion": lambda _: _quaternion(),
    "symmetric": _symmetric,
}


def make_group(spec: str, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> GroupTable:
    factors = parse_descriptor(spec)
    order = descriptor_order(factors)
    if order > degree_limit:
        raise OrderOverflow(f"{spec} has order {order}, above the degree limit {degree_limit}")
    table = None
    for family, param in factors:
        factor = _BUILDERS[family](param)
        table = factor if table is None else _direct_product(table, factor)
    logger.debug(f"built {spec} of order {order}")
    return validate_table(table, descriptor=spec)
