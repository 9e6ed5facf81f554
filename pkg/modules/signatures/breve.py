from typing import Sequence

import numpy as np

from modules.errors import NotExactCover, NotInjectiveBlock, OutOfRange, SignatureError
from modules.group_core import GroupTable
from modules.signatures.signature_types import BreveMap, LogSignature


def product_vector(g: GroupTable, blocks: Sequence[Sequence[int]]) -> np.ndarray:
    """products[x] = blocks[0][x_1] * ... * blocks[s-1][x_s] with x in knapsack order."""
    products = np.zeros(1, dtype=np.int64)
    for block in blocks:
        b = np.asarray(block, dtype=np.int64)
        products = g.mul[products[:, None], b[None, :]].reshape(-1)
    return products


def validate_log_signature(g: GroupTable, blocks: Sequence[Sequence[int]]) -> LogSignature:
    if not blocks:
        raise SignatureError("a signature needs at least one block")
    clean = []
    for i, block in enumerate(blocks):
        entries = tuple(int(v) for v in block)
        if not entries:
            raise NotExactCover(f"block {i} is empty")
        bad = [v for v in entries if not 0 <= v < g.n]
        if bad:
            raise OutOfRange(f"block {i} holds {bad[0]}, outside 0..{g.n - 1}")
        if len(set(entries)) != len(entries):
            raise NotInjectiveBlock(f"block {i} repeats an element: {entries}")
        clean.append(entries)
    products = product_vector(g, clean)
    seen = set()
    for x, y in enumerate(products.tolist()):
        if y in seen:
            raise NotExactCover(f"element {y} is produced twice (second time at x = {x})", witness=y)
        seen.add(y)
    if len(seen) < g.n:
        missing = min(set(range(g.n)) - seen)
        raise NotExactCover(f"element {missing} is never produced", witness=missing)
    return LogSignature(group=g, blocks=tuple(clean))


def breve_map(sig: LogSignature) -> BreveMap:
    forward = product_vector(sig.group, sig.blocks)
    if forward.size != sig.group.n or np.unique(forward).size != forward.size:
        raise NotExactCover("signature does not factor the group uniquely")
    backward = np.empty_like(forward)
    backward[forward] = np.arange(forward.size)
    return BreveMap(forward=tuple(forward.tolist()), backward=tuple(backward.tolist()))
