import logging
from collections import defaultdict
from math import factorial
from typing import FrozenSet, List, Optional, Sequence

from modules.errors import DegreeTooLarge, NotTransitive
from modules.permgroup.perm_ops import compose
from modules.permgroup.permgroup_types import GroupFacts
from modules.permgroup.stabilizer_chain import common_degree, schreier_sims, sympy_group
from modules.transforms.transform_types import BlockSystem, Permutation
from settings import DEFAULT_CLOSURE_DEGREE_LIMIT

logger = logging.getLogger(__name__)


def transitivity_degree(gens: Sequence[Permutation], degree: Optional[int] = None, cap: int = 2) -> int:
    n = common_degree(gens, degree)
    group = sympy_group(gens, n)
    if len(group.orbit(0)) != n:
        return 0
    if cap < 2 or n < 2:
        return 1
    pairs = group.orbit((0, 1), action='tuples')
    return 2 if len(pairs) == n * (n - 1) else 1


def _refines(finer: BlockSystem, coarser: BlockSystem) -> bool:
    if finer.mu >= coarser.mu:
        return False
    cells = [set(c) for c in coarser.blocks]
    return all(any(set(b) <= c for c in cells) for b in finer.blocks)


def find_block_systems(gens: Sequence[Permutation], degree: Optional[int] = None) -> List[BlockSystem]:
    """Minimal nontrivial block systems, from the smallest block holding {0, k} for every k."""
    n = common_degree(gens, degree)
    if n < 4:
        # blocks of size >= 2 in >= 2 cells need at least four points
        if transitivity_degree(gens, n, cap=1) == 0:
            raise NotTransitive(f"the group does not act transitively on {n} points")
        return []
    group = sympy_group(gens, n)
    if not group.is_transitive():
        raise NotTransitive(f"the group does not act transitively on {n} points")
    found = set()
    for k in range(1, n):
        labels = group.minimal_block([0, k])
        cells = defaultdict(list)
        for point, label in enumerate(labels):
            cells[label].append(point)
        if len(cells) == 1:
            continue
        found.add(BlockSystem.from_cells(cells.values()))
    minimal = [p for p in found if not any(_refines(q, p) for q in found)]
    return sorted(minimal, key=lambda b: (b.mu, b.blocks))


def brute_force_closure(
    gens: Sequence[Permutation],
    degree: Optional[int] = None,
    limit: int = DEFAULT_CLOSURE_DEGREE_LIMIT,
) -> FrozenSet[Permutation]:
    n = common_degree(gens, degree)
    if n > limit:
        raise DegreeTooLarge(f"closure of degree {n} exceeds the limit {limit}")
    identity = Permutation.identity(n)
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elements)


def analyze(gens: Sequence[Permutation], degree: Optional[int] = None) -> GroupFacts:
    n = common_degree(gens, degree)
    order = schreier_sims(gens, n).order
    transitivity = transitivity_degree(gens, n)
    blocks = find_block_systems(gens, n) if transitivity >= 1 else []
    full = factorial(n)
    facts = GroupFacts(
        degree=n,
        order=order,
        is_symmetric=order == full,
        is_alternating=n > 1 and order * 2 == full,
        transitivity=transitivity,
        minimal_block_systems=tuple(blocks),
    )
    logger.debug(f"analyzed degree {n}: order {order}, transitivity {transitivity}, {len(blocks)} block systems")
    return facts
