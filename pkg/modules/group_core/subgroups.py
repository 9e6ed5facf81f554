import itertools
import logging
from typing import Dict, Iterable, List, Optional, Sequence

from modules.errors import DegreeTooLarge, NotASubgroup
from modules.group_core.group_types import CosetDecomposition, GroupTable, Subgroup, SubgroupChain
from settings import DEFAULT_DEGREE_LIMIT, DEFAULT_SUBGROUP_GENERATOR_BOUND

logger = logging.getLogger(__name__)


def subgroup_closure(g: GroupTable, gens: Iterable[int]) -> Subgroup:
    generators = sorted(set(int(x) for x in gens) - {0})
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for gen in generators:
                y = int(g.mul[x, gen])
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup.of(members)


def element_order(g: GroupTable, x: int) -> int:
    order, y = 1, x
    while y != 0:
        y = int(g.mul[y, x])
        order += 1
    return order


def is_subgroup(g: GroupTable, h: Subgroup) -> bool:
    if 0 not in h or any(not 0 <= x < g.n for x in h):
        return False
    return all(int(g.mul[a, b]) in h for a in h for b in h)


def minimal_generators(g: GroupTable, h: Subgroup) -> List[int]:
    """Greedy generating set of h, scanning elements in increasing order."""
    gens: List[int] = []
    span = subgroup_closure(g, gens)
    for x in h:
        if x not in span:
            gens.append(x)
            span = subgroup_closure(g, gens)
            if span.order == h.order:
                break
    return gens


def enumerate_proper_subgroups(
    g: GroupTable,
    degree_limit: int = DEFAULT_DEGREE_LIMIT,
    generator_bound: int = DEFAULT_SUBGROUP_GENERATOR_BOUND,
) -> List[Subgroup]:
    """Nontrivial proper subgroups reachable as closures of at most generator_bound cyclic generators."""
    if g.n > degree_limit:
        raise DegreeTooLarge(f"order {g.n} exceeds the degree limit {degree_limit}")
    cyclic: Dict[Subgroup, int] = {}
    for x in g.elements():
        cyclic.setdefault(subgroup_closure(g, [x]), int(x))
    # one generator per distinct cyclic subgroup is enough
    generators = [x for s, x in sorted(cyclic.items(), key=lambda item: (item[0].order, item[0].elements)) if s.order > 1]
    found = set()
    for size in range(1, generator_bound + 1):
        for combo in itertools.combinations(generators, size):
            sub = subgroup_closure(g, combo)
            if 1 < sub.order < g.n:
                found.add(sub)
    subgroups = sorted(found, key=lambda s: (s.order, s.elements))
    logger.debug(f"{g.descriptor}: {len(subgroups)} proper subgroups")
    return subgroups


def _transversal(g: GroupTable, h: Subgroup, ambient: Sequence[int]) -> CosetDecomposition:
    used = set()
    reps, cosets = [], []
    for x in ambient:
        if x in used:
            continue
        coset = tuple(sorted(int(g.mul[k, x]) for k in h))
        used.update(coset)
        reps.append(int(x))
        cosets.append(coset)
    return CosetDecomposition(subgroup=h, reps=tuple(reps), cosets=tuple(cosets))


def right_cosets(g: GroupTable, h: Subgroup, within: Optional[Subgroup] = None) -> CosetDecomposition:
    """Canonical right cosets H*r: minimal unused index per coset, scanned upward."""
    if not is_subgroup(g, h):
        raise NotASubgroup(f"{h} is not a subgroup of {g.descriptor}")
    ambient: Sequence[int] = within.elements if within is not None else tuple(g.elements())
    if not set(h.elements) <= set(ambient):
        raise NotASubgroup(f"{h} is not contained in {within}")
    return _transversal(g, h, ambient)


def is_normal(g: GroupTable, h: Subgroup) -> bool:
    if not is_subgroup(g, h):
        raise NotASubgroup(f"{h} is not a subgroup of {g.descriptor}")
    return all(g.product(g.inverse(x), k, x) in h for x in g.elements() for k in h)


def is_abelian(g: GroupTable) -> bool:
    return bool((g.mul == g.mul.T).all())


def is_cyclic(g: GroupTable) -> bool:
    return any(element_order(g, x) == g.n for x in g.elements())


def is_hamiltonian(g: GroupTable, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> bool:
    """Nonabelian with every subgroup normal."""
    if is_abelian(g):
        return False
    return all(is_normal(g, h) for h in enumerate_proper_subgroups(g, degree_limit))


def make_chain(g: GroupTable, *middle: Subgroup) -> SubgroupChain:
    for h in middle:
        if not is_subgroup(g, h):
            raise NotASubgroup(f"{h} is not a subgroup of {g.descriptor}")
    levels = (Subgroup((0,)),) + tuple(middle) + (Subgroup(tuple(range(g.n))),)
    return SubgroupChain(levels=levels, n=g.n)
