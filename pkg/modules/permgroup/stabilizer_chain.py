import logging
from math import prod
from typing import Optional, Sequence

from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from modules.errors import DegreeMismatch
from modules.permgroup.permgroup_types import Bsgs
from modules.transforms.transform_types import Permutation

logger = logging.getLogger(__name__)


def common_degree(gens: Sequence[Permutation], degree: Optional[int] = None) -> int:
    degrees = {p.degree for p in gens}
    if degree is not None:
        degrees.add(degree)
    if len(degrees) > 1:
        raise DegreeMismatch(f"generators of mixed degrees {sorted(degrees)}")
    return degrees.pop() if degrees else 1


def to_sympy(p: Permutation) -> SymPermutation:
    return SymPermutation(list(p.images))


def from_sympy(p: SymPermutation, degree: int) -> Permutation:
    images = list(p.array_form)
    # pad to the full degree
    images.extend(range(len(images), degree))
    return Permutation(tuple(images))


def sympy_group(gens: Sequence[Permutation], degree: Optional[int] = None) -> PermutationGroup:
    n = common_degree(gens, degree)
    if not gens:
        return PermutationGroup([SymPermutation(list(range(n)))])
    return PermutationGroup([to_sympy(p) for p in gens])


def schreier_sims(gens: Sequence[Permutation], degree: Optional[int] = None) -> Bsgs:
    n = common_degree(gens, degree)
    group = sympy_group(gens, n)
    group.schreier_sims()
    transversals = tuple({int(pt): from_sympy(rep, n) for pt, rep in t.items()} for t in group.basic_transversals)
    order = prod(len(t) for t in transversals)
    logger.debug(f"schreier-sims on {len(gens)} generators of degree {n}: base {list(group.base)}, order {order}")
    return Bsgs(
        degree=n,
        base=tuple(int(b) for b in group.base),
        strong_generators=tuple(from_sympy(p, n) for p in group.strong_gens),
        transversals=transversals,
        order=order,
        group=group,
    )


def contains(b: Bsgs, p: Permutation) -> bool:
    if p.degree != b.degree:
        raise DegreeMismatch(f"permutation of degree {p.degree} against a group of degree {b.degree}")
    return bool(b.group.contains(to_sympy(p)))
