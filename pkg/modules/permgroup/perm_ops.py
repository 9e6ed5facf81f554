from functools import reduce
from typing import Iterable, Optional, Tuple

from modules.errors import DegreeMismatch
from modules.transforms.transform_types import Permutation


def _same_degree(p: Permutation, q: Permutation):
    if p.degree != q.degree:
        raise DegreeMismatch(f"permutations of degree {p.degree} and {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p then q: x -> q(p(x))."""
    _same_degree(p, q)
    return Permutation(tuple(q.images[y] for y in p.images))


def compose_all(perms: Iterable[Permutation], degree: Optional[int] = None) -> Permutation:
    perms = list(perms)
    if not perms:
        if degree is None:
            raise DegreeMismatch("an empty product needs an explicit degree")
        return Permutation.identity(degree)
    return reduce(compose, perms)


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def conjugate(s: Permutation, p: Permutation) -> Permutation:
    """s^p = p^-1 s p."""
    _same_degree(s, p)
    return compose(compose(p.inverse(), s), p)


def cycle_type(p: Permutation) -> Tuple[int, ...]:
    """All cycle lengths, fixed points included, longest first."""
    lengths = [len(c) for c in p.cycles()]
    lengths.extend([1] * (p.degree - sum(lengths)))
    return tuple(sorted(lengths, reverse=True))


def parity(p: Permutation) -> int:
    return -1 if (p.degree - len(cycle_type(p))) % 2 else 1


def is_even(p: Permutation) -> bool:
    return parity(p) == 1
