from modules.errors import BadBlockIndex, BadShape, DegreeMismatch, NotInSubgroup
from modules.signatures import BreveMap, Etls
from modules.transforms.transform_types import BlockSystem, Permutation


def pgm_transform(a: BreveMap, b: BreveMap) -> Permutation:
    """The round function x -> b^-1(a(x)), read left to right as a composed with b inverse."""
    if a.n != b.n:
        raise DegreeMismatch(f"breve maps over {a.n} and {b.n} points")
    return Permutation(tuple(b.backward[a.forward[x]] for x in range(a.n)))


def _check_shape(tau: Permutation, size: int, lam: int, mu: int):
    if lam < 2 or mu < 1:
        raise BadShape(f"need lambda >= 2 and mu >= 1, got {lam}, {mu}")
    if tau.degree != size:
        raise DegreeMismatch(f"tau has degree {tau.degree}, expected {size}")


def blockwise_perm(tau: Permutation, lam: int, mu: int) -> Permutation:
    _check_shape(tau, lam, lam, mu)
    return Permutation(tuple(tau(x % lam) + lam * (x // lam) for x in range(lam * mu)))


def diagonal_perm(tau: Permutation, lam: int, mu: int) -> Permutation:
    _check_shape(tau, mu, lam, mu)
    return Permutation(tuple(x % lam + lam * tau(x // lam) for x in range(lam * mu)))


def regular_tau(e: Etls, h: int) -> Permutation:
    """tau_h on I_mu with alpha_1(x_1) * h = alpha_1(x_1 tau_h)."""
    if h not in e.subgroup:
        raise NotInSubgroup(f"{h} is not in {e.subgroup}")
    index = {v: i for i, v in enumerate(e.alpha1)}
    return Permutation(tuple(index[e.group.product(v, h)] for v in e.alpha1))


def regular_perm(e: Etls, z0: int, h: int) -> Permutation:
    lam = e.lam
    if not 0 <= z0 < lam:
        raise BadBlockIndex(f"block {z0} is outside 0..{lam - 1}")
    tau = regular_tau(e, h)
    images = list(range(e.group.n))
    for x1 in range(e.mu):
        images[z0 + lam * x1] = z0 + lam * tau(x1)
    return Permutation(tuple(images))


def canonical_blocks(lam: int, mu: int) -> BlockSystem:
    blocks = tuple(tuple(x2 + lam * x1 for x1 in range(mu)) for x2 in range(lam))
    return BlockSystem(lam=lam, mu=mu, blocks=blocks)
