import logging
import random
from typing import List, Sequence, Tuple

from sympy import isprime

from modules.errors import BadBlockIndex, InvalidChain, NotInSubgroup, NotPrime, SignatureError
from modules.group_core import GroupTable, SubgroupChain, make_group, right_cosets
from modules.signatures.breve import validate_log_signature
from modules.signatures.signature_types import Etls, LogSignature
from settings import DEFAULT_DEGREE_LIMIT

logger = logging.getLogger(__name__)


def _check_chain(g: GroupTable, chain: SubgroupChain):
    if chain.n != g.n:
        raise InvalidChain(f"chain is over {chain.n} points but the group has order {g.n}")


def canonical_etls(g: GroupTable, chain: SubgroupChain) -> Etls:
    """Minimal-index coset representatives at every level, so every block starts with 0."""
    _check_chain(g, chain)
    blocks = tuple(right_cosets(g, lower, within=upper).reps for lower, upper in zip(chain.levels, chain.levels[1:]))
    return Etls(signature=LogSignature(group=g, blocks=blocks), chain=chain)


def random_etls(g: GroupTable, chain: SubgroupChain, seed: int) -> Etls:
    _check_chain(g, chain)
    rng = random.Random(seed)
    blocks: List[Tuple[int, ...]] = []
    for lower, upper in zip(chain.levels, chain.levels[1:]):
        cosets = list(right_cosets(g, lower, within=upper).cosets)
        rng.shuffle(cosets)
        blocks.append(tuple(rng.choice(coset) for coset in cosets))
    logger.debug(f"random signature over {g.descriptor} with seed {seed}: radices {[len(b) for b in blocks]}")
    return Etls(signature=LogSignature(group=g, blocks=tuple(blocks)), chain=chain)


def psquare_gamma(p: int, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> LogSignature:
    """gamma_1(x_1) = a^x_1 and gamma_2(x_2) = a^(p x_2) over the cyclic group of order p^2."""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    g = make_group(f"cyclic:{p * p}", degree_limit)
    return validate_log_signature(g, [list(range(p)), [p * k for k in range(p)]])


def _with_blocks(e: Etls, alpha1: Sequence[int], alpha2: Sequence[int]) -> Etls:
    sig = LogSignature(group=e.group, blocks=(tuple(alpha1), tuple(alpha2)))
    return Etls(signature=sig, chain=e.chain)


def _check_shuffle(tau: Sequence[int], size: int, what: str):
    if sorted(tau) != list(range(size)):
        raise SignatureError(f"{what} reordering must be a permutation of 0..{size - 1}, got {list(tau)}")


def reorder_cosets(e: Etls, tau: Sequence[int]) -> Etls:
    """beta_2(x_2) = alpha_2(x_2 tau)."""
    _check_shuffle(tau, e.lam, "coset")
    return _with_blocks(e, e.alpha1, [e.alpha2[tau[x]] for x in range(e.lam)])


def shift_coset_rep(e: Etls, z0: int, h: int) -> Etls:
    """beta_2(z0) = h * alpha_2(z0), another representative of the same right coset."""
    if h not in e.subgroup:
        raise NotInSubgroup(f"{h} is not in {e.subgroup}")
    if not 0 <= z0 < e.lam:
        raise BadBlockIndex(f"block {z0} is outside 0..{e.lam - 1}")
    alpha2 = list(e.alpha2)
    alpha2[z0] = e.group.product(h, alpha2[z0])
    return _with_blocks(e, e.alpha1, alpha2)


def permute_subgroup(e: Etls, tau: Sequence[int]) -> Etls:
    """beta_1(x_1) = alpha_1(x_1 tau)."""
    _check_shuffle(tau, e.mu, "subgroup")
    return _with_blocks(e, [e.alpha1[tau[x]] for x in range(e.mu)], e.alpha2)
