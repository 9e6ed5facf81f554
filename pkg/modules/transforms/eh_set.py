import logging
from math import factorial
from typing import List, Optional, Sequence, Tuple

from modules.errors import ChainTooShort, DegenerateInput, NotInSubgroup, ProofError
from modules.group_core import GroupTable, Subgroup, SubgroupChain, enumerate_proper_subgroups, make_chain, minimal_generators
from modules.signatures import Etls, breve_map, canonical_etls, permute_subgroup, random_etls, reorder_cosets, shift_coset_rep
from modules.transforms.families import pgm_transform
from modules.transforms.transform_types import EhConfig, GeneratorFamily, NamedGenerator, Permutation
from settings import DEFAULT_DEGREE_LIMIT, DEFAULT_SUBGROUP_GENERATOR_BOUND

logger = logging.getLogger(__name__)


def choose_subgroups(
    g: GroupTable,
    degree_limit: int = DEFAULT_DEGREE_LIMIT,
    generator_bound: int = DEFAULT_SUBGROUP_GENERATOR_BOUND,
) -> Tuple[Subgroup, Optional[Subgroup]]:
    """H of least (prime) order; K larger than H when possible, else any other proper subgroup."""
    subgroups = enumerate_proper_subgroups(g, degree_limit, generator_bound)
    if not subgroups:
        raise ChainTooShort(f"{g.descriptor} has no nontrivial proper subgroup, so no chain with s >= 2")
    h = subgroups[0]
    larger = [k for k in subgroups if k.order > h.order]
    if larger:
        return h, larger[0]
    return h, subgroups[1] if len(subgroups) > 1 else None


def default_chain(g: GroupTable, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> SubgroupChain:
    h, _ = choose_subgroups(g, degree_limit)
    return make_chain(g, h)


def choose_eh_config(
    g: GroupTable,
    include_cross: bool = False,
    seeds: Sequence[int] = (),
    degree_limit: int = DEFAULT_DEGREE_LIMIT,
    generator_bound: int = DEFAULT_SUBGROUP_GENERATOR_BOUND,
) -> EhConfig:
    h, k = choose_subgroups(g, degree_limit, generator_bound)
    if include_cross and k is None:
        logger.warning(f"{g.descriptor} has a single proper subgroup {h}; building Eh without cross transforms")
        include_cross = False
    logger.debug(f"{g.descriptor}: H = {h}, K = {k}, cross = {include_cross}")
    return EhConfig(
        group=g,
        primary_chain=make_chain(g, h),
        secondary_chain=make_chain(g, k) if k is not None else None,
        include_cross=include_cross,
        seeds=tuple(seeds),
    )


def _lands_outside_zero_block(alpha: Etls, beta: Etls, h: int) -> bool:
    a, b = breve_map(alpha.signature), breve_map(beta.signature)
    x = a.backward[h]
    return b.backward[a.forward[0]] == 0 and b.backward[a.forward[x]] % alpha.lam != 0


def _outside_target(start: int, step: int, count: int, lam: int, taken: int) -> int:
    """Least y_1 != taken whose point start + step * y_1 is not a multiple of lam."""
    for y1 in range(count):
        if y1 != taken and (start + step * y1) % lam != 0:
            return y1
    raise ProofError(f"every point {start} + {step}*y lies in the zero block")


def case_three_signature(alpha: Etls, beta: Etls, h: int) -> Etls:
    """Adjust beta over K so that alpha o beta^-1 fixes 0 and carries alpha^-1(h) out of block 0.

    With |K| > |H|, beta is changed by a diagonal permutation when h is in K and by a regular
    permutation on the block holding h otherwise. In the elementary abelian case (|K| = |H|,
    H and K meeting trivially) beta is left as it is.
    """
    if h not in alpha.subgroup:
        raise NotInSubgroup(f"{h} is not in {alpha.subgroup}")
    if h == 0:
        raise DegenerateInput("h must be a nontrivial element of H")
    g = alpha.group
    if _lands_outside_zero_block(alpha, beta, h):
        return beta
    k = beta.subgroup
    if k.order <= alpha.subgroup.order:
        raise ProofError(f"no adjustment of beta over {k} moves {h} out of the zero block")
    lam_k = beta.lam
    b = breve_map(beta.signature)
    y = b.backward[h]
    y2, y1 = y % lam_k, y // lam_k
    if h in k:
        # y2 == 0: swap y1 with a point of B'_0 outside B_0, keeping 0 fixed
        target = _outside_target(0, lam_k, beta.mu, alpha.lam, 0)
        tau = list(range(beta.mu))
        tau[y1], tau[target] = tau[target], tau[y1]
        adjusted = permute_subgroup(beta, tau)
    else:
        # h = beta_1(y1) * beta_2(y2); re-pick beta_2(y2) so h gets coordinate target
        target = _outside_target(y2, lam_k, beta.mu, alpha.lam, -1)
        shift = g.product(g.inverse(beta.alpha1[target]), beta.alpha1[y1])
        adjusted = shift_coset_rep(beta, y2, shift)
    if not _lands_outside_zero_block(alpha, adjusted, h):
        raise ProofError(f"adjusted signature does not move {h} out of the zero block")
    return adjusted


def _dedupe(generators: List[NamedGenerator], n: int) -> List[NamedGenerator]:
    seen = {Permutation.identity(n)}
    result = []
    for gen in generators:
        if gen.perm not in seen:
            seen.add(gen.perm)
            result.append(gen)
    return result


def named_eh_generators(cfg: EhConfig) -> List[NamedGenerator]:
    """Structured Eh elements: blockwise, regular and diagonal for H, then cross transforms over K."""
    g = cfg.group
    alpha = canonical_etls(g, cfg.primary_chain)
    a = breve_map(alpha.signature)
    lam, mu = cfg.lam, cfg.mu

    def eh(beta: Etls) -> Permutation:
        return pgm_transform(a, breve_map(beta.signature))

    generators = []
    for tau in (Permutation.transposition(lam, 0, 1), Permutation.cycle(lam, *range(lam))):
        perm = eh(reorder_cosets(alpha, tau.inverse().images))
        generators.append(NamedGenerator(GeneratorFamily.BLOCKWISE, tau.images, perm))
    for z0 in range(lam):
        for h in minimal_generators(g, cfg.h):
            perm = eh(shift_coset_rep(alpha, z0, g.inverse(h)))
            generators.append(NamedGenerator(GeneratorFamily.REGULAR, (z0, h), perm))
    for tau in (Permutation.transposition(mu, 0, 1), Permutation.cycle(mu, *range(mu))):
        perm = eh(permute_subgroup(alpha, tau.inverse().images))
        generators.append(NamedGenerator(GeneratorFamily.DIAGONAL, tau.images, perm))
    if cfg.include_cross and cfg.secondary_chain is not None:
        beta = canonical_etls(g, cfg.secondary_chain)
        for h in cfg.h:
            if h != 0:
                perm = eh(case_three_signature(alpha, beta, h))
                generators.append(NamedGenerator(GeneratorFamily.CROSS, (h,), perm))
        for seed in cfg.seeds:
            perm = eh(random_etls(g, cfg.secondary_chain, seed))
            generators.append(NamedGenerator(GeneratorFamily.CROSS_RANDOM, (seed,), perm))
    result = _dedupe(generators, g.n)
    logger.debug(f"{g.descriptor}: {len(result)} generators from {len(generators)} candidates")
    return result


def eh_generating_set(cfg: EhConfig) -> List[Permutation]:
    return [gen.perm for gen in named_eh_generators(cfg)]


def wreath_order(lam: int, mu: int) -> int:
    """Order of Sym(mu) wr Sym(lam), the stabilizer of a lam x mu block system."""
    return factorial(mu) ** lam * factorial(lam)
