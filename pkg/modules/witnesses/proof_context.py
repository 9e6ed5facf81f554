import logging
from typing import Iterable, Sequence

from modules.errors import MissingSecondarySubgroup
from modules.group_core import GroupTable
from modules.permgroup import compose_all, schreier_sims
from modules.signatures import breve_map, canonical_etls, random_etls
from modules.transforms import (
    GeneratorFamily,
    Permutation,
    blockwise_perm,
    case_three_signature,
    choose_eh_config,
    diagonal_perm,
    named_eh_generators,
    pgm_transform,
    regular_perm,
)
from modules.witnesses.witness_types import ProofContext, WitnessWord, WordFactor
from settings import DEFAULT_DEGREE_LIMIT, DEFAULT_SUBGROUP_GENERATOR_BOUND

logger = logging.getLogger(__name__)


def build_proof_context(
    g: GroupTable,
    include_cross: bool = True,
    seeds: Sequence[int] = (),
    degree_limit: int = DEFAULT_DEGREE_LIMIT,
    generator_bound: int = DEFAULT_SUBGROUP_GENERATOR_BOUND,
) -> ProofContext:
    cfg = choose_eh_config(g, include_cross, seeds, degree_limit, generator_bound)
    alpha = canonical_etls(g, cfg.primary_chain)
    generators = tuple(named_eh_generators(cfg))
    bsgs = schreier_sims([gen.perm for gen in generators], g.n)
    beta = canonical_etls(g, cfg.secondary_chain) if cfg.include_cross and cfg.secondary_chain is not None else None
    logger.debug(f"proof context for {g.descriptor}: {len(generators)} generators, order {bsgs.order}")
    return ProofContext(
        group=g,
        config=cfg,
        alpha=alpha,
        alpha_breve=breve_map(alpha.signature),
        beta=beta,
        generators=generators,
        bsgs=bsgs,
    )


def _cross_perm(ctx: ProofContext, factor: WordFactor) -> Permutation:
    if ctx.beta is None or ctx.config.secondary_chain is None:
        raise MissingSecondarySubgroup(f"{factor} needs a secondary subgroup K with cross transforms enabled")
    if factor.family is GeneratorFamily.CROSS:
        beta = case_three_signature(ctx.alpha, ctx.beta, factor.params[0])
    else:
        beta = random_etls(ctx.group, ctx.config.secondary_chain, factor.params[0])
    return pgm_transform(ctx.alpha_breve, breve_map(beta.signature))


def factor_perm(ctx: ProofContext, factor: WordFactor) -> Permutation:
    if factor.family is GeneratorFamily.BLOCKWISE:
        perm = blockwise_perm(Permutation(factor.params), ctx.lam, ctx.mu)
    elif factor.family is GeneratorFamily.DIAGONAL:
        perm = diagonal_perm(Permutation(factor.params), ctx.lam, ctx.mu)
    elif factor.family is GeneratorFamily.REGULAR:
        z0, h = factor.params
        perm = regular_perm(ctx.alpha, z0, h)
    else:
        perm = _cross_perm(ctx, factor)
    return perm.inverse() if factor.inverted else perm


def make_word(ctx: ProofContext, factors: Iterable[WordFactor]) -> WitnessWord:
    factors = tuple(factors)
    product = compose_all((factor_perm(ctx, f) for f in factors), ctx.n)
    return WitnessWord(factors, product)


def blockwise(tau: Permutation) -> WordFactor:
    return WordFactor(GeneratorFamily.BLOCKWISE, tau.images)


def diagonal(tau: Permutation) -> WordFactor:
    return WordFactor(GeneratorFamily.DIAGONAL, tau.images)


def regular(z0: int, h: int) -> WordFactor:
    return WordFactor(GeneratorFamily.REGULAR, (z0, h))


def cross(h: int) -> WordFactor:
    return WordFactor(GeneratorFamily.CROSS, (h,))
