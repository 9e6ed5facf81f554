import logging
from typing import Dict, List

from modules.errors import BadBlockCoordinates, DegenerateInput, MissingSecondarySubgroup, OddDegree, ProofError
from modules.transforms import Permutation
from modules.witnesses.proof_context import blockwise, cross, diagonal, make_word, regular
from modules.witnesses.witness_types import ProofContext, WitnessWord, WordFactor

logger = logging.getLogger(__name__)


def complete_map(size: int, fixed: Dict[int, int]) -> Permutation:
    """A permutation of I_size extending fixed; leftover points go to leftover images in increasing order."""
    images: List[int] = [-1] * size
    for a, b in fixed.items():
        images[a] = b
    free = iter(sorted(set(range(size)) - set(fixed.values())))
    for x in range(size):
        if images[x] < 0:
            images[x] = next(free)
    return Permutation(tuple(images))


def _check_points(ctx: ProofContext, *points: int):
    bad = [p for p in points if not 0 <= p < ctx.n]
    if bad:
        raise BadBlockCoordinates(f"point {bad[0]} is outside 0..{ctx.n - 1}")


def _shift(ctx: ProofContext, src: int, dst: int) -> int:
    """h with alpha_1(src) * h = alpha_1(dst)."""
    g, alpha1 = ctx.group, ctx.alpha.alpha1
    return g.product(g.inverse(alpha1[src]), alpha1[dst])


def _across_blocks(ctx: ProofContext, x: int, x2: int, y: int, y2: int) -> List[WordFactor]:
    by, by2 = ctx.block(y), ctx.block(y2)
    tau = complete_map(ctx.lam, {ctx.block(x): by, ctx.block(x2): by2})
    return [
        blockwise(tau),
        regular(by, _shift(ctx, ctx.coordinate(x), ctx.coordinate(y))),
        regular(by2, _shift(ctx, ctx.coordinate(x2), ctx.coordinate(y2))),
    ]


def _within_block(ctx: ProofContext, x: int, x2: int, y: int, y2: int) -> List[WordFactor]:
    tau = complete_map(ctx.lam, {ctx.block(x): ctx.block(y)})
    sigma = complete_map(ctx.mu, {ctx.coordinate(x): ctx.coordinate(y), ctx.coordinate(x2): ctx.coordinate(y2)})
    return [blockwise(tau), diagonal(sigma)]


def _out_of_block(ctx: ProofContext, x: int, x2: int, y: int, y2: int) -> List[WordFactor]:
    """Same block to different blocks: bring x2 to 0, push x out of block 0 with a cross transform, then move across blocks."""
    if ctx.beta is None:
        raise MissingSecondarySubgroup(f"moving ({x},{x2}) out of one block needs cross transforms over a subgroup K")
    factors: List[WordFactor] = []
    tau = complete_map(ctx.lam, {ctx.block(x): 0})
    if not tau.is_identity():
        factors.append(blockwise(tau))
    sigma = complete_map(ctx.mu, {ctx.coordinate(x2): 0})
    if not sigma.is_identity():
        factors.append(diagonal(sigma))
    x_now = ctx.point(0, sigma(ctx.coordinate(x)))
    factors.append(cross(ctx.alpha.alpha1[ctx.coordinate(x_now)]))
    staged = make_word(ctx, factors)
    x_next, x2_next = staged.product(x), staged.product(x2)
    if x2_next != 0 or ctx.block(x_next) == 0:
        raise ProofError(f"cross transform left ({x_next},{x2_next}) in block 0")
    return factors + _across_blocks(ctx, x_next, x2_next, y, y2)


def mover_two_transitive(ctx: ProofContext, x: int, x2: int, y: int, y2: int) -> WitnessWord:
    """A word in the structured generators sending x to y and x2 to y2."""
    _check_points(ctx, x, x2, y, y2)
    if x == x2 or y == y2:
        raise DegenerateInput(f"need x != x2 and y != y2, got ({x},{x2}) -> ({y},{y2})")
    same_source = ctx.block(x) == ctx.block(x2)
    same_target = ctx.block(y) == ctx.block(y2)
    if same_source and not same_target:
        word = make_word(ctx, _out_of_block(ctx, x, x2, y, y2))
    elif not same_source and same_target:
        word = mover_two_transitive(ctx, y, y2, x, x2).inverted()
    elif same_source:
        word = make_word(ctx, _within_block(ctx, x, x2, y, y2))
    else:
        word = make_word(ctx, _across_blocks(ctx, x, x2, y, y2))
    if word.product(x) != y or word.product(x2) != y2:
        raise ProofError(f"mover for ({x},{x2}) -> ({y},{y2}) ends at ({word.product(x)},{word.product(x2)})")
    logger.debug(f"mover ({x},{x2}) -> ({y},{y2}): {len(word)} factors")
    return word


def transposition_any(ctx: ProofContext, a: int, b: int) -> WitnessWord:
    """(a b) as the regular transposition (0 lambda) conjugated by a mover; needs |H| = 2."""
    _check_points(ctx, a, b)
    if a == b:
        raise DegenerateInput("a transposition needs two distinct points")
    if ctx.n % 2 or ctx.mu != 2:
        raise OddDegree(f"transpositions come from an order-2 subgroup H; n = {ctx.n}, |H| = {ctx.mu}")
    base = make_word(ctx, [regular(0, ctx.alpha.alpha1[1])])
    word = base.conjugated_by(mover_two_transitive(ctx, 0, ctx.lam, a, b))
    if word.product != Permutation.transposition(ctx.n, a, b):
        raise ProofError(f"conjugated transposition is not ({a} {b})")
    return word
