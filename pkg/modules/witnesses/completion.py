import logging

from modules.errors import BadBlockCoordinates, DegenerateInput, EvenDegree, ProofError
from modules.permgroup import cycle_type, parity
from modules.transforms import Permutation
from modules.witnesses.movers import mover_two_transitive
from modules.witnesses.proof_context import blockwise, diagonal, make_word, regular
from modules.witnesses.witness_types import ProofContext, WitnessWord

logger = logging.getLogger(__name__)


def three_cycle_odd(ctx: ProofContext, block: int, a: int, b: int) -> WitnessWord:
    """sigma^pi * sigma with sigma the diagonal (a b) and pi the regular cycle of H on block sending a to b."""
    if ctx.n % 2 == 0:
        raise EvenDegree(f"n = {ctx.n} is even; use transpositions instead of 3-cycles")
    if not 0 <= block < ctx.lam:
        raise BadBlockCoordinates(f"block {block} is outside 0..{ctx.lam - 1}")
    if a == b or not (0 <= a < ctx.mu and 0 <= b < ctx.mu):
        raise BadBlockCoordinates(f"need distinct coordinates in 0..{ctx.mu - 1}, got {a}, {b}")
    g, alpha1 = ctx.group, ctx.alpha.alpha1
    h = g.product(g.inverse(alpha1[a]), alpha1[b])
    pi = regular(block, h)
    sigma = diagonal(Permutation.transposition(ctx.mu, a, b))
    word = make_word(ctx, [pi.inverse(), sigma, pi, sigma])
    expected = (3,) + (1,) * (ctx.n - 3)
    if cycle_type(word.product) != expected:
        raise ProofError(f"sigma^pi * sigma has cycle type {cycle_type(word.product)}")
    if any(ctx.block(x) != block for x in word.product.support()):
        raise ProofError(f"3-cycle leaves block {block}")
    return word


def odd_parity_generator(ctx: ProofContext) -> WitnessWord:
    """A regular transposition when |H| = 2, else a blockwise swap of two blocks of odd size."""
    if ctx.mu == 2:
        word = make_word(ctx, [regular(0, ctx.alpha.alpha1[1])])
    elif ctx.mu % 2:
        word = make_word(ctx, [blockwise(Permutation.transposition(ctx.lam, 0, 1))])
    else:
        raise ProofError(f"no odd structured generator for |H| = {ctx.mu}")
    if parity(word.product) != -1:
        raise ProofError("odd-parity generator came out even")
    return word


def three_cycle_any(ctx: ProofContext, a: int, b: int, c: int) -> WitnessWord:
    """(a b c) from conjugates (b a d) and (b c e) of the block 3-cycle."""
    if len({a, b, c}) != 3:
        raise DegenerateInput(f"a 3-cycle needs three distinct points, got {a}, {b}, {c}")
    base = three_cycle_odd(ctx, 0, 0, 1)
    u, v, w = base.product.cycles()[0]
    t1 = base.conjugated_by(mover_two_transitive(ctx, u, v, b, a))
    t2 = base.conjugated_by(mover_two_transitive(ctx, u, v, b, c))
    d, e = t1.product(a), t2.product(c)
    if d == c:
        word = t1.concat(t1)
    elif e == a:
        word = t2
    elif d == e:
        word = t2.concat(t1.inverted())
    else:
        word = t1.inverted().concat(t1.conjugated_by(t2))
    if word.product != Permutation.cycle(ctx.n, a, b, c):
        raise ProofError(f"assembled word is not the 3-cycle ({a} {b} {c})")
    logger.debug(f"3-cycle ({a} {b} {c}) as a word of {len(word)} factors")
    return word
