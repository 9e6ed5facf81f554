import logging
import random
from typing import Optional

from modules.cipher.cipher_types import PgmKey
from modules.errors import DegreeMismatch, OutOfRange
from modules.group_core import GroupTable, SubgroupChain
from modules.signatures import LogSignature, breve_map, random_etls
from modules.transforms import pgm_transform

logger = logging.getLogger(__name__)


def key_from_signatures(g: GroupTable, alpha: LogSignature, beta: LogSignature, seed: Optional[int] = None) -> PgmKey:
    if alpha.n != g.n or beta.n != g.n:
        raise DegreeMismatch(f"signatures over {alpha.n} and {beta.n} points for a group of order {g.n}")
    enc = pgm_transform(breve_map(alpha), breve_map(beta))
    return PgmKey(group=g, alpha=alpha, beta=beta, enc=enc, dec=enc.inverse(), seed=seed)


def keygen(g: GroupTable, chain: SubgroupChain, seed: int) -> PgmKey:
    """Two independent random exact-transversal signatures, both drawn from one seed."""
    rng = random.Random(seed)
    alpha_seed, beta_seed = rng.getrandbits(64), rng.getrandbits(64)
    alpha = random_etls(g, chain, alpha_seed)
    beta = random_etls(g, chain, beta_seed)
    logger.debug(f"keygen over {g.descriptor} with seed {seed}")
    return key_from_signatures(g, alpha.signature, beta.signature, seed)


def _check_block(k: PgmKey, value: int, what: str):
    if not 0 <= value < k.n:
        raise OutOfRange(f"{what} {value} is outside 0..{k.n - 1}")


def encrypt(k: PgmKey, m: int) -> int:
    _check_block(k, m, "message")
    return k.enc(m)


def decrypt(k: PgmKey, c: int) -> int:
    _check_block(k, c, "ciphertext")
    return k.dec(c)
