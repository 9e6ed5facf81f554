from modules.group_core import Subgroup, make_chain
from modules.signatures import breve_map, canonical_etls, psquare_gamma
from modules.transforms import Permutation, pgm_transform
from settings import DEFAULT_DEGREE_LIMIT


def psquare_extra_generator(p: int, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> Permutation:
    """alpha o gamma^-1 on the cyclic group of order p^2: fixes 0 and sends p to 1, out of block 0."""
    gamma = psquare_gamma(p, degree_limit)
    g = gamma.group
    alpha = canonical_etls(g, make_chain(g, Subgroup(tuple(range(0, p * p, p)))))
    return pgm_transform(breve_map(alpha.signature), breve_map(gamma))
