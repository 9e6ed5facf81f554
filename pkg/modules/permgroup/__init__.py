from modules.permgroup.group_structure import analyze, brute_force_closure, find_block_systems, transitivity_degree
from modules.permgroup.perm_ops import compose, compose_all, conjugate, cycle_type, inverse, is_even, parity
from modules.permgroup.permgroup_types import Bsgs, GroupFacts
from modules.permgroup.stabilizer_chain import contains, schreier_sims

__all__ = [
    'Bsgs',
    'GroupFacts',
    'analyze',
    'brute_force_closure',
    'compose',
    'compose_all',
    'conjugate',
    'contains',
    'cycle_type',
    'find_block_systems',
    'inverse',
    'is_even',
    'parity',
    'schreier_sims',
    'transitivity_degree',
]
