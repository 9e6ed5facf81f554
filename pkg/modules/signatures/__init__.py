from modules.signatures.breve import breve_map, product_vector, validate_log_signature
from modules.signatures.knapsack import knapsack_join, knapsack_split
from modules.signatures.signature_builder import (
    canonical_etls,
    permute_subgroup,
    psquare_gamma,
    random_etls,
    reorder_cosets,
    shift_coset_rep,
)
from modules.signatures.signature_io import format_signature, parse_signature, parse_signature_lines, read_signature_file, write_signature_file
from modules.signatures.signature_types import BreveMap, Etls, KnapsackDigits, LogSignature

__all__ = [
    'BreveMap',
    'Etls',
    'KnapsackDigits',
    'LogSignature',
    'breve_map',
    'canonical_etls',
    'format_signature',
    'knapsack_join',
    'knapsack_split',
    'parse_signature',
    'parse_signature_lines',
    'permute_subgroup',
    'product_vector',
    'psquare_gamma',
    'random_etls',
    'read_signature_file',
    'reorder_cosets',
    'shift_coset_rep',
    'validate_log_signature',
    'write_signature_file',
]
