from modules.transforms.eh_set import (
    case_three_signature,
    choose_eh_config,
    choose_subgroups,
    default_chain,
    eh_generating_set,
    named_eh_generators,
    wreath_order,
)
from modules.transforms.families import blockwise_perm, canonical_blocks, diagonal_perm, pgm_transform, regular_perm, regular_tau
from modules.transforms.perm_io import (
    format_generator_set,
    format_permutation,
    parse_generator_set,
    parse_permutation,
    read_generator_file,
    write_generator_file,
)
from modules.transforms.transform_types import BlockSystem, EhConfig, GeneratorFamily, NamedGenerator, Permutation

__all__ = [
    'BlockSystem',
    'EhConfig',
    'GeneratorFamily',
    'NamedGenerator',
    'Permutation',
    'blockwise_perm',
    'canonical_blocks',
    'case_three_signature',
    'choose_eh_config',
    'choose_subgroups',
    'default_chain',
    'diagonal_perm',
    'eh_generating_set',
    'format_generator_set',
    'format_permutation',
    'named_eh_generators',
    'parse_generator_set',
    'parse_permutation',
    'pgm_transform',
    'read_generator_file',
    'regular_perm',
    'regular_tau',
    'wreath_order',
    'write_generator_file',
]
