from modules.group_core.group_factory import make_group, parse_descriptor
from modules.group_core.group_module import GroupModule
from modules.group_core.group_table import format_group, parse_group, parse_group_lines, read_group_file, validate_table, write_group_file
from modules.group_core.group_types import CosetDecomposition, GroupTable, Subgroup, SubgroupChain
from modules.group_core.subgroups import (
    element_order,
    enumerate_proper_subgroups,
    is_abelian,
    is_cyclic,
    is_hamiltonian,
    is_normal,
    is_subgroup,
    make_chain,
    minimal_generators,
    right_cosets,
    subgroup_closure,
)

__all__ = [
    'CosetDecomposition',
    'GroupModule',
    'GroupTable',
    'Subgroup',
    'SubgroupChain',
    'element_order',
    'enumerate_proper_subgroups',
    'format_group',
    'is_abelian',
    'is_cyclic',
    'is_hamiltonian',
    'is_normal',
    'is_subgroup',
    'make_chain',
    'make_group',
    'minimal_generators',
    'parse_descriptor',
    'parse_group',
    'parse_group_lines',
    'read_group_file',
    'right_cosets',
    'subgroup_closure',
    'validate_table',
    'write_group_file',
]
