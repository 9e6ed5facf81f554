from modules.witnesses.completion import odd_parity_generator, three_cycle_any, three_cycle_odd
from modules.witnesses.movers import complete_map, mover_two_transitive, transposition_any
from modules.witnesses.proof_context import build_proof_context, factor_perm, make_word
from modules.witnesses.psquare import psquare_extra_generator
from modules.witnesses.witness_io import format_witness, write_witness_file
from modules.witnesses.witness_module import WitnessModule
from modules.witnesses.witness_types import ProofContext, WitnessWord, WordFactor

__all__ = [
    'ProofContext',
    'WitnessModule',
    'WitnessWord',
    'WordFactor',
    'build_proof_context',
    'complete_map',
    'factor_perm',
    'format_witness',
    'make_word',
    'mover_two_transitive',
    'odd_parity_generator',
    'psquare_extra_generator',
    'three_cycle_any',
    'three_cycle_odd',
    'transposition_any',
    'write_witness_file',
]
