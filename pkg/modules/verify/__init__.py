from modules.verify.experiment import TEST_MATRIX, predicted_verdict, psquare_analysis, run_experiment, run_matrix
from modules.verify.verify_module import PsquareModule, VerifyModule
from modules.verify.verify_types import ExperimentReport, PsquareReport, Verdict

__all__ = [
    'ExperimentReport',
    'PsquareModule',
    'PsquareReport',
    'TEST_MATRIX',
    'Verdict',
    'VerifyModule',
    'predicted_verdict',
    'psquare_analysis',
    'run_experiment',
    'run_matrix',
]
