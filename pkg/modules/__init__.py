import logging
from typing import Dict

from settings import Settings

logger = logging.getLogger(__name__)


def initialize_modules(settings: Settings) -> Dict[str, "EnhancedBaseModule"]:  # noqa: F821
    # command modules import the whole library, so load them on demand
    from modules.cipher import CipherModule
    from modules.group_core import GroupModule
    from modules.verify import PsquareModule, VerifyModule
    from modules.witnesses import WitnessModule

    modules = {}
    for cls in (GroupModule, VerifyModule, PsquareModule, WitnessModule, CipherModule):
        try:
            module = cls(settings)
            modules[module.commands[0]] = module
        except Exception as e:
            logger.error(f"Error initializing {cls.__name__}: {e}")
    return modules
