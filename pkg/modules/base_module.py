import argparse
import logging
import sys
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Iterable, List

from modules.errors import PgmError, VerificationMismatch
from settings import Settings

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class EnhancedBaseModule(ABC):
    """One top-level CLI command: argument registration, logging and an exit-code wrapper."""

    def __init__(self, settings: Settings):
        self.settings = settings
        self._setup_logging()
        self.statistics: Dict[str, int] = {'runs': 0, 'failures': 0}

    def _setup_logging(self):
        self.logger = logging.getLogger(f'Module.{self.name}')
        self.logger.setLevel(self.settings.log_level)
        if not self.settings.log_dir or self.logger.handlers:
            return
        log_dir = Path(self.settings.log_dir)
        try:
            log_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            self.logger.warning(f"Cannot create log directory {log_dir}: {e}")
            return
        handler = logging.FileHandler(log_dir / f'{self.name.lower()}.log')
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        self.logger.addHandler(handler)

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def commands(self) -> List[str]:
        """Canonical command first, then aliases."""

    @property
    @abstractmethod
    def example(self) -> str:
        pass

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser, common: argparse.ArgumentParser):
        pass

    @abstractmethod
    def _run_impl(self, args: argparse.Namespace) -> int:
        pass

    def apply_settings(self, settings: Settings):
        self.settings = settings

    def get_statistics(self) -> Dict[str, Any]:
        return dict(self.statistics)

    def emit(self, lines: Iterable[str]):
        for line in lines:
            print(line)

    def run(self, args: argparse.Namespace) -> int:
        self.statistics['runs'] += 1
        try:
            return self._run_impl(args)
        except VerificationMismatch as e:
            self.statistics['failures'] += 1
            self.logger.error(f"Verification mismatch: {e}")
            print(f"mismatch: {e}")
            print(e.diff())
            return 1
        except PgmError as e:
            self.statistics['failures'] += 1
            self.logger.error(f"{type(e).__name__}: {e}")
            print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
            return 2
        except OSError as e:
            self.statistics['failures'] += 1
            self.logger.error(f"I/O error: {e}")
            print(f"error: {e}", file=sys.stderr)
            return 2
