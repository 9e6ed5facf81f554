import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from modules import initialize_modules
from modules.base_module import LOG_FORMAT
from settings import Settings, __version__, load_config

logger = logging.getLogger(__name__)

# flag dest -> Settings field
OVERRIDES = {'degree_limit': 'degree_limit', 'seed': 'default_seed', 'porcelain': 'porcelain'}


def common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--degree-limit", dest="degree_limit", type=int, default=argparse.SUPPRESS, help="largest group order accepted")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for random signatures")
    common.add_argument("--porcelain", action="store_true", default=argparse.SUPPRESS, help="key=value output")
    common.add_argument("--config", type=Path, default=argparse.SUPPRESS, help="settings file")
    return common


def build_parser(modules: Dict[str, Any]) -> argparse.ArgumentParser:
    common = common_parser()
    parser = argparse.ArgumentParser(
        prog="pgmverify",
        description="PGM round functions, their generator families, and checks that they generate Sym(|G|).",
        parents=[common],
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    for module in modules.values():
        names = module.commands
        sub = commands.add_parser(names[0], aliases=names[1:], parents=[common], help=f"e.g. {module.example}", allow_abbrev=False)
        sub.set_defaults(module=module)
        module.add_arguments(sub, common)
    return parser


def run(argv: Optional[Sequence[str]] = None, settings: Optional[Settings] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if settings is None:
        pre, _ = common_parser().parse_known_args(argv)
        settings = load_config(getattr(pre, "config", None))
        logging.getLogger().setLevel(settings.log_level)
    modules = initialize_modules(settings)
    parser = build_parser(modules)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    update = {field: getattr(args, dest) for dest, field in OVERRIDES.items() if hasattr(args, dest)}
    module = args.module
    module.apply_settings(settings.model_copy(update=update))
    return module.run(args)


def main() -> int:
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)
    return run()


if __name__ == '__main__':
    try:
        sys.exit(main())
    except Exception as e:
        logger.critical(f"Application crashed: {e}", exc_info=True)
        sys.exit(1)
