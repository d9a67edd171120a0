import logging
import sys
from typing import List, Optional

from .cli import EXIT_RELATION_FAILED, EXIT_USAGE, parse_args
from .config import load_settings
from .errors import RootPolyError, StructuralError
from .logging_config import configure_logging

logger = logging.getLogger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        settings = load_settings()
    except RuntimeError as exc:
        print(f"Configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(args.log_level or settings.log_level, log_dir=settings.log_dir)

    try:
        return args.func(args, settings)
    except StructuralError as exc:
        # A theorem-backed consistency check failed.
        logger.error("%s", exc)
        return EXIT_RELATION_FAILED
    except RootPolyError as exc:
        logger.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
