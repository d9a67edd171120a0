import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s - %(message)s"
DATE_FORMAT = "%Y-%m-%dT%H:%M:%S"


def _file_handler(log_dir: Path, formatter: logging.Formatter) -> Optional[logging.Handler]:
    """Timestamped ``rootpoly-log_*.log`` under log_dir, or None if it cannot be created."""
    root = logging.getLogger()
    try:
        log_dir.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y-%m-%d__%H_%M_%S")
        log_file = log_dir / f"rootpoly-log_{timestamp}.log"
        handler = logging.FileHandler(log_file, mode="w", encoding="utf-8")
    except PermissionError as exc:
        root.error("File logging disabled (permission error writing to %s): %s", str(log_dir), exc)
        return None
    except OSError as exc:
        root.error("File logging disabled (OS error creating log file under %s): %s", str(log_dir), exc)
        return None
    handler.setFormatter(formatter)
    return handler


def configure_logging(level: str = "INFO", log_dir: Optional[Path] = None) -> Optional[Path]:
    """Configure the root logger; returns the log file path when file logging is on.

    Args:
        level: Log level (INFO, DEBUG, etc.)
        log_dir: If provided, also log to a timestamped file in this directory.
    """
    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)

    root = logging.getLogger()
    root.setLevel(level.upper())
    root.handlers.clear()

    # stdout carries command output only
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    root.addHandler(console_handler)

    if not log_dir:
        return None
    handler = _file_handler(Path(log_dir), formatter)
    if handler is None:
        return None
    root.addHandler(handler)
    root.info("Logging to file: %s", handler.baseFilename)
    return Path(handler.baseFilename)
