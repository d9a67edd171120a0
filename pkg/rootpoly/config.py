import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import yaml

VALID_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def _env_bool(name: str, default: bool = False) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    v = raw.strip().lower()
    if v in {"1", "true", "yes", "y", "on"}:
        return True
    if v in {"0", "false", "no", "n", "off"}:
        return False
    raise RuntimeError(f"Invalid boolean value for {name}={raw!r} (expected true/false).")


@dataclass
class VerifySettings:
    max_vertices: int = 3
    max_edges: int = 4
    allow_loops: bool = True
    allow_parallel: bool = True
    orderings_per_graph: int = 24
    seed: int = 0
    max_base_vertices: int = 4
    max_base_edges: int = 5


@dataclass
class Settings:
    log_level: str = "INFO"
    log_dir: Optional[Path] = None
    cache_dir: Optional[Path] = None
    use_cached_data: bool = False
    workers: int = 1
    verify: VerifySettings = field(default_factory=VerifySettings)


def _int(section: dict, name: str, prefix: str, default: int, minimum: int) -> int:
    raw = section.get(name, default)
    if isinstance(raw, bool):
        raise RuntimeError(f"{prefix}.{name} must be an integer")
    try:
        value = int(raw)
    except Exception as exc:
        raise RuntimeError(f"{prefix}.{name} must be an integer") from exc
    if value < minimum:
        raise RuntimeError(f"{prefix}.{name} must be >= {minimum}")
    return value


def _bool(section: dict, name: str, prefix: str, default: bool) -> bool:
    raw = section.get(name, default)
    if isinstance(raw, bool):
        return raw
    if isinstance(raw, str):
        v = raw.strip().lower()
        if v in {"1", "true", "yes", "y", "on"}:
            return True
        if v in {"0", "false", "no", "n", "off"}:
            return False
    raise RuntimeError(f"{prefix}.{name} must be boolean")


def _optional_dir(section: dict, name: str) -> Optional[Path]:
    raw = section.get(name)
    if raw is None:
        return None
    if not isinstance(raw, str) or not raw.strip():
        raise RuntimeError(f"runtime.{name} must be a path string or null")
    return Path(raw.strip())


def _section(raw: dict, name: str) -> dict:
    section = raw.get(name) or {}
    if not isinstance(section, dict):
        raise RuntimeError(f"{name} must be a mapping/object")
    return section


def _log_level(raw: object) -> str:
    level = str(raw).strip().upper()
    if level not in VALID_LOG_LEVELS:
        raise RuntimeError(f"runtime.log_level must be one of {sorted(VALID_LOG_LEVELS)}, got {raw!r}")
    return level


def _load_settings_from_yaml(path: str) -> Settings:
    """Load settings from a single YAML config file."""
    p = Path(path)
    if not p.is_file():
        raise RuntimeError(f"ROOTPOLY_CONFIG_FILE not found: {path}")

    try:
        raw_text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise RuntimeError(f"Failed to read YAML config file: {path}: {exc}") from exc

    try:
        raw = yaml.safe_load(raw_text)
    except yaml.YAMLError as exc:
        raise RuntimeError(f"Failed to parse YAML config: {path}: {exc}") from exc

    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise RuntimeError("YAML config root must be a mapping/object")

    runtime = _section(raw, "runtime")
    verify = _section(raw, "verify")

    defaults = VerifySettings()
    verify_settings = VerifySettings(
        max_vertices=_int(verify, "max_vertices", "verify", defaults.max_vertices, 1),
        max_edges=_int(verify, "max_edges", "verify", defaults.max_edges, 0),
        allow_loops=_bool(verify, "allow_loops", "verify", defaults.allow_loops),
        allow_parallel=_bool(verify, "allow_parallel", "verify", defaults.allow_parallel),
        orderings_per_graph=_int(verify, "orderings_per_graph", "verify", defaults.orderings_per_graph, 1),
        seed=_int(verify, "seed", "verify", defaults.seed, 0),
        max_base_vertices=_int(verify, "max_base_vertices", "verify", defaults.max_base_vertices, 1),
        max_base_edges=_int(verify, "max_base_edges", "verify", defaults.max_base_edges, 0),
    )

    return Settings(
        log_level=_log_level(runtime.get("log_level", "INFO")),
        log_dir=_optional_dir(runtime, "log_dir"),
        cache_dir=_optional_dir(runtime, "cache_dir"),
        use_cached_data=_bool(runtime, "use_cached_data", "runtime", False),
        workers=_int(runtime, "workers", "runtime", 1, 1),
        verify=verify_settings,
    )


def load_settings() -> Settings:
    """Load settings from the YAML file named by ROOTPOLY_CONFIG_FILE (defaults when unset).

    ROOTPOLY_LOG_LEVEL and ROOTPOLY_USE_CACHED_DATA override the file.
    """
    config_file = os.getenv("ROOTPOLY_CONFIG_FILE")
    settings = _load_settings_from_yaml(config_file) if config_file else Settings()

    env_level = os.getenv("ROOTPOLY_LOG_LEVEL")
    if env_level:
        settings.log_level = _log_level(env_level)
    settings.use_cached_data = _env_bool("ROOTPOLY_USE_CACHED_DATA", settings.use_cached_data)
    return settings
