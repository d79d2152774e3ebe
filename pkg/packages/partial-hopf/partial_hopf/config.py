"""Runtime switches read from the environment.

PARTIAL_HOPF_DEBUG=true enables debug logging, PARTIAL_HOPF_WORKERS caps the
worker threads used for verification entries and product-table cells.
Command-line flags override both through :func:`override`.
"""

from __future__ import annotations

import logging
import os

ENV_DEBUG = "PARTIAL_HOPF_DEBUG"
ENV_WORKERS = "PARTIAL_HOPF_WORKERS"
LOG_FORMAT = "[%(name)s] %(levelname)s %(message)s"

log = logging.getLogger(__name__)

_overrides: dict[str, object] = {}


def DEBUG() -> bool:
    """Check if debug mode is enabled."""
    if "debug" in _overrides:
        return bool(_overrides["debug"])
    return os.environ.get(ENV_DEBUG, "").lower() == "true"


def max_workers() -> int:
    if "workers" in _overrides:
        return int(_overrides["workers"])  # type: ignore[arg-type]
    raw = os.environ.get(ENV_WORKERS)
    if raw is None or raw == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        log.warning("ignoring %s=%r: not an integer", ENV_WORKERS, raw)
        return 1
    if value < 1:
        log.warning("ignoring %s=%r: must be at least 1", ENV_WORKERS, raw)
        return 1
    return value


def override(*, debug: bool | None = None, workers: int | None = None) -> None:
    if debug is not None:
        _overrides["debug"] = debug
    if workers is not None:
        if workers < 1:
            raise ValueError("workers must be at least 1")
        _overrides["workers"] = workers


def reset() -> None:
    _overrides.clear()


def configure_logging() -> None:
    """Attach one stderr handler to the package logger, replacing an earlier one."""
    root = logging.getLogger("partial_hopf")
    for handler in [h for h in root.handlers if getattr(h, "_partial_hopf", False)]:
        root.removeHandler(handler)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._partial_hopf = True  # type: ignore[attr-defined]
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if DEBUG() else logging.WARNING)
