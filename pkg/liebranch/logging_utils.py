# -*- coding: utf-8 -*-
"""
Logging setup for liebranch.

Writes to <user log dir>/app.log with rotation (1 MB × 3 files). The log dir
is platformdirs' user_log_dir unless LIEBRANCH_LOG_DIR is set.
Stdout belongs to command results, so console echo goes to stderr and is off
unless requested.

Usage:
    # Once at startup (cli.main):
    from liebranch.logging_utils import setup_logging
    setup_logging()

    # In any module that needs file logging:
    from liebranch.logging_utils import get_logger
    _log = get_logger(__name__)
    _log.debug("built %s", rs.type)
"""
from __future__ import annotations

import logging
import logging.handlers
import os
import sys
from pathlib import Path

from platformdirs import user_log_dir

_logger = logging.getLogger("liebranch")
_logger.addHandler(logging.NullHandler())
_initialized = False
_echo = False


def _log_dir() -> Path:
    override = os.getenv("LIEBRANCH_LOG_DIR", "").strip()
    if override:
        return Path(override)
    return Path(user_log_dir("liebranch", appauthor=False))


def setup_logging(level: int = logging.INFO, to_file: bool = True, echo: bool = False) -> None:
    """
    Initialize file logging. Call once at startup.
    Subsequent calls only update the echo flag.
    """
    global _initialized, _echo
    _echo = echo
    if _initialized:
        return
    _initialized = True
    _logger.setLevel(level)

    if not to_file:
        return

    log_dir = _log_dir()
    try:
        log_dir.mkdir(parents=True, exist_ok=True)
    except OSError:
        # read-only home; keep running without a file
        return

    formatter = logging.Formatter(
        "%(asctime)s [%(levelname)-8s] %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    fh = logging.handlers.RotatingFileHandler(
        log_dir / "app.log",
        maxBytes=1_000_000,
        backupCount=3,
        encoding="utf-8",
    )
    fh.setFormatter(formatter)
    fh.setLevel(level)
    _logger.addHandler(fh)

    _logger.info("=" * 60)
    _logger.info("liebranch started")
    _logger.info("=" * 60)


def get_logger(name: str) -> logging.Logger:
    """
    Return a child logger under the 'liebranch' namespace.

    Example:
        _log = get_logger(__name__)
        _log.info("catalog loaded")
    """
    if name == "liebranch" or name.startswith("liebranch."):
        return logging.getLogger(name)
    return logging.getLogger(f"liebranch.{name}")


def get_log_path() -> str:
    """Return the absolute path to the current log file."""
    return str(_log_dir() / "app.log")


# ---------------------------------------------------------------------------
# Convenience wrappers: always log, echo to stderr when enabled
# ---------------------------------------------------------------------------

def _say(tag: str, msg: str) -> None:
    if _echo:
        print(f"[{tag}] {msg}", file=sys.stderr)


def step(msg: str) -> None:
    _say("STEP", msg)
    _logger.info("[STEP] %s", msg)


def info(msg: str) -> None:
    _say("INFO", msg)
    _logger.info("%s", msg)


def warn(msg: str) -> None:
    _say("WARN", msg)
    _logger.warning("%s", msg)


def err(msg: str) -> None:
    _say("ERROR", msg)
    _logger.error("%s", msg)
