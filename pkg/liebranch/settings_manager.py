# -*- coding: utf-8 -*-
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields

from platformdirs import user_config_dir

from liebranch.logging_utils import get_logger

_log = get_logger(__name__)


def _app_dir() -> str:
    override = os.getenv("LIEBRANCH_HOME", "").strip()
    if override:
        return override
    return user_config_dir("liebranch", appauthor=False)


APP_DIR = _app_dir()
CFG_PATH = os.path.join(APP_DIR, "settings.json")


@dataclass
class Settings:
    """User settings stored in the per-user config directory."""

    output_format: str = "lie"  # "lie" or "json"
    log_level: str = "INFO"
    log_to_file: bool = True
    batch_workers: int = 4
    ledger_path: str = ""  # empty = <app dir>/data/ledger.xlsx


def ensure_dirs() -> str:
    """Ensure app directories exist."""
    os.makedirs(APP_DIR, exist_ok=True)
    data_dir = os.path.join(APP_DIR, "data")
    os.makedirs(data_dir, exist_ok=True)
    return data_dir


def get_default_ledger_file() -> str:
    return os.path.join(ensure_dirs(), "ledger.xlsx")


def load_settings() -> Settings:
    """Load settings from disk, or create defaults if not found."""
    ensure_dirs()

    if os.path.exists(CFG_PATH):
        try:
            with open(CFG_PATH, "r", encoding="utf-8") as f:
                data = json.load(f)
            # Merge with defaults to handle new fields
            known = {f.name for f in fields(Settings)}
            defaults = asdict(Settings())
            defaults.update({k: v for k, v in data.items() if k in known})
            return Settings(**defaults)
        except Exception as e:
            _log.warning("failed to load settings from %s: %s, using defaults", CFG_PATH, e)

    s = Settings()
    save_settings(s)
    return s


def save_settings(s: Settings) -> None:
    """Save settings to disk."""
    ensure_dirs()
    try:
        with open(CFG_PATH, "w", encoding="utf-8") as f:
            json.dump(asdict(s), f, ensure_ascii=False, indent=2)
    except OSError as e:
        _log.error("failed to save settings: %s", e)


