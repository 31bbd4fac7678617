# -*- coding: utf-8 -*-
"""
Central config & sane defaults for liebranch.
"""
import os

from dotenv import load_dotenv

load_dotenv()

# Prefer the settings file; fall back to environment variables for
# non-interactive use (CI, batch jobs on read-only homes)
try:
    from liebranch.settings_manager import get_default_ledger_file, load_settings

    _settings = load_settings()
    DEFAULT_FORMAT = _settings.output_format
    DEFAULT_LOG_LEVEL = _settings.log_level
    DEFAULT_LOG_TO_FILE = _settings.log_to_file
    DEFAULT_WORKERS = _settings.batch_workers
    DEFAULT_LEDGER_PATH = _settings.ledger_path or get_default_ledger_file()
except Exception:
    DEFAULT_FORMAT = "lie"
    DEFAULT_LOG_LEVEL = "INFO"
    DEFAULT_LOG_TO_FILE = True
    DEFAULT_WORKERS = 4
    DEFAULT_LEDGER_PATH = "ledger.xlsx"

# environment wins over the settings file
DEFAULT_FORMAT = os.getenv("LIEBRANCH_FORMAT", DEFAULT_FORMAT).strip().lower()
DEFAULT_LOG_LEVEL = os.getenv("LIEBRANCH_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
DEFAULT_WORKERS = int(os.getenv("LIEBRANCH_WORKERS", str(DEFAULT_WORKERS)))

OUTPUT_FORMATS = ("lie", "json")
if DEFAULT_FORMAT not in OUTPUT_FORMATS:
    DEFAULT_FORMAT = "lie"
