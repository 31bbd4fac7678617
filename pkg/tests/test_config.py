# -*- coding: utf-8 -*-
import json
import os

import pytest

from liebranch import config, settings_manager
from liebranch.settings_manager import Settings, load_settings, save_settings


@pytest.fixture
def home(tmp_path, monkeypatch):
    monkeypatch.setattr(settings_manager, "APP_DIR", str(tmp_path))
    monkeypatch.setattr(settings_manager, "CFG_PATH", str(tmp_path / "settings.json"))
    return tmp_path


def test_defaults_are_written(home):
    s = load_settings()
    assert s == Settings()
    assert (home / "settings.json").exists()
    assert (home / "data").is_dir()


def test_round_trip(home):
    save_settings(Settings(output_format="json", batch_workers=2, ledger_path="x.csv"))
    s = load_settings()
    assert s.output_format == "json"
    assert s.batch_workers == 2
    assert s.ledger_path == "x.csv"


def test_unknown_keys_ignored_and_missing_filled(home):
    (home / "settings.json").write_text(json.dumps({"log_level": "DEBUG", "colour": "blue"}), encoding="utf-8")
    s = load_settings()
    assert s.log_level == "DEBUG"
    assert s.batch_workers == Settings().batch_workers


def test_corrupt_file_falls_back(home):
    (home / "settings.json").write_text("{not json", encoding="utf-8")
    assert load_settings() == Settings()


def test_default_ledger_under_app_dir(home):
    assert settings_manager.get_default_ledger_file() == os.path.join(str(home), "data", "ledger.xlsx")


def test_config_defaults_are_sane():
    assert config.DEFAULT_FORMAT in config.OUTPUT_FORMATS
    assert config.DEFAULT_WORKERS >= 1
