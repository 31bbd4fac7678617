# app_cli.py
# -*- coding: utf-8 -*-
from __future__ import annotations
import os, sys

# Make local package importable when running from repo root
sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

from liebranch.cli import main

if __name__ == "__main__":
    sys.exit(main())
