# conftest.py
import os
import sys

# Modul top-level (config, cli, core) bisa diimport dari tests/
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
