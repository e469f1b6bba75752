"""Read-only access to the bundled golden-values file.

The file is a JSON map ``name -> {value, oracle}`` where ``value`` is a
decimal string of at least 30 significant digits and ``oracle`` describes how
the value was computed (two independent high-precision methods per entry; see
tools/generate_golden_values.py).  Values were produced before the library and
pin its test suite.
"""
from __future__ import annotations

import json
from decimal import Decimal
from importlib import resources
from pathlib import Path

_cache: dict[str, dict] = {}


def load(path: str | Path | None = None) -> dict:
    """Return the golden-values map, from ``path`` or the bundled copy."""
    key = str(path) if path is not None else "<bundled>"
    if key not in _cache:
        if path is not None:
            raw = Path(path).read_text()
        else:
            raw = resources.files("hfock.data").joinpath("golden_values.json").read_text()
        _cache[key] = json.loads(raw)
    return _cache[key]


def value(name: str, path: str | Path | None = None) -> float:
    """Golden value rounded to double precision."""
    return float(load(path)[name]["value"])


def decimal(name: str, path: str | Path | None = None) -> Decimal:
    """Golden value as an exact Decimal."""
    return Decimal(load(path)[name]["value"])
