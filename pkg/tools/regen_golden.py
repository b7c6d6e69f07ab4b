"""Rewrite the pinned fixture results from a fresh computation.

Run after an intentional change, then review the diff; the test suite
checks the pinned values against independently transcribed expectations.

    python3 tools/regen_golden.py
"""

from __future__ import annotations

import json
from pathlib import Path

from slicepoisson.cli.golden import compute_items
from slicepoisson.orbitkit.fixtures import fixture_names

OUT = Path(__file__).resolve().parents[1] / "src" / "slicepoisson" / "data" / "golden"

for name in fixture_names():
    items = compute_items(name)
    (OUT / f"{name}.json").write_text(json.dumps(items, indent=2, sort_keys=True) + "\n")
    print(f"wrote {name}.json")
