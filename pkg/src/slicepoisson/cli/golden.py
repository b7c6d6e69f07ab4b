"""Pinned results for the shipped chart fixtures."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from ..errors import FixtureMissing
from ..orbitkit.fixtures import fixture_names
from .config import TASKS, JobConfig, order_tasks
from .pipeline import run


@dataclass(frozen=True)
class ItemResult:
    fixture: str
    item: str
    status: str  # pass | fail
    expected: object
    got: object


@dataclass(frozen=True)
class VerifySummary:
    results: tuple

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def to_text(self) -> str:
        lines = [f"{r.status.upper():4}  {r.fixture}: {r.item}" for r in self.results]
        lines.append(f"{sum(r.status == 'pass' for r in self.results)}/{len(self.results)} items pass")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "status": "pass" if self.passed else "fail",
            "items": [
                {"fixture": r.fixture, "item": r.item, "status": r.status, "expected": r.expected, "got": r.got}
                for r in self.results
            ],
        }
        return json.dumps(payload, indent=2) + "\n"


def compute_items(name: str) -> dict:
    """Every pinned item of a fixture, recomputed from the chart file."""
    config = JobConfig(
        complement="explicit",
        chart=name,
        tasks=order_tasks([t for t in TASKS if t != "general-orbit"]),
    )
    report = run(config)
    s = report.sections
    items: dict = {"errors": [f"{e['task']}: {e['error']}" for e in report.errors]}
    if "reduce" in s:
        items["lambda_N"] = s["reduce"]["matrix"]
        items["det_C"] = s["reduce"]["det_C"]
        items["weights"] = s["reduce"]["weights"]
    if "casimirs" in s:
        items["casimirs"] = [c["poly"] for c in s["casimirs"]["invariants"]]
        items["casimir_quasi_degrees"] = [c["quasi_degree"] for c in s["casimirs"]["invariants"]]
    if "determinantal" in s:
        items["det_over_lambda_N"] = s["determinantal"]["det_over_lambda_N"]
    if "omega" in s:
        for key in ("eliminated", "solution", "chi_top", "matrix", "c_prime"):
            items[f"omega_{key}" if key == "matrix" else key] = s["omega"][key]
    if "singularity" in s:
        for key in ("F0", "surface", "milnor_number", "milnor_basis", "invariant_basis", "table"):
            items[key] = s["singularity"][key]
    items["checks"] = report.checks
    return items


def golden_path(name: str):
    return resources.files("slicepoisson.data").joinpath("golden", f"{name}.json")


def load_golden(name: str) -> dict:
    path = golden_path(name)
    if not path.is_file():
        raise FixtureMissing(f"no golden file for {name!r}")
    return json.loads(path.read_text())


def verify_fixtures(names=None) -> VerifySummary:
    """Recompute each fixture and diff every pinned item; output order follows ``names``."""
    names = list(names) if names else fixture_names()
    known = fixture_names()
    for name in names:
        if name not in known:
            raise FixtureMissing(f"no chart fixture named {name!r} (have {', '.join(known)})")
    results = []
    for name in names:
        expected = load_golden(name)
        got = compute_items(name)
        for item in sorted(set(expected) | set(got)):
            e, g = expected.get(item), got.get(item)
            results.append(ItemResult(name, item, "pass" if e == g else "fail", e, g))
    return VerifySummary(tuple(results))
