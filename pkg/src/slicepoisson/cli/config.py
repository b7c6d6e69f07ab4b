"""Flat ``key = value`` job files.

Values are plain strings or bracketed arrays (``[0, 2]``).  Lines starting
with ``#`` are comments.  Example::

    algebra = G2
    orbit = [0, 2]
    complement = explicit
    chart = g2-subregular
    tasks = all
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ..errors import ConfigError

TASKS = ("reduce", "casimirs", "determinantal", "omega", "singularity", "checks", "general-orbit")
REQUIRES = {
    "reduce": (),
    "casimirs": ("reduce",),
    "determinantal": ("casimirs",),
    "omega": ("casimirs",),
    "singularity": ("omega",),
    "checks": ("reduce",),
    "general-orbit": (),
}
KEYS = ("algebra", "rank", "form_scale", "orbit", "h", "hint", "complement", "chart", "tasks", "element", "output", "format")
FORMATS = ("json", "latex", "text")


@dataclass(frozen=True)
class JobConfig:
    algebra: str | None = None
    form_scale: str | None = None
    orbit: tuple | None = None  # weighted Dynkin labels
    h: str | None = None  # explicit characteristic as "index:coeff" entries
    hint: str | None = None  # e of the triple as "index:coeff" entries
    complement: str = "canonical"  # canonical | explicit | path to a .chart file
    chart: str | None = None  # fixture name or path used by the explicit complement
    tasks: tuple = ("reduce",)
    elements: tuple = ()  # general-orbit inputs, "index:coeff" entries
    output: str | None = None
    format: str = "json"
    source: str = "<config>"

    def as_dict(self) -> dict:
        out = {
            "algebra": self.algebra,
            "form_scale": self.form_scale,
            "orbit": list(self.orbit) if self.orbit is not None else None,
            "h": self.h,
            "hint": self.hint,
            "complement": self.complement,
            "chart": self.chart,
            "tasks": list(self.tasks),
            "elements": list(self.elements),
        }
        return {k: v for k, v in out.items() if v not in (None, [], ())}


def _value(text: str):
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ConfigError(f"unterminated array {text!r}")
        inner = text[1:-1].strip()
        return [item.strip() for item in inner.split(",")] if inner else []
    return text


def order_tasks(requested) -> tuple:
    """Requested tasks plus their prerequisites, in dependency order."""
    wanted = set()

    def add(task):
        if task not in REQUIRES:
            raise ConfigError(f"unknown task {task!r}; choose from {', '.join(TASKS)}")
        if task in wanted:
            return
        wanted.add(task)
        for dep in REQUIRES[task]:
            add(dep)

    for task in requested:
        add(task)
    return tuple(t for t in TASKS if t in wanted)


def parse_config(text: str, source: str = "<config>", base: Path | None = None) -> JobConfig:
    raw: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ConfigError(f"{source}:{lineno}: expected key = value")
        if key not in KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in raw:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        raw[key] = _value(value)

    def scalar(key):
        v = raw.get(key)
        if isinstance(v, list):
            return " ".join(v)
        return v

    algebra = scalar("algebra")
    if algebra and "rank" in raw and algebra.isalpha():
        algebra = f"{algebra}{scalar('rank')}"
    orbit = raw.get("orbit")
    if orbit is not None:
        items = orbit if isinstance(orbit, list) else orbit.replace(",", " ").split()
        try:
            orbit = tuple(int(x) for x in items)
        except ValueError:
            raise ConfigError(f"{source}: orbit labels must be integers, got {orbit!r}") from None
    tasks = raw.get("tasks", ["reduce"])
    tasks = [tasks] if isinstance(tasks, str) else tasks
    if tasks == ["all"]:
        tasks = [t for t in TASKS if t != "general-orbit"]
    tasks = order_tasks(tasks)
    elements = raw.get("element", [])
    elements = tuple([elements] if isinstance(elements, str) else elements)
    fmt = scalar("format") or "json"
    if fmt not in FORMATS:
        raise ConfigError(f"{source}: format must be one of {', '.join(FORMATS)}")

    complement = scalar("complement") or "canonical"
    chart = scalar("chart")
    if complement not in ("canonical", "explicit"):
        chart, complement = complement, "explicit"
    if complement == "explicit" and not chart:
        raise ConfigError(f"{source}: the explicit complement needs a chart (fixture name or .chart path)")
    if chart and chart.endswith(".chart"):
        path = Path(chart)
        if not path.is_absolute() and base is not None:
            path = base / path
        if not path.exists():
            raise ConfigError(f"{source}: chart file {chart} does not exist")
        chart = str(path)
    needs_orbit = any(t != "general-orbit" for t in tasks)
    if complement == "canonical" and needs_orbit:
        if not algebra:
            raise ConfigError(f"{source}: algebra is required")
        if orbit is None and not scalar("h"):
            raise ConfigError(f"{source}: orbit labels or h are required")
    if "general-orbit" in tasks and not elements:
        raise ConfigError(f"{source}: the general-orbit task needs at least one element")
    if "general-orbit" in tasks and not algebra:
        raise ConfigError(f"{source}: the general-orbit task needs an algebra")
    return JobConfig(
        algebra=algebra,
        form_scale=scalar("form_scale"),
        orbit=orbit,
        h=scalar("h"),
        hint=scalar("hint"),
        complement=complement,
        chart=chart,
        tasks=tasks,
        elements=elements,
        output=scalar("output"),
        format=fmt,
        source=source,
    )


def load_config(path: str | Path) -> JobConfig:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file {path} does not exist")
    return parse_config(path.read_text(), str(path), path.parent)
