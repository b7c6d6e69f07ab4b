"""Characteristics, gradings, sl2-triples and slice charts."""

from .chart import Sl2TripleChart, build_chart
from .fixtures import ChartFixture, fixture_names, load_chart
from .grading import Grading, characteristic_from_labels, complete_sl2, grading

__all__ = [
    "ChartFixture",
    "Grading",
    "Sl2TripleChart",
    "build_chart",
    "characteristic_from_labels",
    "complete_sl2",
    "fixture_names",
    "grading",
    "load_chart",
]
