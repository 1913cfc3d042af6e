"""Shared fixture loading for the test suite."""

from __future__ import annotations

from pathlib import Path

from altcurves.diagram import Diagram, build_diagram, parse_pd
from altcurves.dualgraph import AugmentedDualGraph, build_dual

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

VALID_NAMES = sorted(p.stem for p in FIXTURE_DIR.glob("*.pd"))
INVALID_NAMES = sorted(p.stem for p in (FIXTURE_DIR / "invalid").glob("*.pd"))

# (2,n) torus closures in the corpus, by crossing number
TORUS_NAMES = {"hopf": 2, "k3_1": 3, "k5_1": 5, "k7_1": 7}


def fixture_path(name: str) -> Path:
    direct = FIXTURE_DIR / f"{name}.pd"
    if direct.exists():
        return direct
    return FIXTURE_DIR / "invalid" / f"{name}.pd"


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text(encoding="utf-8")


def load_diagram(name: str) -> Diagram:
    return build_diagram(parse_pd(fixture_text(name)))


def load_dual(name: str) -> AugmentedDualGraph:
    return build_dual(load_diagram(name))
