"""Job specification and resolution of surfaces and points from CLI input."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from config import settings
from config.logging_setup import get_logger
from expr.errors import ParseError
from expr.evaluate import Point
from expr.json_ast import load_json_expr
from expr.nodes import Expr
from expr.parser import parse_expr
from expr.printer import to_text
from expr.sampling import SampleSpec
from model.catalog import CATALOG, catalog_names

logger = get_logger(__name__)

BUILTIN_PREFIX = "builtin:"


@dataclass
class JobSpec:
    """Everything a command needs; echoed into the report."""

    command: str
    surface: str = "mlc"
    points: Optional[List[Point]] = None
    points_source: Optional[str] = None
    sample: SampleSpec = field(default_factory=SampleSpec)
    mode: str = "exact"
    output: str = "json"
    suite: str = "all"
    orientation: int = 1
    timing: bool = False
    precision: Optional[int] = None
    perturb_i0: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "command": self.command,
            "surface": self.surface,
            "mode": self.mode,
            "seed": self.sample.seed,
            "sample": self.sample.to_dict(),
            "orientation": self.orientation,
        }
        if self.command == "verify":
            data["suite"] = self.suite
        if self.points_source is not None:
            data["points"] = self.points_source
        if self.precision is not None:
            data["precision"] = self.precision
        if self.perturb_i0 is not None:
            data["perturb_i0"] = self.perturb_i0
        return data


def resolve_surface(text: str) -> Tuple[str, Expr]:
    """``(kind, F)`` for a catalog name, ``builtin:NAME``, ``@file.json`` or DSL text.

    Raises ``ParseError`` for malformed input and ``KeyError`` for an unknown
    builtin name.
    """
    name = text[len(BUILTIN_PREFIX):] if text.startswith(BUILTIN_PREFIX) else text
    if name in CATALOG:
        logger.debug("surface %s resolved from the catalog", name)
        return "builtin", CATALOG[name]()
    if text.startswith(BUILTIN_PREFIX):
        raise KeyError(f"unknown builtin surface {name!r}; choose from {catalog_names()}")
    if text.startswith("@"):
        return "json", load_json_expr(text[1:])
    return "dsl", parse_expr(text)


def load_points(path: str) -> List[Point]:
    """Points from a JSON list of ``{"z1": "1/2+i/3", ...}`` objects.

    Values are DSL constant strings (or plain integers); conjugates are
    filled in automatically.
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid points JSON: {exc.msg}", exc.pos, "") from exc
    if isinstance(data, dict) and "points" in data:
        data = data["points"]
    if not isinstance(data, list) or not all(isinstance(p, dict) for p in data):
        raise ParseError("points file must hold a list of objects", 0, "")
    return [Point(p) for p in data]


def sample_spec(samples: Optional[int], seed: Optional[int]) -> SampleSpec:
    spec = SampleSpec(seed=settings.env_seed() if seed is None else seed)
    if samples is not None:
        spec = spec.with_count(samples)
    return spec


def describe_surface(F: Expr) -> str:
    return to_text(F)


__all__ = [
    "BUILTIN_PREFIX",
    "JobSpec",
    "describe_surface",
    "load_points",
    "resolve_surface",
    "sample_spec",
]
