"""Facet-list text and JSON formats, plus JSON helpers for reports."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, List, Sequence, Union

from .core import Complex, from_facets
from .errors import MalformedInput

PathLike = Union[str, Path]


def parse_facets(text: str) -> List[List[int]]:
    """Parse either the line format or ``{"facets": [...]}`` JSON."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"bad JSON: {exc}") from None
        facets = data.get("facets") if isinstance(data, dict) else None
        if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
            raise MalformedInput('JSON input needs a "facets" list of lists')
        return [list(f) for f in facets]
    facets = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            facets.append([int(tok) for tok in line.split()])
        except ValueError:
            raise MalformedInput(f"line {lineno}: expected integers, got {line!r}") from None
    return facets


def read_facets(path: PathLike) -> List[List[int]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from None
    return parse_facets(text)


def read_complex(path: PathLike) -> Complex:
    return from_facets(read_facets(path))


def format_facets(facets: Sequence[Sequence[int]], comment: str = "") -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines += [" ".join(str(x) for x in f) for f in facets]
    return "\n".join(lines) + "\n"


def facets_json(facets: Sequence[Sequence[int]]) -> str:
    return dumps({"facets": [list(f) for f in facets]})


def write_complex(K: Complex, path: PathLike, comment: str = "") -> None:
    path = Path(path)
    facets = K.facets()
    if path.suffix == ".json":
        path.write_text(facets_json(facets), encoding="utf-8")
    else:
        path.write_text(format_facets(facets, comment), encoding="utf-8")


def dumps(obj: Any) -> str:
    """Canonical JSON used by every report (stable keys, trailing newline)."""
    return json.dumps(obj, sort_keys=True) + "\n"
