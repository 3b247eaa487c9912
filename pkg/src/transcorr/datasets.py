"""User-supplied empirical datasets listed in an INI manifest.

Example manifest::

    [padgett_business]
    path = padgett/business.txt
    format = matrix
    threshold = 0

    [rd_advice]
    path = cross_parker/rd.edges
    format = edges
    threshold = 4

Relative paths resolve against the manifest's directory. ``format`` is
``edges`` (default) or ``matrix``; ``symmetrize`` defaults to false.
"""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass
from pathlib import Path

from .graph import DiGraph, IngestOptions, parse_adjacency_matrix, parse_edge_list

MANIFEST_ENV = "TRANSCORR_DATASETS"


@dataclass(frozen=True)
class DatasetEntry:
    name: str
    path: Path
    format: str = "edges"
    threshold: float = 0.0
    symmetrize: bool = False

    def load(self) -> DiGraph:
        return load_graph(self.path, self.format, IngestOptions(self.threshold, self.symmetrize))


def load_graph(path: str | os.PathLike, fmt: str = "edges", options: IngestOptions = IngestOptions()) -> DiGraph:
    if fmt not in ("edges", "matrix"):
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, encoding="utf-8") as fh:
        if fmt == "matrix":
            return parse_adjacency_matrix(fh, options)
        return parse_edge_list(fh, options)


def read_manifest(path: str | os.PathLike) -> dict[str, DatasetEntry]:
    cp = configparser.ConfigParser()
    with open(path, encoding="utf-8") as fh:
        cp.read_file(fh)
    base = Path(path).resolve().parent
    out = {}
    for name in cp.sections():
        sec = cp[name]
        if "path" not in sec:
            raise ValueError(f"dataset {name!r} has no path")
        fmt = sec.get("format", "edges")
        if fmt not in ("edges", "matrix"):
            raise ValueError(f"dataset {name!r}: unknown format {fmt!r}")
        out[name] = DatasetEntry(
            name=name,
            path=base / sec["path"],
            format=fmt,
            threshold=sec.getfloat("threshold", 0.0),
            symmetrize=sec.getboolean("symmetrize", False),
        )
    return out


def default_manifest() -> dict[str, DatasetEntry]:
    """Manifest named by $TRANSCORR_DATASETS, or empty when unset/missing."""
    path = os.environ.get(MANIFEST_ENV)
    if not path or not Path(path).is_file():
        return {}
    return read_manifest(path)
