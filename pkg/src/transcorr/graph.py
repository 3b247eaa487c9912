"""Binary digraph container, text ingestion and degree summaries."""

from __future__ import annotations

import io
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, TextIO

import numpy as np
import scipy.sparse as sp

log = logging.getLogger(__name__)

_SPLIT = re.compile(r"[,\s]+")


class GraphParseError(ValueError):
    """Malformed graph text. ``lineno`` is 1-based, or None for whole-input errors."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DegenerateGraphError(ValueError):
    """Graph too small for the requested statistic."""


@dataclass(frozen=True, eq=False)
class DiGraph:
    """Immutable binary digraph on nodes ``0..n-1`` without self-loops.

    ``arcs`` holds ordered pairs ``(i, j)`` meaning ``x_ij = 1``.
    ``labels``, when present, maps index to the original node name.
    """

    n: int
    arcs: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = None
    dropped_loops: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a digraph needs at least one node")
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        for i, j in arcs:
            if i == j:
                raise ValueError(f"self-loop ({i}, {i}) is not allowed")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"arc ({i}, {j}) outside 0..{self.n - 1}")
        object.__setattr__(self, "arcs", arcs)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.n or len(set(labels)) != self.n:
                raise ValueError("labels must be n distinct strings")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_dense(cls, matrix, labels=None) -> DiGraph:
        """Build from a square 0/1 (or boolean) array; the diagonal is ignored."""
        a = np.asarray(matrix).astype(bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        a = a.copy()
        np.fill_diagonal(a, False)
        rows, cols = np.nonzero(a)
        return cls(a.shape[0], frozenset(zip(rows.tolist(), cols.tolist())), labels)

    def __eq__(self, other):
        if not isinstance(other, DiGraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs and self.labels == other.labels

    def __hash__(self):
        return hash((self.n, self.arcs, self.labels))

    def __contains__(self, arc) -> bool:
        return tuple(arc) in self.arcs

    def has_arc(self, i: int, j: int) -> int:
        return 1 if (i, j) in self.arcs else 0

    @property
    def edge_count(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    @cached_property
    def adjacency(self) -> sp.csr_matrix:
        """Sparse int64 adjacency; row = source, column = target."""
        if self.arcs:
            rows, cols = np.array(sorted(self.arcs), dtype=np.int64).T
        else:
            rows = cols = np.empty(0, dtype=np.int64)
        data = np.ones(len(rows), dtype=np.int64)
        return sp.csr_matrix((data, (rows, cols)), shape=(self.n, self.n))

    def dense(self) -> np.ndarray:
        return self.adjacency.toarray()

    def successors(self, i: int) -> list[int]:
        a = self.adjacency
        return a.indices[a.indptr[i]:a.indptr[i + 1]].tolist()

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def symmetrize(self) -> DiGraph:
        arcs = self.arcs | {(j, i) for i, j in self.arcs}
        return DiGraph(self.n, frozenset(arcs), self.labels)

    def isolates(self) -> list[int]:
        """Nodes with neither incoming nor outgoing arcs."""
        touched = {i for arc in self.arcs for i in arc}
        return [i for i in range(self.n) if i not in touched]


@dataclass(frozen=True)
class IngestOptions:
    threshold: float = 0.0
    symmetrize: bool = False
    comment: str = "#"


@dataclass(frozen=True)
class DegreeSummary:
    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]
    mutual_count: int
    edge_count: int
    n: int

    @property
    def density(self) -> Fraction:
        return Fraction(self.edge_count, self.n * (self.n - 1))

    @property
    def od_dot_id(self) -> int:
        return sum(o * i for o, i in zip(self.out_degrees, self.in_degrees))


def _lines(source: str | TextIO) -> Iterable[str]:
    if isinstance(source, str):
        source = io.StringIO(source)
    return source


def parse_edge_list(source: str | TextIO, options: IngestOptions = IngestOptions()) -> DiGraph:
    """Read ``source target [weight]`` lines, whitespace- or comma-separated.

    Node names are arbitrary tokens; indices follow first appearance. An arc is
    kept when its weight exceeds ``options.threshold`` (missing weight counts
    as 1). Self-loops are dropped and counted in ``DiGraph.dropped_loops``.
    """
    index: dict[str, int] = {}
    arcs: set[tuple[int, int]] = set()
    loops = 0
    seen_line = False

    def node(tok: str) -> int:
        if tok not in index:
            index[tok] = len(index)
        return index[tok]

    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith(options.comment):
            continue
        seen_line = True
        toks = [t for t in _SPLIT.split(line) if t]
        if len(toks) < 2:
            raise GraphParseError(f"expected 'source target [weight]', got {line!r}", lineno)
        if len(toks) > 3:
            raise GraphParseError(f"too many fields in {line!r}", lineno)
        weight = 1.0
        if len(toks) == 3:
            try:
                weight = float(toks[2])
            except ValueError:
                raise GraphParseError(f"non-numeric weight {toks[2]!r}", lineno) from None
        i, j = node(toks[0]), node(toks[1])
        if i == j:
            loops += 1
            continue
        if weight > options.threshold:
            arcs.add((i, j))
            if options.symmetrize:
                arcs.add((j, i))

    if not seen_line:
        raise GraphParseError("empty edge list")
    if loops:
        log.warning("dropped %d self-loop line(s)", loops)
    labels = tuple(index)
    return DiGraph(len(labels), frozenset(arcs), labels, dropped_loops=loops)


def parse_adjacency_matrix(source: str | TextIO, options: IngestOptions = IngestOptions()) -> DiGraph:
    """Read whitespace/comma-delimited numeric rows; ``x_ij = 1`` iff entry > threshold."""
    rows: list[list[float]] = []
    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith(options.comment):
            continue
        try:
            rows.append([float(t) for t in _SPLIT.split(line) if t])
        except ValueError as exc:
            raise GraphParseError(f"non-numeric entry ({exc})", lineno) from None
        if len(rows[-1]) != len(rows[0]):
            raise GraphParseError(
                f"ragged row: {len(rows[-1])} entries, expected {len(rows[0])}", lineno
            )
    if not rows:
        raise GraphParseError("empty adjacency matrix")
    if len(rows) != len(rows[0]):
        raise GraphParseError(f"matrix is {len(rows)}x{len(rows[0])}, not square")
    a = np.array(rows) > options.threshold
    if options.symmetrize:
        a = a | a.T
    loops = int(np.trace(a))
    g = DiGraph.from_dense(a)
    return DiGraph(g.n, g.arcs, dropped_loops=loops)


def write_edge_list(g: DiGraph, sink: TextIO, header: Iterable[str] = (), labels: bool = False) -> None:
    """Canonical writer: optional ``#`` header lines, then ``i j`` sorted by (i, j).

    Isolates cannot be expressed as arcs, so ``# n=<n>`` is always written and
    ``read_edge_list`` restores the node count from it.
    """
    for line in header:
        sink.write(f"# {line}\n")
    sink.write(f"# n={g.n}\n")
    for i, j in g.sorted_arcs():
        if labels:
            sink.write(f"{g.label(i)} {g.label(j)}\n")
        else:
            sink.write(f"{i} {j}\n")


def format_edge_list(g: DiGraph, header: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    write_edge_list(g, buf, header)
    return buf.getvalue()


_N_HEADER = re.compile(r"^#\s*n=(\d+)\s*$")


def read_edge_list(source: str | TextIO, options: IngestOptions = IngestOptions()) -> DiGraph:
    """Inverse of ``write_edge_list``: integer node ids, ``# n=`` header honored.

    Unlike ``parse_edge_list`` the tokens are taken as indices, not labels, so
    generated graphs with isolates round-trip exactly. Files without the header
    fall back to ``parse_edge_list``.
    """
    text = source if isinstance(source, str) else source.read()
    n = None
    for line in text.splitlines():
        m = _N_HEADER.match(line.strip())
        if m:
            n = int(m.group(1))
            break
    if n is None:
        return parse_edge_list(text, options)
    arcs = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(options.comment):
            continue
        toks = [t for t in _SPLIT.split(line) if t]
        try:
            i, j = int(toks[0]), int(toks[1])
        except (ValueError, IndexError):
            raise GraphParseError(f"expected 'i j' integer pair, got {line!r}", lineno) from None
        if not (0 <= i < n and 0 <= j < n):
            raise GraphParseError(f"node id outside 0..{n - 1}", lineno)
        if i != j:
            arcs.add((i, j))
    return DiGraph(n, frozenset(arcs))


def degree_summary(g: DiGraph) -> DegreeSummary:
    if g.n < 2:
        raise DegenerateGraphError("degree summary needs n >= 2")
    a = g.adjacency
    od = np.asarray(a.sum(axis=1)).ravel()
    idg = np.asarray(a.sum(axis=0)).ravel()
    mutual = int(a.multiply(a.T).sum())
    return DegreeSummary(
        out_degrees=tuple(int(v) for v in od),
        in_degrees=tuple(int(v) for v in idg),
        mutual_count=mutual,
        edge_count=g.edge_count,
        n=g.n,
    )
