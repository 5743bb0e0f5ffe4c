"""Reading networks and writing reports.

Supported inputs: the Pajek ``.net`` subset with ``*Vertices``, ``*Arcs`` and
``*Edges`` sections, whitespace-delimited edge lists, and dense interaction
matrices.  Reports are written as JSON or as a two-line TSV.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from .network import Network, NetworkError


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class LabelTable:
    """Bijection between node indices and external string labels."""

    def __init__(self, labels: list[str] | None = None):
        self.labels: list[str] = []
        self.index: dict[str, int] = {}
        for label in labels or []:
            self.add(label)

    def add(self, label: str) -> int:
        if label in self.index:
            raise ValueError(f"duplicate label {label!r}")
        self.index[label] = len(self.labels)
        self.labels.append(label)
        return self.index[label]

    def get_or_add(self, label: str) -> int:
        idx = self.index.get(label)
        return self.add(label) if idx is None else idx

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, i: int) -> str:
        return self.labels[i]

    @classmethod
    def default(cls, n: int) -> "LabelTable":
        return cls([str(i) for i in range(n)])


def _text(data: bytes | str) -> str:
    return data.decode("utf-8-sig") if isinstance(data, (bytes, bytearray)) else data


def _weight(token: str | None, lineno: int) -> float:
    if token is None:
        return 1.0
    try:
        w = float(token)
    except ValueError:
        raise ParseError(f"bad weight {token!r}", lineno) from None
    if not (w > 0 and math.isfinite(w)):
        raise ParseError(f"link weight must be positive, got {token}", lineno)
    return w


def _build(n: int, directed: bool, links: list[tuple[int, int, float, int]]) -> Network:
    loops = any(u == v for u, v, _, _ in links)
    net = Network(n, directed, loops)
    for u, v, w, lineno in links:
        try:
            net.add_link(u, v, w)
        except NetworkError as exc:
            raise ParseError(str(exc), lineno) from None
    return net


_VERTEX = re.compile(r'^(\d+)(?:\s+(?:"([^"]*)"|(\S+)))?')


def parse_pajek(data: bytes | str) -> tuple[Network, LabelTable]:
    """Parse a Pajek network.

    Indices are 1-based in the file and 0-based in the result.  Any ``*Arcs``
    section makes the network directed; ``*Edges`` lines in a directed file
    become a pair of opposite arcs.  A self-loop line enables self-loops.
    """
    n = None
    labels: list[str] = []
    section = None
    arcs: list[tuple[int, int, float, int]] = []
    edges: list[tuple[int, int, float, int]] = []
    for lineno, raw in enumerate(_text(data).splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            parts = line.split()
            head = parts[0].lower()
            if head == "*network":
                continue
            if head == "*vertices":
                if n is not None:
                    raise ParseError("repeated *Vertices section", lineno)
                try:
                    n = int(parts[1])
                except (IndexError, ValueError):
                    raise ParseError("malformed *Vertices header", lineno) from None
                if n < 1:
                    raise ParseError("*Vertices count must be positive", lineno)
                labels = [str(i + 1) for i in range(n)]
            elif head in ("*arcs", "*edges"):
                if n is None:
                    raise ParseError(f"{parts[0]} before *Vertices", lineno)
            else:
                raise ParseError(f"unsupported Pajek section {parts[0]}", lineno)
            section = head
            continue
        if section == "*vertices":
            m = _VERTEX.match(line)
            if not m:
                raise ParseError(f"malformed vertex line {line!r}", lineno)
            idx = int(m.group(1))
            if not 1 <= idx <= n:
                raise ParseError(f"vertex index {idx} out of range 1..{n}", lineno)
            label = m.group(2) if m.group(2) is not None else m.group(3)
            if label is not None:
                labels[idx - 1] = label
        elif section in ("*arcs", "*edges"):
            parts = line.split()
            if len(parts) < 2:
                raise ParseError(f"malformed link line {line!r}", lineno)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"malformed link line {line!r}", lineno) from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(f"vertex index {x} out of range 1..{n}", lineno)
            link = (u - 1, v - 1, _weight(parts[2] if len(parts) > 2 else None, lineno), lineno)
            (arcs if section == "*arcs" else edges).append(link)
        else:
            raise ParseError("data outside any section", lineno)
    if n is None:
        raise ParseError("missing *Vertices section")
    if len(set(labels)) != len(labels):
        raise ParseError("vertex labels are not unique")
    directed = bool(arcs)
    if directed:
        links = arcs + [(v, u, w, ln) for u, v, w, ln in edges if u != v] + edges
    else:
        links = edges
    return _build(n, directed, links), LabelTable(labels)


def parse_edgelist(data: bytes | str, directed: bool = False) -> tuple[Network, LabelTable]:
    """Parse ``src dst [weight]`` lines; ``#`` starts a comment.

    Labels are numbered in order of first appearance.  A line holding a
    single label declares a node without links.
    """
    table = LabelTable()
    links: list[tuple[int, int, float, int]] = []
    for lineno, raw in enumerate(_text(data).splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            table.get_or_add(parts[0])
            continue
        if len(parts) > 3:
            raise ParseError(f"expected 'src dst [weight]', got {line!r}", lineno)
        u = table.get_or_add(parts[0])
        v = table.get_or_add(parts[1])
        links.append((u, v, _weight(parts[2] if len(parts) == 3 else None, lineno), lineno))
    if not len(table):
        raise ParseError("edge list has no nodes")
    return _build(len(table), directed, links), table


def _fmt_weight(w: float) -> str:
    return "1" if w == 1.0 else repr(w)


def write_edgelist(net: Network, labels: LabelTable | None = None, weights: bool = True) -> bytes:
    """Edge list that :func:`parse_edgelist` reads back to the same network.

    Node declarations are written first whenever isolated nodes or the
    first-appearance order would otherwise change the numbering.
    """
    labels = labels or LabelTable.default(net.n)
    links = net.links()
    seen: list[int] = []
    marked = set()
    for u, v, _ in links:
        for x in (u, v):
            if x not in marked:
                marked.add(x)
                seen.append(x)
    lines = []
    if seen != list(range(net.n)):
        lines.extend(labels[i] for i in range(net.n))
    for u, v, w in links:
        row = f"{labels[u]} {labels[v]}"
        lines.append(f"{row} {_fmt_weight(w)}" if weights and w != 1.0 else row)
    return ("\n".join(lines) + "\n").encode() if lines else b""


def write_pajek(net: Network, labels: LabelTable | None = None) -> bytes:
    labels = labels or LabelTable.default(net.n)
    lines = [f"*Vertices {net.n}"]
    lines += [f'{i + 1} "{labels[i]}"' for i in range(net.n)]
    lines.append("*Arcs" if net.directed else "*Edges")
    lines += [f"{u + 1} {v + 1} {_fmt_weight(w)}" for u, v, w in net.links()]
    return ("\n".join(lines) + "\n").encode()


# ---------------------------------------------------------------------------
# interaction matrices


@dataclass
class InteractionMatrix:
    """Signed interaction strengths ``beta[i, j]`` and optional growth rates."""

    beta: np.ndarray
    r: np.ndarray | None = None

    def __post_init__(self):
        self.beta = np.asarray(self.beta, dtype=float)
        if self.beta.ndim != 2 or self.beta.shape[0] != self.beta.shape[1]:
            raise ValueError("interaction matrix must be square")
        if not np.all(np.isfinite(self.beta)):
            raise ValueError("interaction matrix has non-finite entries")
        if self.r is not None:
            self.r = np.asarray(self.r, dtype=float)
            if self.r.shape != (self.n,):
                raise ValueError("growth-rate vector length must match the matrix")

    @property
    def n(self) -> int:
        return self.beta.shape[0]


def parse_interaction_matrix(data: bytes | str) -> InteractionMatrix:
    rows = []
    for lineno, raw in enumerate(_text(data).splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([float(x) for x in line.replace(",", " ").split()])
        except ValueError:
            raise ParseError(f"non-numeric matrix row {line!r}", lineno) from None
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ParseError("interaction matrix must be square and non-empty")
    return InteractionMatrix(np.array(rows))


def _single_link(i: int, j: int, bij: float, bji: float) -> tuple[int, int, float]:
    # Resource flows to the species that gains: the positive entry's row, or
    # away from the species that loses when the other entry is zero.
    w = abs(bij) + abs(bji)
    if bij > 0 or bji < 0:
        return j, i, w
    return i, j, w


def matrix_to_foodweb(m: InteractionMatrix) -> Network:
    """Positive-weight food web from a signed interaction matrix.

    Each pair is examined once.  Both entries positive: links ``i->j`` and
    ``j->i`` carry ``beta_ij`` and ``beta_ji``.  Both negative: the entries
    swap and change sign, so ``i->j`` carries ``|beta_ji|``.  Otherwise one
    link carries ``|beta_ij| + |beta_ji|``, directed towards the species that
    benefits.  The diagonal is ignored.
    """
    beta = m.beta
    net = Network(m.n, directed=True)
    for i in range(m.n):
        for j in range(i + 1, m.n):
            bij, bji = beta[i, j], beta[j, i]
            if bij == 0 and bji == 0:
                continue
            if bij > 0 and bji > 0:
                net.add_link(i, j, bij).add_link(j, i, bji)
            elif bij < 0 and bji < 0:
                net.add_link(i, j, -bji).add_link(j, i, -bij)
            else:
                net.add_link(*_single_link(i, j, bij, bji))
    return net


# ---------------------------------------------------------------------------
# reports

REPORT_FIELDS = (
    "nodes",
    "links",
    "complexity",
    "geometric_mean_c",
    "surplus",
    "sigma",
    "weighted",
    "prefix_bits",
    "log2_omega_linklists",
    "log2_renumberings",
    "total_bits",
    "ceil_variant",
    "labelled_variant",
    "samples",
    "seed",
    "mean_ln_c",
    "std_ln_c",
    "mutual_information",
    "entropy",
    "ma",
    "ma_base",
    "ln_c_values",
)


@dataclass
class Report:
    """Flat record of everything one CLI run measured; unset fields are omitted."""

    values: dict[str, Any] = field(default_factory=dict)

    def update(self, obj: Any = None, **kw: Any) -> "Report":
        if obj is not None:
            data = asdict(obj)
            if "c_real" in data:
                data["complexity"] = data.pop("c_real")
            if "slots" in data:
                data.pop("slots")
            self.values.update(data)
        self.values.update(kw)
        return self

    def ordered(self) -> dict[str, Any]:
        out = {k: self.values[k] for k in REPORT_FIELDS if k in self.values}
        out.update({k: v for k, v in self.values.items() if k not in out})
        return out


def _json_value(v: Any) -> Any:
    if isinstance(v, float) and math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    return v


def _tsv_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "inf" if v == math.inf else repr(v)
    if isinstance(v, (list, tuple)):
        return ",".join(_tsv_value(x) for x in v)
    return str(v)


def write_report(report: Report, fmt: str = "json") -> bytes:
    """Serialise a report.  An infinite sigma is written as ``"inf"``."""
    data = report.ordered()
    if fmt == "json":
        clean = {k: [_json_value(x) for x in v] if isinstance(v, list) else _json_value(v) for k, v in data.items()}
        return (json.dumps(clean, indent=2) + "\n").encode()
    if fmt == "tsv":
        header = "\t".join(data)
        row = "\t".join(_tsv_value(v) for v in data.values())
        return f"{header}\n{row}\n".encode()
    raise ValueError(f"unknown report format {fmt!r}")


def _parse_scalar(s: str) -> Any:
    if s in ("true", "false"):
        return s == "true"
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        return s


def read_report_tsv(data: bytes | str) -> dict[str, Any]:
    header, row = _text(data).rstrip("\n").split("\n")
    out: dict[str, Any] = {}
    for key, value in zip(header.split("\t"), row.split("\t")):
        if key == "ln_c_values":
            out[key] = [float(x) for x in value.split(",")] if value else []
        else:
            out[key] = _parse_scalar(value)
    return out
