"""Text formats: graph edge lists, labeling objects and certificates.

Graph format::

    p edge <n> <m>
    e <u> <v>        (m lines, u < v, sorted)

Vertices are ``0..n-1``; ``c`` comment lines are skipped on read.
Labelings are compact JSON objects such as ``{"0":[3],"1":[9,10],"2":[27]}``.
"""

from __future__ import annotations

import json
from typing import Mapping

from .errors import FormatError, WeakIASIError
from .graph import Graph
from .labels import Labeling, LabelSet
from .sparing import SparingCertificate


def write_graph(g: Graph) -> str:
    # ids are kept as-is; gaps in the id range come back as isolated vertices
    n = g.vertices[-1] + 1 if g.vertices else 0
    lines = [f"p edge {n} {g.size}"]
    lines += [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if header is not None or len(parts) != 4 or parts[1] != "edge":
                    raise FormatError("bad problem line")
                header = (_nonneg(parts[2]), _nonneg(parts[3]))
            elif parts[0] == "e":
                if header is None or len(parts) != 3:
                    raise FormatError("bad edge line")
                u, v = _nonneg(parts[1]), _nonneg(parts[2])
                if u == v or max(u, v) >= header[0]:
                    raise FormatError(f"invalid edge {u} {v}")
                edges.append((min(u, v), max(u, v)))
            else:
                raise FormatError(f"unknown line type {parts[0]!r}")
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if header is None:
        raise FormatError("missing 'p edge' line")
    n, m = header
    if len(set(edges)) != len(edges):
        raise FormatError("duplicate edge")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph(range(n), edges)


def _nonneg(tok: str) -> int:
    if not tok.isdigit():
        raise FormatError(f"expected a non-negative integer, got {tok!r}")
    return int(tok)


def labeling_to_obj(f: Mapping[int, LabelSet]) -> dict[str, list[int]]:
    return {str(v): list(f[v].elements) for v in sorted(f)}


def write_labeling(f: Mapping[int, LabelSet]) -> str:
    return json.dumps(labeling_to_obj(f), separators=(",", ":"))


def read_labeling(text: str) -> Labeling:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"labeling is not valid JSON: {exc}") from None
    return labeling_from_obj(obj)


def labeling_from_obj(obj) -> Labeling:
    if not isinstance(obj, dict):
        raise FormatError("labeling must be a JSON object")
    out = {}
    for key, value in obj.items():
        if not key.isdigit():
            raise FormatError(f"vertex key must be a decimal id, got {key!r}")
        if not isinstance(value, list) or not all(type(x) is int for x in value):
            raise FormatError(f"label of vertex {key} must be an array of integers")
        try:
            out[int(key)] = LabelSet(value)
        except WeakIASIError as exc:
            raise FormatError(f"label of vertex {key}: {exc}") from None
    return Labeling(out)


def certificate_to_obj(cert: SparingCertificate) -> dict:
    return {
        "value": cert.value,
        "expanded": cert.pattern.sorted(),
        "labeling": labeling_to_obj(cert.labeling),
        "mono_edges": [list(e) for e in cert.mono_edges],
    }


def write_certificate(cert: SparingCertificate) -> str:
    return json.dumps(certificate_to_obj(cert), separators=(",", ":"))
