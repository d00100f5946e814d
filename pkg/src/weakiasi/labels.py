"""Sumset arithmetic and IASI / weak-IASI verification.

A vertex labeling assigns each vertex a finite nonempty set of non-negative
integers.  The edge ``uv`` is labeled by the sumset ``f(u) + f(v)``.  The
labeling is an IASI when both the vertex and the edge labels are pairwise
distinct, and a *weak* IASI when in addition every edge label has the
cardinality of the larger endpoint label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import IncompleteLabelingError, InvalidParameterError, LabelOverflowError
from .graph import Edge, Graph, complement

MAX_LABEL_VALUE = 2**63 - 1


class LabelSet:
    """Immutable, nonempty, ascending set of non-negative integers."""

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[int]):
        items = sorted(set(elements))
        if not items:
            raise InvalidParameterError("a label set must be nonempty")
        for x in items:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InvalidParameterError(f"label elements must be integers, got {x!r}")
        if items[0] < 0:
            raise InvalidParameterError(f"label elements must be non-negative, got {items[0]}")
        if items[-1] > MAX_LABEL_VALUE:
            raise LabelOverflowError(f"label element {items[-1]} exceeds 2**63 - 1")
        self.elements: tuple[int, ...] = tuple(items)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LabelSet):
            return self.elements == other.elements
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.elements)

    def __lt__(self, other: LabelSet) -> bool:
        return self.elements < other.elements

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"

    def __add__(self, other: LabelSet) -> LabelSet:
        return sumset(self, other)

    @property
    def is_singleton(self) -> bool:
        return len(self.elements) == 1


def sumset(a: LabelSet, b: LabelSet) -> LabelSet:
    """{x + y : x in a, y in b}.

    Raises LabelOverflowError when the largest sum leaves the 63-bit range.
    """
    if a.elements[-1] + b.elements[-1] > MAX_LABEL_VALUE:
        raise LabelOverflowError(
            f"sum {a.elements[-1]} + {b.elements[-1]} exceeds 2**63 - 1"
        )
    return LabelSet({x + y for x in a.elements for y in b.elements})


class Labeling(Mapping[int, LabelSet]):
    """Read-only map from vertex id to :class:`LabelSet`.

    Injectivity is deliberately not enforced here; :func:`is_iasi` reports it.
    """

    __slots__ = ("_labels",)

    def __init__(self, assignment: Mapping[int, LabelSet | Iterable[int]] = ()):
        items = dict(assignment)
        self._labels = {
            v: (lab if isinstance(lab, LabelSet) else LabelSet(lab))
            for v, lab in sorted(items.items())
        }

    def __getitem__(self, v: int) -> LabelSet:
        return self._labels[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Labeling):
            return self._labels == other._labels
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._labels.items()))

    def __repr__(self) -> str:
        return f"Labeling({self._labels!r})"


@dataclass(frozen=True)
class Violation:
    kind: str  # vertex-label-collision | edge-label-collision | weak-condition-failed
    elements: tuple
    scope: str = "graph"  # "complement" for violations found in the complement graph

    def describe(self) -> str:
        where = " (in complement)" if self.scope == "complement" else ""
        return f"{self.kind}{where}: {', '.join(map(_fmt_element, self.elements))}"


def _fmt_element(x) -> str:
    if isinstance(x, tuple):
        return f"{x[0]}-{x[1]}"
    return str(x)


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.verdict


def _check_total(g: Graph, f: Mapping[int, LabelSet]) -> None:
    missing = [v for v in g.vertices if v not in f]
    if missing:
        raise IncompleteLabelingError(f"no label for vertices {missing}")


def induced_edge_labels(g: Graph, f: Mapping[int, LabelSet]) -> dict[Edge, LabelSet]:
    """Edge labels g_f(uv) = f(u) + f(v), keyed by sorted edge."""
    _check_total(g, f)
    return {(u, v): sumset(f[u], f[v]) for u, v in g.sorted_edges()}


def _collisions(labels: dict, kind: str, scope: str) -> list[Violation]:
    groups: dict[LabelSet, list] = {}
    for elem, lab in labels.items():
        groups.setdefault(lab, []).append(elem)
    out = []
    for members in groups.values():
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                out.append(Violation(kind, (a, b), scope))
    return sorted(out, key=lambda v: v.elements)


def _iasi_violations(g: Graph, f: Mapping[int, LabelSet], scope: str, vertices: bool = True) -> list[Violation]:
    _check_total(g, f)
    out = []
    if vertices:
        out += _collisions({v: f[v] for v in g.vertices}, "vertex-label-collision", scope)
    out += _collisions(induced_edge_labels(g, f), "edge-label-collision", scope)
    return out


def _weak_violations(g: Graph, f: Mapping[int, LabelSet], scope: str, vertices: bool = True) -> list[Violation]:
    out = _iasi_violations(g, f, scope, vertices)
    for (u, v), lab in induced_edge_labels(g, f).items():
        if len(lab) != max(len(f[u]), len(f[v])):
            out.append(Violation("weak-condition-failed", ((u, v),), scope))
    return out


def is_iasi(g: Graph, f: Mapping[int, LabelSet]) -> VerificationReport:
    return VerificationReport(tuple(_iasi_violations(g, f, "graph")))


def is_weak_iasi(g: Graph, f: Mapping[int, LabelSet]) -> VerificationReport:
    """IASI check plus |f(u)+f(v)| == max(|f(u)|, |f(v)|) on every edge."""
    return VerificationReport(tuple(_weak_violations(g, f, "graph")))


def is_concurrent_weak(g: Graph, f: Mapping[int, LabelSet]) -> VerificationReport:
    """Weak IASI for both ``g`` and its complement under the same labeling."""
    out = _weak_violations(g, f, "graph")
    # vertex collisions are the same on both sides; report them once
    out += _weak_violations(complement(g), f, "complement", vertices=False)
    return VerificationReport(tuple(out))


def set_indexing_number(labels: Mapping, element) -> int:
    """Cardinality of the label of a vertex or an edge."""
    key = element
    if isinstance(element, tuple):
        key = (min(element), max(element))
    try:
        return len(labels[key])
    except KeyError:
        raise IncompleteLabelingError(f"element {element!r} is not labeled") from None


def mono_indexed_edges(g: Graph, f: Mapping[int, LabelSet]) -> list[Edge]:
    """Sorted edges whose label is a singleton (both endpoints singletons)."""
    _check_total(g, f)
    return [(u, v) for u, v in g.sorted_edges() if f[u].is_singleton and f[v].is_singleton]


def restrict(f: Mapping[int, LabelSet], h: Graph) -> Labeling:
    missing = [v for v in h.vertices if v not in f]
    if missing:
        raise IncompleteLabelingError(f"labeling has no entry for vertices {missing}")
    return Labeling({v: f[v] for v in h.vertices})
