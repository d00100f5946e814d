"""Exact sparing numbers.

A labeling is weak exactly when every edge has a singleton endpoint, so the
set of non-singleton ("expanded") vertices must be independent.  Injectivity
can always be restored afterwards (see :func:`realize_labeling`), hence the
sparing number is

    min over independent S of |{uv in E : u not in S, v not in S}|
  = |E| - max over independent S of sum(deg(v) for v in S).

:func:`sparing_exact` solves the weighted independent-set problem by
branch and bound; :func:`sparing_oracle` enumerates every vertex subset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import (
    InfeasiblePatternError,
    LabelOverflowError,
    TooLargeInputError,
    UnknownVertexError,
)
from .graph import Edge, Graph, complement
from .labels import MAX_LABEL_VALUE, Labeling, LabelSet, is_weak_iasi, mono_indexed_edges

ORACLE_LIMIT = 24


@dataclass(frozen=True)
class Pattern:
    """Vertices designated non-singleton (set-indexing number >= 2)."""

    expanded: frozenset[int] = frozenset()

    def __init__(self, expanded: Iterable[int] = ()):
        object.__setattr__(self, "expanded", frozenset(expanded))

    def sorted(self) -> list[int]:
        return sorted(self.expanded)

    def __repr__(self) -> str:
        return f"Pattern({self.sorted()})"


@dataclass(frozen=True)
class SparingCertificate:
    value: int
    pattern: Pattern
    labeling: Labeling
    mono_edges: tuple[Edge, ...]


class ConcurrentResult(NamedTuple):
    mono_in_g: int
    mono_in_complement: int
    pattern: Pattern


def _as_pattern(p: Pattern | Iterable[int]) -> Pattern:
    return p if isinstance(p, Pattern) else Pattern(p)


def pattern_feasible(g: Graph, p: Pattern | Iterable[int]) -> bool:
    """True when no edge has both endpoints expanded."""
    p = _as_pattern(p)
    unknown = [v for v in p.expanded if not g.has_vertex(v)]
    if unknown:
        raise UnknownVertexError(f"pattern names vertices not in the graph: {sorted(unknown)}")
    return not any(u in p.expanded and v in p.expanded for u, v in g.edges)


def pattern_mono_count(g: Graph, p: Pattern | Iterable[int]) -> int:
    p = _as_pattern(p)
    if not pattern_feasible(g, p):
        raise InfeasiblePatternError(f"{p} contains adjacent vertices")
    return sum(1 for u, v in g.edges if u not in p.expanded and v not in p.expanded)


# -- branch and bound ------------------------------------------------------

def _optimal_pattern(g: Graph) -> frozenset[int]:
    """Independent set maximising covered edges, then size, then lex order.

    The three criteria are folded into one integer weight per vertex so that
    every subset has a distinct total and the optimum is unique:
    ``deg * C1 + C2 + 2**(n-1-rank)``.  The rank bits realise "lexicographically
    smallest sorted id tuple" among sets of equal size.
    """
    n = g.order
    rank = {v: i for i, v in enumerate(g.vertices)}
    c2 = 1 << n
    c1 = (n + 2) * c2
    # isolated vertices stay mono-indexed by convention
    order = sorted((v for v in g.vertices if g.degree(v) > 0), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    k = len(order)
    weight = [g.degree(v) * c1 + c2 + (1 << (n - 1 - rank[v])) for v in order]
    adj = [0] * k
    for u, v in g.edges:
        adj[pos[u]] |= 1 << pos[v]
        adj[pos[v]] |= 1 << pos[u]

    best_w = -1
    best_set = 0

    def clique_bound(cand: int) -> int:
        # greedy clique partition: an independent set takes at most one vertex per clique
        total = 0
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            top = weight[i]
            members = low
            common = cand & adj[i]
            while common:
                lb = common & -common
                j = lb.bit_length() - 1
                members |= lb
                if weight[j] > top:
                    top = weight[j]
                common &= adj[j]
            cand &= ~members
            total += top
        return total

    def expand(cand: int, cur_w: int, chosen: int) -> None:
        nonlocal best_w, best_set
        if not cand:
            if cur_w > best_w:
                best_w, best_set = cur_w, chosen
            return
        if cur_w + clique_bound(cand) <= best_w:
            return
        low = cand & -cand
        i = low.bit_length() - 1
        expand(cand & ~low & ~adj[i], cur_w + weight[i], chosen | low)
        expand(cand & ~low, cur_w, chosen)

    expand((1 << k) - 1, 0, 0)
    return frozenset(order[i] for i in range(k) if best_set >> i & 1)


def sparing_exact(g: Graph) -> SparingCertificate:
    """Sparing number of ``g`` with an optimal pattern and a witness labeling.

    Ties between optimal patterns are broken towards more expanded vertices,
    then the lexicographically smallest sorted id tuple.
    """
    _check_label_range(g)
    pattern = Pattern(_optimal_pattern(g))
    value = pattern_mono_count(g, pattern)
    labeling = realize_labeling(g, pattern)
    return SparingCertificate(value, pattern, labeling, tuple(mono_indexed_edges(g, labeling)))


# -- brute force -------------------------------------------------------------

def _subset_tables(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """For every vertex subset (bit i = i-th vertex): independent?, covered edges."""
    n = g.order
    if n > ORACLE_LIMIT:
        raise TooLargeInputError(f"exhaustive search is limited to {ORACLE_LIMIT} vertices, got {n}")
    pos = {v: i for i, v in enumerate(g.vertices)}
    lower = [0] * n
    deg = [g.degree(v) for v in g.vertices]
    for u, v in g.edges:
        a, b = sorted((pos[u], pos[v]))
        lower[b] |= 1 << a
    indep = np.ones(1 << n, dtype=bool)
    cover = np.zeros(1 << n, dtype=np.int32)
    for i in range(n):
        half = 1 << i
        low_masks = np.arange(half, dtype=np.int64)
        indep[half:2 * half] = indep[:half] & ((low_masks & lower[i]) == 0)
        cover[half:2 * half] = cover[:half] + deg[i]
    return indep, cover


def sparing_oracle(g: Graph) -> int:
    """Sparing number by scanning all 2**n vertex subsets."""
    indep, cover = _subset_tables(g)
    return g.size - int(cover[indep].max())


def mono_count_spectrum(g: Graph) -> list[int]:
    """Every achievable mono-indexed edge count, ascending."""
    indep, cover = _subset_tables(g)
    return sorted(int(x) for x in np.unique(g.size - cover[indep]))


def concurrent_feasible_patterns(g: Graph) -> list[Pattern]:
    """All patterns independent in both ``g`` and its complement (exhaustive)."""
    indep_g, _ = _subset_tables(g)
    indep_c, _ = _subset_tables(complement(g))
    both = np.nonzero(indep_g & indep_c)[0]
    vs = g.vertices
    return [Pattern(vs[i] for i in range(len(vs)) if int(m) >> i & 1) for m in both]


def concurrent_min_mono(g: Graph) -> ConcurrentResult:
    """Best pattern that keeps the labeling weak on ``g`` and its complement.

    Any two vertices are adjacent in exactly one of the two graphs, so only the
    empty pattern and single vertices qualify.  Minimises the mono count in the
    complement, then in ``g``, then prefers the lowest vertex id.
    """
    gc = complement(g)
    candidates = [()] + [(v,) for v in g.vertices]
    best = min(
        candidates,
        key=lambda s: (
            gc.size - sum(gc.degree(v) for v in s),
            g.size - sum(g.degree(v) for v in s),
            s,
        ),
    )
    mono_g = g.size - sum(g.degree(v) for v in best)
    mono_c = gc.size - sum(gc.degree(v) for v in best)
    return ConcurrentResult(mono_g, mono_c, Pattern(best))


# -- witnesses ----------------------------------------------------------------

def _check_label_range(g: Graph) -> None:
    if g.order and 3 ** g.order + 1 > MAX_LABEL_VALUE:
        raise LabelOverflowError(
            f"powers-of-3 labeling overflows 63 bits beyond 39 vertices (graph has {g.order})"
        )


def realize_labeling(g: Graph, p: Pattern | Iterable[int]) -> Labeling:
    """Concrete weak IASI for a feasible pattern.

    The i-th vertex (ascending id) gets base 3**(i+1); expanded vertices get
    ``{base, base + 1}``, the others ``{base}``.  The smallest element of an
    edge label is 3**(a+1) + 3**(b+1), which identifies the edge, so vertex and
    edge labels are pairwise distinct.
    """
    p = _as_pattern(p)
    if not pattern_feasible(g, p):
        raise InfeasiblePatternError(f"{p} contains adjacent vertices")
    _check_label_range(g)
    out = {}
    for i, v in enumerate(g.vertices):
        base = 3 ** (i + 1)
        out[v] = LabelSet((base, base + 1) if v in p.expanded else (base,))
    return Labeling(out)


def verify_certificate(g: Graph, cert: SparingCertificate) -> bool:
    """Independent soundness check of a certificate against ``g``."""
    if not is_weak_iasi(g, cert.labeling):
        return False
    expanded = {v for v, lab in cert.labeling.items() if len(lab) > 1}
    mono = mono_indexed_edges(g, cert.labeling)
    return (
        expanded == cert.pattern.expanded
        and len(mono) == cert.value
        and tuple(mono) == cert.mono_edges
    )
