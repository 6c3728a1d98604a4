"""Structural analysis of labeled digraphs.

SCC decomposition (linear time), condensation edges, bunch detection,
per-component cycle gcd and completeness queries.  Empty and dangling cells
contribute no edge, so partial automata flow through every analysis.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from typing import Optional, Sequence

from .cayley import LabeledDigraph
from .errors import ComponentNotStronglyConnected
from .kernels import backend


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components in canonical form.

    Components are ordered by their smallest member and each component lists
    its vertices in ascending order; ``component_of[v]`` is the index into
    ``components``.  ``condensation_edges`` excludes self-pairs and is acyclic.
    """

    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    condensation_edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class BunchReport:
    """Vertices whose entire outgoing edge set enters a single vertex."""

    bunch_vertices: frozenset[int]
    bunch_target: dict[int, int]
    incoming_bunch_count: dict[int, int]


def csr(g: LabeledDigraph) -> tuple[array, array]:
    """Live edges in CSR form (indptr, targets), row-major so the target
    order within a row follows the label order."""
    indptr = array("i", bytes(4 * (g.num_vertices + 1)))
    targets = array("i")
    count = 0
    for u in range(g.num_vertices):
        indptr[u] = count
        for cell in g.table[u]:
            if cell is not None and cell < g.num_vertices:
                targets.append(cell)
                count += 1
    indptr[g.num_vertices] = count
    return indptr, targets


def _canonical_labels(n: int, raw_labels) -> tuple[array, int]:
    """Renumber arbitrary component labels by first occurrence (vertex 0 up)."""
    remap: dict[int, int] = {}
    canon = array("i", bytes(4 * n))
    for v in range(n):
        label = raw_labels[v]
        if label not in remap:
            remap[label] = len(remap)
        canon[v] = remap[label]
    return canon, len(remap)


def scc(g: LabeledDigraph, *, backend_name: Optional[str] = None) -> SccDecomposition:
    """Exact SCC decomposition in O(V + E) (Tarjan over CSR arrays)."""
    n = g.num_vertices
    indptr, targets = csr(g)
    raw = backend(backend_name).tarjan_labels(n, indptr, targets)
    comp_of, k = _canonical_labels(n, raw)

    members: list[list[int]] = [[] for _ in range(k)]
    for v in range(n):
        members[comp_of[v]].append(v)
    components = tuple(tuple(m) for m in members)

    cond = set()
    for u in range(n):
        cu = comp_of[u]
        for i in range(indptr[u], indptr[u + 1]):
            cv = comp_of[targets[i]]
            if cu != cv:
                cond.add((cu, cv))

    return SccDecomposition(components, tuple(comp_of), frozenset(cond))


def bunches(g: LabeledDigraph) -> BunchReport:
    """Detect bunches: >= 1 outgoing edge, all ending at one common vertex."""
    bunch_vertices = []
    bunch_target = {}
    incoming = {v: 0 for v in range(g.num_vertices)}
    for v in range(g.num_vertices):
        targets = g.out_targets(v)
        if targets and len(set(targets)) == 1:
            bunch_vertices.append(v)
            bunch_target[v] = targets[0]
            incoming[targets[0]] += 1
    return BunchReport(frozenset(bunch_vertices), bunch_target, incoming)


def _check_is_component(
    g: LabeledDigraph,
    component: Sequence[int],
    decomposition: Optional[SccDecomposition] = None,
) -> frozenset[int]:
    members = frozenset(component)
    if not members:
        raise ComponentNotStronglyConnected("empty vertex list")
    if decomposition is None:
        decomposition = scc(g)
    first = next(iter(members))
    if not (0 <= first < g.num_vertices):
        raise ComponentNotStronglyConnected(f"vertex {first} not in graph")
    actual = frozenset(decomposition.components[decomposition.component_of[first]])
    if members != actual:
        raise ComponentNotStronglyConnected(
            f"{sorted(members)} is not an SCC (expected {sorted(actual)})"
        )
    return members


def cycle_gcd(g: LabeledDigraph, component: Sequence[int]) -> Optional[int]:
    """Gcd of the lengths of all cycles inside one SCC, None if acyclic.

    Potential method: BFS from the smallest member assigns levels; the gcd
    of ``level(u) + 1 - level(v)`` over intra-component edges u->v equals the
    gcd of all closed-walk lengths.  A lone vertex without a self-loop has no
    cycle at all, hence None.
    """
    members = _check_is_component(g, component)
    root = min(members)

    level = {root: 0}
    frontier = [root]
    edges = []
    while frontier:
        next_frontier = []
        for u in frontier:
            for cell in g.out_targets(u):
                if cell not in members:
                    continue
                edges.append((u, cell))
                if cell not in level:
                    level[cell] = level[u] + 1
                    next_frontier.append(cell)
        frontier = next_frontier

    if not edges:
        return None
    g_val = 0
    for u, v in edges:
        g_val = math.gcd(g_val, level[u] + 1 - level[v])
    return g_val


def is_complete(g: LabeledDigraph) -> bool:
    """True iff every (vertex, label) cell holds a live successor."""
    return all(
        cell is not None and cell < g.num_vertices for row in g.table for cell in row
    )


def out_degree_profile(g: LabeledDigraph) -> dict[int, int]:
    """Live out-degree per vertex."""
    return {v: len(g.out_targets(v)) for v in range(g.num_vertices)}
