"""Scaling benchmark for the layout pipeline.

Generates seeded random out-regular digraphs and times ``find_layout``.
The interesting number is wall time divided by (vertices + edges): a linear
algorithm keeps it flat as sizes grow.  Both kernel backends can be timed
for comparison.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from random import Random
from typing import Optional, Sequence

from .cayley import LabeledDigraph
from .kernels import HAVE_FAST, backend_name
from .layout import find_layout


def random_out_regular(
    num_vertices: int, seed: int, out_degree: int = 2
) -> LabeledDigraph:
    """Random digraph where every vertex has `out_degree` uniform targets.

    Seeded by a string so the stream is stable across platforms; self-loops
    and parallel edges occur naturally, exercising the loop and stripe paths.
    """
    rng = Random(f"cayleyviz-bench:{seed}:{num_vertices}")
    rows = tuple(
        tuple(rng.randrange(num_vertices) for _ in range(out_degree))
        for _ in range(num_vertices)
    )
    return LabeledDigraph(out_degree, num_vertices, rows)


@dataclass(frozen=True)
class BenchRow:
    size: int
    edges: int
    impl: str
    wall_seconds: float

    @property
    def ns_per_element(self) -> float:
        return self.wall_seconds / (self.size + self.edges) * 1e9


def time_layout(g: LabeledDigraph, impl: Optional[str], repeats: int) -> float:
    """Best-of-N wall time of find_layout in seconds."""
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        find_layout(g, backend_name=impl)
        best = min(best, time.perf_counter() - start)
    return best


def run(
    sizes: Sequence[int], seed: int, impl: str = "auto"
) -> list[BenchRow]:
    """Benchmark rows for each size (and each backend when impl='both')."""
    if impl == "both":
        impls = ["pure", "fast"] if HAVE_FAST else ["pure"]
    else:
        impls = [backend_name(impl)]
    rows = []
    for size in sizes:
        g = random_out_regular(size, seed)
        num_edges = g.num_edges
        for name in impls:
            repeats = 3 if size <= 20_000 else 1
            wall = time_layout(g, name, repeats)
            rows.append(BenchRow(size, num_edges, name, wall))
    return rows


def format_rows(rows: Sequence[BenchRow]) -> str:
    lines = ["# size edges impl wall_ms ns_per_element"]
    for row in rows:
        lines.append(
            f"{row.size} {row.edges} {row.impl} "
            f"{row.wall_seconds * 1e3:.3f} {row.ns_per_element:.1f}"
        )
    return "\n".join(lines) + "\n"
