"""Two-level cyclic layout for labeled digraphs.

Placement scheme: strongly connected components sit on a big circle, ordered
by size; within each component the vertices sit on the component's own
circle, with a relatively great cycle occupying consecutive slots and the
remaining vertices following in BFS order.  Edges are straight segments
clipped to the vertex glyphs; parallel edges fan out on symmetric stripe
offsets and self-loops become small rings around their vertex.  Total cost
is linear in vertices + edges, and identical inputs produce bit-identical
output.

Canvas convention: y grows downward (SVG style); angle 90 degrees points to
the canvas top.  The big circle is centered at the origin.
"""

from __future__ import annotations

import json
import math
from array import array
from dataclasses import dataclass
from typing import Optional, Sequence

from .cayley import LabeledDigraph
from .graph import SccDecomposition, _check_is_component, csr, scc
from .kernels import backend

TAU = math.tau

SEGMENT = "segment"
LOOP = "loop"

Point = tuple[float, float]


@dataclass(frozen=True)
class LayoutOptions:
    """Geometry knobs, all in abstract canvas units."""

    vertex_radius: float = 8.0
    spacing: float = 60.0  # target arc distance between neighbors on an SCC circle
    scc_gap: float = 40.0  # extra arc between adjacent SCCs on the big circle
    stripe_spacing: float = 6.0  # perpendicular gap between parallel edges
    loop_radius: Optional[float] = None  # ring radius; defaults to vertex_radius
    min_big_radius: float = 0.0

    def __post_init__(self) -> None:
        if self.vertex_radius <= 0 or self.spacing <= 0:
            raise ValueError("vertex_radius and spacing must be positive")
        if self.scc_gap < 0 or self.stripe_spacing < 0 or self.min_big_radius < 0:
            raise ValueError("gaps, stripes and radii must be non-negative")

    @property
    def effective_loop_radius(self) -> float:
        return self.vertex_radius if self.loop_radius is None else self.loop_radius


@dataclass(frozen=True)
class SccCircle:
    """One component's circle: center, radius and circular vertex order."""

    component: int  # index into the SccDecomposition
    center: Point
    radius: float
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class Layout:
    big_center: Point
    big_radius: float
    scc_circles: tuple[SccCircle, ...]  # in big-circle placement order
    positions: tuple[Point, ...]  # indexed by vertex id
    vertex_radius: float


@dataclass(frozen=True)
class EdgeGeometry:
    """A routed edge: straight segment or loop ring, colored by label."""

    kind: str  # SEGMENT or LOOP
    source: int
    target: int
    label: int
    start: Optional[Point] = None  # segment endpoints, clipped to glyphs
    end: Optional[Point] = None
    stripe_offset: float = 0.0
    ring_center: Optional[Point] = None
    ring_radius: float = 0.0

    @property
    def length(self) -> float:
        """Clipped segment length (diagnostic; 0 for loops)."""
        if self.kind != SEGMENT:
            return 0.0
        assert self.start is not None and self.end is not None
        return math.hypot(self.end[0] - self.start[0], self.end[1] - self.start[1])


def _placement_order(decomposition: SccDecomposition, num_vertices: int) -> list[int]:
    """Component indices sorted by size descending, then smallest member.

    Bucket sort keyed by size; the canonical component order is already
    ascending in smallest member, which the buckets preserve.  O(V).
    """
    buckets: list[list[int]] = [[] for _ in range(num_vertices + 1)]
    for ci, members in enumerate(decomposition.components):
        buckets[len(members)].append(ci)
    order = []
    for size in range(num_vertices, 0, -1):
        order.extend(buckets[size])
    return order


def order_scc_vertices(
    g: LabeledDigraph,
    component: Sequence[int],
    *,
    backend_name: Optional[str] = None,
) -> tuple[int, ...]:
    """Circular ordering for one SCC: a relatively great cycle first (in
    cycle order), then the remaining vertices in BFS discovery order.

    The cycle comes from a DFS rooted at the smallest member: among back
    edges, the one spanning the greatest depth difference closes the cycle.
    Raises ComponentNotStronglyConnected if the vertex list is not an SCC.
    """
    decomposition = scc(g, backend_name=backend_name)
    _check_is_component(g, component, decomposition)
    indptr, targets = csr(g)
    comp_of = array("i", decomposition.component_of)
    roots = array("i", [min(component)])
    kern = backend(backend_name)
    return tuple(kern.order_components(g.num_vertices, indptr, targets, comp_of, roots))


def find_layout(
    g: LabeledDigraph,
    opts: Optional[LayoutOptions] = None,
    *,
    backend_name: Optional[str] = None,
) -> tuple[Layout, list[EdgeGeometry]]:
    """Compute the two-level cyclic layout and routed edge geometry.

    Deterministic and total on valid graphs; linear in vertices + edges.
    """
    if opts is None:
        opts = LayoutOptions()
    kern = backend(backend_name)
    n = g.num_vertices
    decomposition = scc(g, backend_name=backend_name)
    placement = _placement_order(decomposition, n)
    k = len(placement)

    radii = []
    arcs = []
    for ci in placement:
        size = len(decomposition.components[ci])
        r = 0.0 if size == 1 else size * opts.spacing / TAU
        radii.append(r)
        arcs.append(2.0 * r + opts.scc_gap)

    if k == 1:
        big_radius = 0.0
    else:
        big_radius = max(opts.min_big_radius, sum(arcs) / TAU)

    thetas = []
    centers: list[Point] = []
    midpoint = 0.0
    first_midpoint = arcs[0] / 2.0
    prefix = 0.0
    for p in range(k):
        midpoint = prefix + arcs[p] / 2.0
        if big_radius == 0.0:
            theta = 0.5 * math.pi
            centers.append((0.0, 0.0))
        else:
            theta = 0.5 * math.pi + (midpoint - first_midpoint) / big_radius
            centers.append(
                (big_radius * math.cos(theta), -big_radius * math.sin(theta))
            )
        thetas.append(theta)
        prefix += arcs[p]

    indptr, targets = csr(g)
    comp_of = array("i", decomposition.component_of)
    roots = array("i", [decomposition.components[ci][0] for ci in placement])
    ordered = kern.order_components(n, indptr, targets, comp_of, roots)

    positions: list[Point] = [(0.0, 0.0)] * n
    circles = []
    offset = 0
    for p, ci in enumerate(placement):
        size = len(decomposition.components[ci])
        members = tuple(ordered[offset : offset + size])
        offset += size
        cx, cy = centers[p]
        if size == 1:
            positions[members[0]] = (cx, cy)
        else:
            r = radii[p]
            for t, v in enumerate(members):
                phi = thetas[p] + TAU * t / size
                positions[v] = (cx + r * math.cos(phi), cy - r * math.sin(phi))
        circles.append(SccCircle(ci, (cx, cy), radii[p], members))

    layout = Layout(
        big_center=(0.0, 0.0),
        big_radius=big_radius,
        scc_circles=tuple(circles),
        positions=tuple(positions),
        vertex_radius=opts.vertex_radius,
    )
    return layout, _route_edges(g, layout, opts)


def _route_edges(
    g: LabeledDigraph, layout: Layout, opts: LayoutOptions
) -> list[EdgeGeometry]:
    rho = opts.vertex_radius
    loop_r = opts.effective_loop_radius
    delta = opts.stripe_spacing
    positions = layout.positions
    edges: list[EdgeGeometry] = []

    for u in range(g.num_vertices):
        loops: list[int] = []
        bundles: dict[int, list[int]] = {}  # target -> labels, first-seen order
        for j, cell in enumerate(g.table[u]):
            if cell is None or cell >= g.num_vertices:
                continue
            if cell == u:
                loops.append(j)
            else:
                bundles.setdefault(cell, []).append(j)

        ux, uy = positions[u]
        for v, labels in bundles.items():
            vx, vy = positions[v]
            dx, dy = vx - ux, vy - uy
            dist = math.hypot(dx, dy)
            if dist == 0.0:
                dx, dy, dist = 1.0, 0.0, 1.0  # coincident glyphs; pick a fixed axis
            dirx, diry = dx / dist, dy / dist
            perpx, perpy = -diry, dirx
            m = len(labels)
            for idx, j in enumerate(labels):
                stripe = (idx - (m - 1) / 2.0) * delta
                trim = math.sqrt(max(rho * rho - stripe * stripe, 0.0))
                edges.append(
                    EdgeGeometry(
                        kind=SEGMENT,
                        source=u,
                        target=v,
                        label=j,
                        start=(
                            ux + stripe * perpx + trim * dirx,
                            uy + stripe * perpy + trim * diry,
                        ),
                        end=(
                            vx + stripe * perpx - trim * dirx,
                            vy + stripe * perpy - trim * diry,
                        ),
                        stripe_offset=stripe,
                    )
                )

        count = len(loops)
        for t, j in enumerate(loops):
            alpha = TAU * t / count
            d = rho + loop_r
            edges.append(
                EdgeGeometry(
                    kind=LOOP,
                    source=u,
                    target=u,
                    label=j,
                    ring_center=(
                        ux + d * math.cos(alpha),
                        uy - d * math.sin(alpha),
                    ),
                    ring_radius=loop_r,
                )
            )
    return edges


def layout_json(layout: Layout, edges: Sequence[EdgeGeometry]) -> dict:
    """JSON-ready dump of a layout (schema documented in the README)."""
    scc_list = [
        {
            "component": c.component,
            "cx": c.center[0],
            "cy": c.center[1],
            "r": c.radius,
            "vertices": list(c.vertices),
        }
        for c in layout.scc_circles
    ]
    vertex_list = [
        {"id": v, "x": p[0], "y": p[1]} for v, p in enumerate(layout.positions)
    ]
    edge_list = []
    for e in edges:
        if e.kind == SEGMENT:
            assert e.start is not None and e.end is not None
            edge_list.append(
                {
                    "kind": SEGMENT,
                    "source": e.source,
                    "target": e.target,
                    "label": e.label,
                    "x1": e.start[0],
                    "y1": e.start[1],
                    "x2": e.end[0],
                    "y2": e.end[1],
                    "stripe_offset": e.stripe_offset,
                }
            )
        else:
            assert e.ring_center is not None
            edge_list.append(
                {
                    "kind": LOOP,
                    "source": e.source,
                    "target": e.target,
                    "label": e.label,
                    "cx": e.ring_center[0],
                    "cy": e.ring_center[1],
                    "r": e.ring_radius,
                }
            )
    return {
        "big_circle": {
            "cx": layout.big_center[0],
            "cy": layout.big_center[1],
            "r": layout.big_radius,
        },
        "vertex_radius": layout.vertex_radius,
        "sccs": scc_list,
        "vertices": vertex_list,
        "edges": edge_list,
    }


def layout_json_text(layout: Layout, edges: Sequence[EdgeGeometry]) -> str:
    """Deterministic serialized form of :func:`layout_json`."""
    return json.dumps(layout_json(layout, edges), indent=2) + "\n"
