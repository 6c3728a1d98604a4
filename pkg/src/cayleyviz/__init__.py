"""Linear-time cyclic layout and analysis for labeled directed graphs.

Graphs are Cayley tables: every vertex has one successor cell per label, so
out-degree is uniform and the structure doubles as a deterministic automaton.
The package parses that table format, decomposes the graph into strongly
connected components, computes a two-level circular layout in linear time,
renders deterministic SVG, and answers synchronization questions (shortest
reset words, the Cerny family, brute-force recoloring).
"""

from .cayley import (
    FILE_EXTENSION,
    LabeledDigraph,
    label_name,
    parse,
    serialize,
)
from .errors import (
    BadHeader,
    CayleyVizError,
    ComponentNotStronglyConnected,
    IncompleteAutomaton,
    MalformedToken,
    NotOutRegular,
    ParseError,
    TooFewTokens,
    TooLarge,
    TrailingGarbage,
    VertexOutOfRange,
)
from .graph import (
    BunchReport,
    SccDecomposition,
    bunches,
    cycle_gcd,
    is_complete,
    out_degree_profile,
    scc,
)
from .kernels import HAVE_FAST, backend_name
from .layout import (
    LOOP,
    SEGMENT,
    EdgeGeometry,
    Layout,
    LayoutOptions,
    SccCircle,
    find_layout,
    layout_json,
    layout_json_text,
    order_scc_vertices,
)
from .svg import DEFAULT_PALETTE, RenderOptions, render
from .synchro import (
    SyncReport,
    apply_word,
    brute_force_recolor,
    cerny,
    full_state_set,
    is_synchronizable,
    shortest_sync_word,
    state_set,
    states_of,
    word_from_text,
    word_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "BadHeader",
    "BunchReport",
    "CayleyVizError",
    "ComponentNotStronglyConnected",
    "DEFAULT_PALETTE",
    "EdgeGeometry",
    "FILE_EXTENSION",
    "HAVE_FAST",
    "IncompleteAutomaton",
    "LOOP",
    "LabeledDigraph",
    "Layout",
    "LayoutOptions",
    "MalformedToken",
    "NotOutRegular",
    "ParseError",
    "RenderOptions",
    "SEGMENT",
    "SccCircle",
    "SccDecomposition",
    "SyncReport",
    "TooFewTokens",
    "TooLarge",
    "TrailingGarbage",
    "VertexOutOfRange",
    "apply_word",
    "backend_name",
    "brute_force_recolor",
    "bunches",
    "cerny",
    "cycle_gcd",
    "find_layout",
    "full_state_set",
    "is_complete",
    "is_synchronizable",
    "label_name",
    "layout_json",
    "layout_json_text",
    "order_scc_vertices",
    "out_degree_profile",
    "parse",
    "render",
    "scc",
    "serialize",
    "shortest_sync_word",
    "state_set",
    "states_of",
    "word_from_text",
    "word_to_text",
    "__version__",
]
