"""Synchronization analysis for complete deterministic automata.

State sets are plain int bitmasks (bit v = state v), so they scale well past
64 states.  Word application, the pairwise synchronizability criterion, an
exact subset-BFS shortest-word search, the classical Cerny sequence and a
desk-scale brute-force search for synchronizing recolorings.

All operations reject partial automata: a missing or dangling cell means the
transition function is not total, and synchronization is undefined there.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .cayley import LabeledDigraph, label_name
from .errors import IncompleteAutomaton, NotOutRegular, TooLarge
from .graph import is_complete

Word = tuple[int, ...]


@dataclass(frozen=True)
class SyncReport:
    """Verdict of a shortest-word search."""

    synchronizable: bool
    shortest_length: Optional[int]
    witness: Optional[Word]


def full_state_set(g: LabeledDigraph) -> int:
    """Bitmask holding every state."""
    return (1 << g.num_vertices) - 1


def state_set(states: Iterable[int]) -> int:
    """Bitmask from an iterable of state ids."""
    mask = 0
    for s in states:
        mask |= 1 << s
    return mask


def states_of(mask: int) -> tuple[int, ...]:
    """Ascending state ids present in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _require_complete(g: LabeledDigraph) -> None:
    if not is_complete(g):
        raise IncompleteAutomaton(
            "operation requires a complete automaton (no empty or dangling cells)"
        )


def _columns(g: LabeledDigraph) -> list[list[int]]:
    """Transition columns: columns[j][s] is the successor of s under label j."""
    return [
        [g.table[s][j] for s in range(g.num_vertices)]  # type: ignore[misc]
        for j in range(g.num_labels)
    ]


def apply_word(g: LabeledDigraph, states: int, word: Sequence[int]) -> int:
    """Image of a state set under a word (left-to-right composition)."""
    _require_complete(g)
    columns = _columns(g)
    for letter in word:
        if not 0 <= letter < g.num_labels:
            raise ValueError(f"label {letter} outside 0..{g.num_labels - 1}")
        column = columns[letter]
        image = 0
        remaining = states
        while remaining:
            low = remaining & -remaining
            image |= 1 << column[low.bit_length() - 1]
            remaining ^= low
        states = image
    return states


def is_synchronizable(g: LabeledDigraph) -> bool:
    """Pairwise criterion: every state pair can be merged by some word.

    Backward BFS over the pair graph from the diagonal; O(labels * n^2), so
    it scales to thousands of states where the subset search cannot.
    """
    _require_complete(g)
    n = g.num_vertices
    if n == 1:
        return True
    columns = _columns(g)
    preimages: list[list[list[int]]] = [
        [[] for _ in range(n)] for _ in range(g.num_labels)
    ]
    for j, column in enumerate(columns):
        for s, t in enumerate(column):
            preimages[j][t].append(s)

    mergeable = bytearray(n * n)
    queue: list[tuple[int, int]] = []

    def mark(p: int, q: int) -> None:
        if p > q:
            p, q = q, p
        if p == q or mergeable[p * n + q]:
            return
        mergeable[p * n + q] = 1
        queue.append((p, q))

    for j in range(g.num_labels):
        for t in range(n):
            pre = preimages[j][t]
            for a in range(len(pre)):
                for b in range(a + 1, len(pre)):
                    mark(pre[a], pre[b])

    head = 0
    while head < len(queue):
        p, q = queue[head]
        head += 1
        for j in range(g.num_labels):
            for p2 in preimages[j][p]:
                for q2 in preimages[j][q]:
                    mark(p2, q2)

    total_pairs = n * (n - 1) // 2
    return sum(mergeable) == total_pairs


def shortest_sync_word(g: LabeledDigraph, max_states: int = 20) -> SyncReport:
    """Exact shortest synchronizing word via BFS over the subset lattice.

    Returns the lexicographically least witness (by label index) among the
    shortest words; ``shortest_length`` is None when no word exists.  BFS
    expands letters in ascending order, so the first singleton discovered is
    reached by the lex-least shortest word.
    """
    _require_complete(g)
    n = g.num_vertices
    if n > max_states:
        raise TooLarge(f"{n} states exceeds the subset-search cap of {max_states}")

    start = full_state_set(g)
    if n == 1:
        return SyncReport(True, 0, ())

    columns = _columns(g)
    parent: dict[int, tuple[int, int]] = {start: (-1, -1)}
    frontier = [start]
    while frontier:
        next_frontier = []
        for mask in frontier:
            for j in range(g.num_labels):
                column = columns[j]
                image = 0
                remaining = mask
                while remaining:
                    low = remaining & -remaining
                    image |= 1 << column[low.bit_length() - 1]
                    remaining ^= low
                if image in parent:
                    continue
                parent[image] = (mask, j)
                if image & (image - 1) == 0:  # singleton: reconstruct and return
                    word = []
                    cursor = image
                    while cursor != start:
                        prev, letter = parent[cursor]
                        word.append(letter)
                        cursor = prev
                    word.reverse()
                    return SyncReport(True, len(word), tuple(word))
                next_frontier.append(image)
        frontier = next_frontier
    return SyncReport(False, None, None)


def cerny(n: int) -> LabeledDigraph:
    """The classical n-state Cerny automaton over two labels.

    Label a rotates (i -> i+1 mod n); label b sends 0 -> 1 and fixes the
    rest.  Its shortest synchronizing word has length (n-1)^2.
    """
    if n < 2:
        raise ValueError("cerny automata need at least 2 states")
    rows = tuple(((i + 1) % n, 1 if i == 0 else i) for i in range(n))
    return LabeledDigraph(2, n, rows)


def brute_force_recolor(
    g: LabeledDigraph, max_vertices: int = 12
) -> Optional[LabeledDigraph]:
    """First synchronizing relabeling of an out-regular graph, if any.

    The underlying unlabeled multigraph is preserved: each vertex may only
    permute the labels on its own outgoing edges.  Assignments are tried
    odometer-style (vertices ascending, per-vertex label permutations in
    lexicographic order, identity first), so the result is deterministic and
    the search covers all labels!^vertices colorings.
    """
    if g.num_vertices > max_vertices:
        raise TooLarge(
            f"{g.num_vertices} vertices exceeds the recoloring cap of {max_vertices}"
        )
    if not is_complete(g):
        raise NotOutRegular(
            "recoloring needs a full row of live successors per vertex"
        )

    perms = list(itertools.permutations(range(g.num_labels)))
    rows = [tuple(row) for row in g.table]
    for assignment in itertools.product(perms, repeat=g.num_vertices):
        candidate_rows = tuple(
            tuple(rows[v][perm[j]] for j in range(g.num_labels))
            for v, perm in enumerate(assignment)
        )
        candidate = LabeledDigraph(g.num_labels, g.num_vertices, candidate_rows)
        if is_synchronizable(candidate):
            return candidate
    return None


def word_to_text(word: Sequence[int], num_labels: int) -> str:
    """Render a word the way the CLI accepts it (letters, or ints past z)."""
    if num_labels <= 26:
        return "".join(label_name(j) for j in word)
    return ",".join(str(j) for j in word)


def word_from_text(text: str, num_labels: int) -> Word:
    """Parse a CLI word: letters a-z for labels 0-25, else comma-separated ints."""
    text = text.strip()
    if not text:
        return ()
    if "," in text or text.isdigit():
        letters = tuple(int(part) for part in text.split(","))
    else:
        letters = tuple(ord(ch) - ord("a") for ch in text)
    for letter in letters:
        if not 0 <= letter < num_labels:
            raise ValueError(
                f"word letter {letter} outside the {num_labels}-label alphabet"
            )
    return letters
