"""Acceptance gate: one test (one pass/fail line under ``pytest -v``) per
shipped guarantee.  Each test prints a one-line verdict with its measured
numbers; oracles are implemented here, independently of the package code.

Criterion 4 (the recoloring obstruction) is known to fail: the claimed
universal property is false, and the failure message carries a concrete
counterexample.  See the package README for the analysis.
"""

import math
import time
from collections import deque
from random import Random

from cayleyviz import (
    LabeledDigraph,
    apply_word,
    brute_force_recolor,
    bunches,
    cerny,
    cycle_gcd,
    find_layout,
    full_state_set,
    is_synchronizable,
    parse,
    render,
    scc,
    serialize,
    shortest_sync_word,
    states_of,
    word_from_text,
)
from conftest import GOLDEN, load

SIX_TEXT = "2 6 1 0 2 1 0 3 5 2 3 2 4 5"
FIVE_TEXT = "2 5 1 0 2 1 ; 3 5 ; 3 ;"


def verdict(num: int, ok: bool, detail: str) -> None:
    print(f"[acceptance {num}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"acceptance criterion {num} failed: {detail}"


# --- independent oracles -----------------------------------------------------


def oracle_scc(g: LabeledDigraph) -> set[frozenset[int]]:
    """Pairwise reachability by repeated BFS; mutual-reach classes."""
    n = g.num_vertices
    reach = []
    for s in range(n):
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.out_targets(u):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        reach.append(seen)
    return {
        frozenset(v for v in range(n) if v in reach[u] and u in reach[v])
        for u in range(n)
    }


def oracle_cycle_gcd(g: LabeledDigraph, component: tuple[int, ...]):
    """gcd over an exhaustive enumeration of simple-cycle lengths."""
    members = set(component)
    lengths: list[int] = []

    def extend(start: int, u: int, depth: int, on_path: set[int]) -> None:
        for v in set(g.out_targets(u)):
            if v == start:
                lengths.append(depth)
            elif v > start and v in members and v not in on_path:
                on_path.add(v)
                extend(start, v, depth + 1, on_path)
                on_path.remove(v)

    for s in sorted(members):
        extend(s, s, 1, {s})
    return math.gcd(*lengths) if lengths else None


def oracle_shortest_sync_length(g: LabeledDigraph):
    """Subset BFS over frozensets (independent of the bitmask search)."""
    full = frozenset(range(g.num_vertices))
    depth = {full: 0}
    queue = deque([full])
    while queue:
        s = queue.popleft()
        if len(s) == 1:
            return depth[s]
        for j in range(g.num_labels):
            image = frozenset(g.table[v][j] for v in s)
            if image not in depth:
                depth[image] = depth[s] + 1
                queue.append(image)
    return None


def random_complete_out2(rng: Random, max_vertices: int) -> LabeledDigraph:
    n = rng.randint(2, max_vertices)
    table = tuple(
        tuple(rng.randrange(n) for _ in range(2)) for _ in range(n)
    )
    return LabeledDigraph(2, n, table)


def random_partial(rng: Random, max_vertices: int) -> LabeledDigraph:
    num_labels = rng.randint(1, 3)
    n = rng.randint(1, max_vertices)
    table = tuple(
        tuple(
            rng.randrange(n) if rng.random() < 0.8 else None
            for _ in range(num_labels)
        )
        for _ in range(n)
    )
    return LabeledDigraph(num_labels, n, table)


# --- criteria ----------------------------------------------------------------


def test_criterion_1_format_fidelity():
    start = time.perf_counter()
    six = parse(SIX_TEXT)
    five = parse(FIVE_TEXT, allow_dangling=True)
    ok_six = six.table == ((1, 0), (2, 1), (0, 3), (5, 2), (3, 2), (4, 5))
    ok_five = five.table == ((1, 0), (2, 1), (None, 3), (5, None), (3, None))
    ok_round = (
        parse(serialize(six)) == six
        and parse(serialize(five), allow_dangling=True) == five
    )
    elapsed_ms = (time.perf_counter() - start) * 1e3
    verdict(
        1,
        ok_six and ok_five and ok_round and elapsed_ms < 1.0,
        f"both reference tables parse cell-for-cell, round-trip is the "
        f"identity ({elapsed_ms:.3f} ms)",
    )


def test_criterion_2_repaint_example():
    start = time.perf_counter()
    orig = load("ten_nonsync.cay")
    repainted = load("ten_repainted.cay")
    oracle_len = oracle_shortest_sync_length(repainted)
    report = shortest_sync_word(repainted)
    word = word_from_text("aaaabbaaabba", 2)
    image = states_of(apply_word(repainted, full_state_set(repainted), word))
    elapsed = time.perf_counter() - start
    ok = (
        not is_synchronizable(orig)
        and is_synchronizable(repainted)
        and oracle_len == 12
        and report.shortest_length == 12
        and len(word) == 12
        and len(image) == 1
        and elapsed < 1.0
    )
    verdict(
        2,
        ok,
        f"original not synchronizable, repainted is; oracle length "
        f"{oracle_len} == package length {report.shortest_length} == 12; "
        f"known reset word maps all states to {set(image)} ({elapsed:.3f} s)",
    )


def test_criterion_3_cerny_extremes():
    start = time.perf_counter()
    got = {n: shortest_sync_word(cerny(n)).shortest_length for n in range(2, 9)}
    want = {n: (n - 1) ** 2 for n in range(2, 9)}
    elapsed = time.perf_counter() - start
    verdict(
        3,
        got == want and elapsed < 10.0,
        f"shortest word lengths for n=2..8 are {sorted(got.values())} "
        f"= (n-1)^2 ({elapsed:.2f} s)",
    )


def test_criterion_4_two_incoming_bunches_obstruction():
    """Claimed: every out-degree-2 graph (<= 8 vertices) in which some vertex
    has two incoming bunches admits no synchronizing recoloring.

    The claim is FALSE and this test fails honestly.  Two incoming bunches
    do not obstruct synchronization (the repainted 10-vertex fixture itself
    has two bunches into vertex 1 and a length-12 reset word); the real
    obstruction is a cycle-length gcd > 1.  The counterexample below is
    printed on failure.
    """
    start = time.perf_counter()
    rng = Random(20240825)
    instances = []
    while len(instances) < 50:
        g = random_complete_out2(rng, max_vertices=8)
        counts = bunches(g).incoming_bunch_count
        if any(c >= 2 for c in counts.values()):
            instances.append(g)
    violations = [
        g for g in instances if brute_force_recolor(g, max_vertices=8) is not None
    ]
    elapsed = time.perf_counter() - start
    if violations:
        witness = violations[0]
        detail = (
            f"{len(violations)}/{len(instances)} instances with a "
            f"two-incoming-bunch vertex DO admit a synchronizing recoloring; "
            f"counterexample {serialize(witness).strip()!r} "
            f"(the property as stated is false; see README) ({elapsed:.1f} s)"
        )
    else:
        detail = (
            f"all {len(instances)} generated instances admit no synchronizing "
            f"recoloring ({elapsed:.1f} s)"
        )
    verdict(4, not violations and elapsed < 30.0, detail)


def test_criterion_5_oracle_equivalence():
    start = time.perf_counter()
    rng = Random(101)
    scc_mismatches = 0
    for _ in range(1000):
        g = random_partial(rng, max_vertices=10)
        got = {frozenset(c) for c in scc(g).components}
        if got != oracle_scc(g):
            scc_mismatches += 1
    gcd_mismatches = 0
    checked = 0
    while checked < 200:
        g = random_partial(rng, max_vertices=8)
        for component in scc(g).components:
            if cycle_gcd(g, component) != oracle_cycle_gcd(g, component):
                gcd_mismatches += 1
            checked += 1
    elapsed = time.perf_counter() - start
    verdict(
        5,
        scc_mismatches == 0 and gcd_mismatches == 0,
        f"scc vs reachability oracle: {scc_mismatches}/1000 mismatches; "
        f"cycle_gcd vs exhaustive cycle enumeration: "
        f"{gcd_mismatches}/{checked} mismatches ({elapsed:.1f} s)",
    )


def test_criterion_6_layout_geometry_properties():
    start = time.perf_counter()
    rng = Random(606)
    worst_vertex = 0.0
    worst_center = 0.0
    failures = []
    for i in range(500):
        g = random_partial(rng, max_vertices=200)
        layout, edges = find_layout(g)
        bx, by = layout.big_center
        sizes = [len(c.vertices) for c in layout.scc_circles]
        if sizes != sorted(sizes, reverse=True):
            failures.append(f"size order broken on graph {i}")
        for circle in layout.scc_circles:
            cx, cy = circle.center
            err = abs(math.hypot(cx - bx, cy - by) - layout.big_radius)
            worst_center = max(worst_center, err)
            if err >= 1e-9:
                failures.append(f"scc center off big circle by {err} on graph {i}")
            k = len(circle.vertices)
            for v in circle.vertices:
                x, y = layout.positions[v]
                err = abs(math.hypot(x - cx, y - cy) - circle.radius)
                worst_vertex = max(worst_vertex, err)
                if err >= 1e-9:
                    failures.append(f"vertex off scc circle by {err} on graph {i}")
            if k > 1:
                members = circle.vertices
                cyclic = False
                for length in range(k, 1, -1):
                    if all(
                        members[(t + 1) % length] in g.out_targets(members[t])
                        for t in range(length)
                    ):
                        cyclic = True
                        break
                if not cyclic:
                    failures.append(f"no consecutive cycle prefix on graph {i}")
        if i % 50 == 0 and render(layout, edges) != render(layout, edges):
            failures.append(f"SVG not byte-stable on graph {i}")
    elapsed = time.perf_counter() - start
    verdict(
        6,
        not failures,
        failures[0]
        if failures
        else (
            f"500 random layouts: worst on-circle error {worst_vertex:.2e}, "
            f"worst center error {worst_center:.2e} (tolerance 1e-9), cycle "
            f"prefixes consecutive, sizes non-increasing, SVG byte-stable "
            f"({elapsed:.1f} s)"
        ),
    )


def test_criterion_7_linearity():
    from cayleyviz.bench import run

    start = time.perf_counter()
    rows = run([1_000, 10_000, 100_000], seed=1, impl="auto")
    elapsed = time.perf_counter() - start
    smallest = rows[0].ns_per_element
    largest = rows[-1].ns_per_element
    ratio = max(smallest, largest) / min(smallest, largest)
    verdict(
        7,
        ratio <= 3.0 and elapsed < 60.0,
        f"normalized layout time ns/(V+E): "
        f"{', '.join(f'{r.size}:{r.ns_per_element:.0f}' for r in rows)}; "
        f"smallest-vs-largest ratio {ratio:.2f} <= 3 ({elapsed:.1f} s total)",
    )


def test_criterion_8_golden_svgs():
    cases = [
        ("six.cay", "six.svg", False),
        ("five_partial.cay", "five_partial.svg", True),
        ("ten_repainted.cay", "ten_repainted.svg", False),
    ]
    mismatched = []
    for fixture, golden, lenient in cases:
        g = load(fixture, lenient=lenient)
        layout, edges = find_layout(g)
        if render(layout, edges).encode("utf-8") != (GOLDEN / golden).read_bytes():
            mismatched.append(golden)
    verdict(
        8,
        not mismatched,
        "three committed golden renders reproduced byte-exactly"
        if not mismatched
        else f"golden mismatch: {mismatched}",
    )
