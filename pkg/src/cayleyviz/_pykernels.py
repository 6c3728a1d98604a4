"""Pure-Python graph-traversal kernels.

Same contract as the compiled twin in ``_speedups.pyx``; both operate on a
CSR view of the live edges (``indptr`` of length n+1, ``targets`` of length
E) and use only integer arithmetic, so their outputs are identical.
"""

from __future__ import annotations

from array import array

NAME = "pure"


def tarjan_labels(n: int, indptr, targets) -> array:
    """Label each vertex with an SCC id (equal label iff same component).

    Iterative Tarjan; ids are assigned in component-completion order and
    carry no further meaning.  O(n + E).
    """
    index = array("i", bytes(4 * n))
    lowlink = array("i", bytes(4 * n))
    labels = array("i", bytes(4 * n))
    for v in range(n):
        index[v] = -1
        labels[v] = -1
    onstack = bytearray(n)
    scc_stack = array("i", bytes(4 * n))
    scc_top = 0
    stack_v = array("i", bytes(4 * n))
    stack_e = array("i", bytes(4 * n))
    next_index = 0
    next_label = 0

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = lowlink[root] = next_index
        next_index += 1
        scc_stack[scc_top] = root
        scc_top += 1
        onstack[root] = 1
        sp = 0
        stack_v[0] = root
        stack_e[0] = indptr[root]
        while sp >= 0:
            v = stack_v[sp]
            i = stack_e[sp]
            if i < indptr[v + 1]:
                stack_e[sp] = i + 1
                w = targets[i]
                if index[w] == -1:
                    index[w] = lowlink[w] = next_index
                    next_index += 1
                    scc_stack[scc_top] = w
                    scc_top += 1
                    onstack[w] = 1
                    sp += 1
                    stack_v[sp] = w
                    stack_e[sp] = indptr[w]
                elif onstack[w] and index[w] < lowlink[v]:
                    lowlink[v] = index[w]
            else:
                if lowlink[v] == index[v]:
                    while True:
                        scc_top -= 1
                        w = scc_stack[scc_top]
                        onstack[w] = 0
                        labels[w] = next_label
                        if w == v:
                            break
                    next_label += 1
                sp -= 1
                if sp >= 0 and lowlink[v] < lowlink[stack_v[sp]]:
                    lowlink[stack_v[sp]] = lowlink[v]
    return labels


def order_components(n: int, indptr, targets, comp_of, roots) -> array:
    """Concatenated circular vertex order for each root's component.

    Per component: DFS from the root over intra-component edges, keep the
    back edge spanning the greatest depth difference, lay that cycle out
    first, then append the rest in BFS discovery order from the cycle.
    O(n + E) over all components.
    """
    gray = array("i", bytes(4 * n))
    done = array("i", bytes(4 * n))
    placed = array("i", bytes(4 * n))
    for v in range(n):
        gray[v] = done[v] = placed[v] = -1
    depth = array("i", bytes(4 * n))
    parent = array("i", bytes(4 * n))
    stack_v = array("i", bytes(4 * n))
    stack_e = array("i", bytes(4 * n))
    queue = array("i", bytes(4 * n))
    out = array("i")

    for stamp, root in enumerate(roots):
        cid = comp_of[root]
        gray[root] = stamp
        depth[root] = 0
        parent[root] = -1
        sp = 0
        stack_v[0] = root
        stack_e[0] = indptr[root]
        best_len = 0
        best_tip = -1
        best_anchor = -1
        while sp >= 0:
            v = stack_v[sp]
            i = stack_e[sp]
            if i < indptr[v + 1]:
                stack_e[sp] = i + 1
                w = targets[i]
                if comp_of[w] != cid:
                    continue
                if gray[w] != stamp:
                    gray[w] = stamp
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    sp += 1
                    stack_v[sp] = w
                    stack_e[sp] = indptr[w]
                elif done[w] != stamp:
                    cycle_len = depth[v] - depth[w] + 1
                    if cycle_len > best_len:
                        best_len = cycle_len
                        best_tip = v
                        best_anchor = w
            else:
                done[v] = stamp
                sp -= 1

        if best_len == 0:
            out.append(root)
            continue

        cycle = []
        v = best_tip
        while v != best_anchor:
            cycle.append(v)
            v = parent[v]
        cycle.append(best_anchor)
        cycle.reverse()

        tail = 0
        for v in cycle:
            placed[v] = stamp
            queue[tail] = v
            tail += 1
        head = 0
        while head < tail:
            v = queue[head]
            head += 1
            for i in range(indptr[v], indptr[v + 1]):
                w = targets[i]
                if comp_of[w] == cid and placed[w] != stamp:
                    placed[w] = stamp
                    queue[tail] = w
                    tail += 1
        out.extend(queue[:tail])
    return out
