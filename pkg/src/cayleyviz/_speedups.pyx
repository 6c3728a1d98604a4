# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled graph-traversal kernels; contract identical to _pykernels."""

from cpython cimport array
import array

NAME = "fast"

cdef array.array _INT_TEMPLATE = array.array("i", [])


def tarjan_labels(int n, int[:] indptr, int[:] targets):
    """Iterative Tarjan SCC labeling over CSR arrays. O(n + E)."""
    cdef array.array index_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array lowlink_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array labels_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array onstack_arr = array.clone(_INT_TEMPLATE, n, zero=True)
    cdef array.array scc_stack_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array stack_v_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array stack_e_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef int[:] index = index_arr
    cdef int[:] lowlink = lowlink_arr
    cdef int[:] labels = labels_arr
    cdef int[:] onstack = onstack_arr
    cdef int[:] scc_stack = scc_stack_arr
    cdef int[:] stack_v = stack_v_arr
    cdef int[:] stack_e = stack_e_arr
    cdef int v, w, i, sp, root, scc_top
    cdef int next_index = 0, next_label = 0

    for v in range(n):
        index[v] = -1
        labels[v] = -1
    scc_top = 0

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = next_index
        lowlink[root] = next_index
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
                    index[w] = next_index
                    lowlink[w] = next_index
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
    return labels_arr


def order_components(int n, int[:] indptr, int[:] targets, int[:] comp_of, roots):
    """Great-cycle-first circular ordering per component. O(n + E) total."""
    cdef array.array gray_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array done_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array placed_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array depth_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array parent_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array stack_v_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array stack_e_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array queue_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array cycle_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef array.array out_arr = array.clone(_INT_TEMPLATE, n, zero=False)
    cdef int[:] gray = gray_arr
    cdef int[:] done = done_arr
    cdef int[:] placed = placed_arr
    cdef int[:] depth = depth_arr
    cdef int[:] parent = parent_arr
    cdef int[:] stack_v = stack_v_arr
    cdef int[:] stack_e = stack_e_arr
    cdef int[:] queue = queue_arr
    cdef int[:] cycle = cycle_arr
    cdef int[:] out = out_arr
    cdef int v, w, i, sp, cid, root, stamp
    cdef int best_len, best_tip, best_anchor, cycle_len
    cdef int head, tail, cyc_len, out_len = 0

    for v in range(n):
        gray[v] = -1
        done[v] = -1
        placed[v] = -1

    for stamp in range(len(roots)):
        root = roots[stamp]
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
            out[out_len] = root
            out_len += 1
            continue

        cyc_len = 0
        v = best_tip
        while v != best_anchor:
            cycle[cyc_len] = v
            cyc_len += 1
            v = parent[v]
        cycle[cyc_len] = best_anchor
        cyc_len += 1

        tail = 0
        for i in range(cyc_len - 1, -1, -1):
            v = cycle[i]
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
        for i in range(tail):
            out[out_len] = queue[i]
            out_len += 1

    array.resize(out_arr, out_len)
    return out_arr
