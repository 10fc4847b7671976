"""Backtracking kernels for Berge path/cycle search.

Everything here works on 0-based vertex and edge ids over an (m, n) uint8
incidence matrix and is compiled with numba when available.

The search walks vertex sequences. Edges are never chosen as branches:
every vertex b != start owns a slot "the edge entering b", which is either
a concrete pair {pred[b], b} once b is on the path or, with pruning on,
the relaxed demand "some edge containing b" while b is still unvisited.
A maximum matching of slots to distinct edges is maintained incrementally
(Kuhn augmenting paths); a slot that cannot be matched is a Hall-condition
violation and the branch is cut. With pruning off only concrete pair
slots are matched, which is exactly the distinct-edge feasibility of the
prefix.
"""

import numpy as np

from ._accel import njit

FOUND = 1
REFUTED = 0
UNDECIDED = 2


@njit
def _slot_ok(inc, e, a, b):
    # a < 0: relaxed slot, edge only has to contain b
    if inc[e, b] == 0:
        return False
    return a < 0 or inc[e, a] == 1


@njit
def _augment(inc, pred, match_slot, match_edge, root, seen, queue, parent_edge):
    """Try to match slot ``root`` by one alternating BFS.

    match_slot[v] = edge matched to the slot of vertex v (or -1);
    match_edge[e] = vertex whose slot holds e (or -1).
    """
    m = inc.shape[0]
    for e in range(m):
        seen[e] = 0
    head = 0
    tail = 0
    queue[tail] = root
    tail += 1
    parent_edge[root] = -1
    while head < tail:
        v = queue[head]
        head += 1
        a = pred[v]
        for e in range(m):
            if seen[e] == 1 or not _slot_ok(inc, e, a, v):
                continue
            seen[e] = 1
            w = match_edge[e]
            if w < 0:
                # flip the alternating path back to root
                cur_v = v
                cur_e = e
                while True:
                    prev_e = match_slot[cur_v]
                    match_slot[cur_v] = cur_e
                    match_edge[cur_e] = cur_v
                    if cur_v == root:
                        return True
                    cur_e = prev_e
                    cur_v = parent_edge[cur_v]
            parent_edge[w] = v
            queue[tail] = w
            tail += 1
    return False


@njit
def _reassign(inc, pred, match_slot, match_edge, v, seen, queue, parent_edge):
    """Re-validate slot v after its constraint tightened; False if unmatchable."""
    e = match_slot[v]
    if e >= 0:
        if _slot_ok(inc, e, pred[v], v):
            return True
        match_edge[e] = -1
        match_slot[v] = -1
    return _augment(inc, pred, match_slot, match_edge, v, seen, queue, parent_edge)


@njit
def _order_candidates(adj, visited, cands, k, fail_first):
    """Sort cands[:k]: ascending id, or fewest unvisited neighbours first."""
    n = adj.shape[0]
    keys = np.empty(k, dtype=np.int64)
    for i in range(k):
        b = cands[i]
        if fail_first:
            deg = 0
            for u in range(n):
                if visited[u] == 0 and u != b and adj[b, u] > 0:
                    deg += 1
            keys[i] = deg * n + b
        else:
            keys[i] = b
    # insertion sort; k <= n is small
    for i in range(1, k):
        kv = keys[i]
        cv = cands[i]
        j = i - 1
        while j >= 0 and keys[j] > kv:
            keys[j + 1] = keys[j]
            cands[j + 1] = cands[j]
            j -= 1
        keys[j + 1] = kv
        cands[j + 1] = cv


@njit
def hamiltonian_search(inc, start, target, prune, fail_first, max_nodes):
    """Search a hamiltonian Berge path start->target, or a cycle if target < 0.

    Returns (status, path, slot_edges, nodes): ``path`` lists the n vertices,
    ``slot_edges[v]`` is the edge entering v (for a cycle, slot_edges[start]
    is the closing edge). Status is FOUND, REFUTED or UNDECIDED (budget hit).
    """
    m, n = inc.shape
    cycle = target < 0
    path = np.full(n, -1, dtype=np.int64)
    out_edges = np.full(n, -1, dtype=np.int64)
    need = n if cycle else n - 1
    if m < need or n < 2:
        return REFUTED, path, out_edges, 0

    adj = np.zeros((n, n), dtype=np.int64)
    for e in range(m):
        for a in range(n):
            if inc[e, a] == 1:
                for b in range(n):
                    if b != a and inc[e, b] == 1:
                        adj[a, b] += 1

    pred = np.full(n, -1, dtype=np.int64)
    visited = np.zeros(n, dtype=np.uint8)
    seen = np.zeros(m, dtype=np.uint8)
    queue = np.zeros(n, dtype=np.int64)
    parent_edge = np.zeros(n, dtype=np.int64)
    ms_stack = np.full((n + 1, n), -1, dtype=np.int64)
    me_stack = np.full((n + 1, m), -1, dtype=np.int64)
    cands = np.zeros((n + 1, n), dtype=np.int64)
    ncand = np.zeros(n + 1, dtype=np.int64)
    cptr = np.zeros(n + 1, dtype=np.int64)

    # slot active flags: which vertices currently need an entering edge
    active = np.zeros(n, dtype=np.uint8)
    if prune:
        for v in range(n):
            if v != start or cycle:
                active[v] = 1
        for v in range(n):
            if active[v] == 1:
                if not _augment(inc, pred, ms_stack[0], me_stack[0], v, seen, queue, parent_edge):
                    return REFUTED, path, out_edges, 0

    path[0] = start
    visited[start] = 1
    depth = 0  # index of the last placed vertex
    nodes = 0

    # candidates for depth 0
    k = 0
    for b in range(n):
        if visited[b] == 0 and adj[start, b] > 0 and (b != target or n == 2):
            cands[0, k] = b
            k += 1
    _order_candidates(adj, visited, cands[0], k, fail_first)
    ncand[0] = k
    cptr[0] = 0

    while depth >= 0:
        if cptr[depth] >= ncand[depth]:
            # backtrack
            if depth == 0:
                break
            last = path[depth]
            visited[last] = 0
            pred[last] = -1
            path[depth] = -1
            depth -= 1
            continue
        b = cands[depth, cptr[depth]]
        cptr[depth] += 1
        nodes += 1
        if max_nodes > 0 and nodes > max_nodes:
            return UNDECIDED, path, out_edges, nodes
        a = path[depth]
        ms = ms_stack[depth + 1]
        me = me_stack[depth + 1]
        ms[:] = ms_stack[depth]
        me[:] = me_stack[depth]
        pred[b] = a
        if not _reassign(inc, pred, ms, me, b, seen, queue, parent_edge):
            pred[b] = -1
            continue
        placed = depth + 2
        if placed == n:
            if cycle:
                pred[start] = b
                ok = _reassign(inc, pred, ms, me, start, seen, queue, parent_edge)
                if not ok:
                    pred[start] = -1
                    pred[b] = -1
                    continue
            path[depth + 1] = b
            for v in range(n):
                out_edges[v] = ms[v]
            return FOUND, path, out_edges, nodes
        visited[b] = 1
        depth += 1
        path[depth] = b
        k = 0
        last_step = placed == n - 1
        for c in range(n):
            if visited[c] == 1 or adj[b, c] == 0:
                continue
            if not cycle and ((c == target) != last_step):
                continue
            cands[depth, k] = c
            k += 1
        _order_candidates(adj, visited, cands[depth], k, fail_first)
        ncand[depth] = k
        cptr[depth] = 0
    return REFUTED, path, out_edges, nodes


@njit
def longest_search(inc, start, target, max_nodes):
    """Branch and bound for the longest Berge start->target path.

    Returns (best_len, path, slot_edges, nodes, complete); best_len is 0 when
    no path exists. ``complete`` is False only if the node budget ran out.
    """
    m, n = inc.shape
    best_path = np.full(n, -1, dtype=np.int64)
    best_edges = np.full(n, -1, dtype=np.int64)
    best = 0
    adj = np.zeros((n, n), dtype=np.int64)
    for e in range(m):
        for a in range(n):
            if inc[e, a] == 1:
                for b in range(n):
                    if b != a and inc[e, b] == 1:
                        adj[a, b] += 1
    pred = np.full(n, -1, dtype=np.int64)
    visited = np.zeros(n, dtype=np.uint8)
    seen = np.zeros(m, dtype=np.uint8)
    queue = np.zeros(n, dtype=np.int64)
    parent_edge = np.zeros(n, dtype=np.int64)
    ms_stack = np.full((n + 1, n), -1, dtype=np.int64)
    me_stack = np.full((n + 1, m), -1, dtype=np.int64)
    cands = np.zeros((n + 1, n), dtype=np.int64)
    ncand = np.zeros(n + 1, dtype=np.int64)
    cptr = np.zeros(n + 1, dtype=np.int64)
    path = np.full(n, -1, dtype=np.int64)

    path[0] = start
    visited[start] = 1
    depth = 0
    nodes = 0
    # upper bound on vertices in any start->target path
    cap = n if m + 1 > n else m + 1

    k = 0
    for b in range(n):
        if b != start and adj[start, b] > 0:
            cands[0, k] = b
            k += 1
    ncand[0] = k
    cptr[0] = 0
    while depth >= 0:
        if best == cap:
            break
        # depth + 1 placed, depth edges used; each new vertex costs one fresh edge
        extra = n - depth - 1
        if m - depth < extra:
            extra = m - depth
        if cptr[depth] >= ncand[depth] or depth + 1 + extra <= best:
            if depth == 0:
                break
            last = path[depth]
            visited[last] = 0
            pred[last] = -1
            path[depth] = -1
            depth -= 1
            continue
        b = cands[depth, cptr[depth]]
        cptr[depth] += 1
        nodes += 1
        if max_nodes > 0 and nodes > max_nodes:
            return best, best_path, best_edges, nodes, False
        a = path[depth]
        ms = ms_stack[depth + 1]
        me = me_stack[depth + 1]
        ms[:] = ms_stack[depth]
        me[:] = me_stack[depth]
        pred[b] = a
        if not _reassign(inc, pred, ms, me, b, seen, queue, parent_edge):
            pred[b] = -1
            continue
        placed = depth + 2
        if b == target:
            if placed > best:
                best = placed
                best_path[:] = -1
                best_edges[:] = -1
                for i in range(depth + 1):
                    best_path[i] = path[i]
                best_path[depth + 1] = b
                for v in range(n):
                    best_edges[v] = ms[v]
            pred[b] = -1
            continue
        visited[b] = 1
        depth += 1
        path[depth] = b
        k = 0
        for c in range(n):
            if visited[c] == 0 and adj[b, c] > 0:
                cands[depth, k] = c
                k += 1
        ncand[depth] = k
        cptr[depth] = 0
    return best, best_path, best_edges, nodes, True


@njit
def pair_verdicts(inc, prune, stop_at_failure):
    """Hamiltonian path search over all pairs x < y.

    Returns an (n, n) int8 matrix holding FOUND / REFUTED in the upper
    triangle and -1 where a pair was skipped after an early stop.
    """
    n = inc.shape[1]
    out = np.full((n, n), -1, dtype=np.int8)
    for x in range(n):
        for y in range(x + 1, n):
            status, _, _, _ = hamiltonian_search(inc, x, y, prune, True, 0)
            out[x, y] = status
            if stop_at_failure and status != FOUND:
                return out
    return out
