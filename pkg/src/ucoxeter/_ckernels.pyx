# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``; same functions, same conventions."""

from libc.stdlib cimport malloc, free


def reduce_letters(seq):
    cdef Py_ssize_t m = len(seq)
    cdef int *buf = <int *> malloc((m + 1) * sizeof(int))
    cdef Py_ssize_t top = 0
    cdef int a
    if buf == NULL:
        raise MemoryError()
    try:
        for x in seq:
            a = x
            if top > 0 and buf[top - 1] == a:
                top -= 1
            else:
                buf[top] = a
                top += 1
        return tuple([buf[k] for k in range(top)])
    finally:
        free(buf)


def concat_reduce(tuple a, tuple b):
    cdef Py_ssize_t i = len(a)
    cdef Py_ssize_t j = 0
    cdef Py_ssize_t m = len(b)
    while i > 0 and j < m and <int> a[i - 1] == <int> b[j]:
        i -= 1
        j += 1
    return a[:i] + b[j:]


cdef inline int _find(int *parent, int x):
    cdef int root = x
    cdef int nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def fold(int nverts, int nl, edges):
    cdef int *parent = <int *> malloc(max(nverts, 1) * sizeof(int))
    cdef int *table = <int *> malloc(max(nverts * nl, 1) * sizeof(int))
    cdef int k, c, u, v, x, y, t, keep, drop, back
    queue = list(edges)
    if parent == NULL or table == NULL:
        free(parent)
        free(table)
        raise MemoryError()
    try:
        for k in range(nverts):
            parent[k] = k
        for k in range(nverts * nl):
            table[k] = -1
        while queue:
            u, a, v = queue.pop()
            c = a - 1
            u = _find(parent, u)
            v = _find(parent, v)
            x = table[u * nl + c]
            if x >= 0:
                x = _find(parent, x)
                if x != v:
                    keep, drop = (x, v) if x < v else (v, x)
                    _merge(parent, table, nl, keep, drop, queue)
                continue
            y = table[v * nl + c]
            if y >= 0:
                y = _find(parent, y)
                if y != u:
                    keep, drop = (y, u) if y < u else (u, y)
                    _merge(parent, table, nl, keep, drop, queue)
                    continue
            table[u * nl + c] = v
            table[v * nl + c] = u

        reps = [k for k in range(nverts) if _find(parent, k) == k]
        index = {r: i for i, r in enumerate(reps)}
        out = [-1] * (len(reps) * nl)
        for i, r in enumerate(reps):
            for c in range(nl):
                t = table[r * nl + c]
                if t >= 0:
                    out[i * nl + c] = index[_find(parent, t)]
        return len(reps), out
    finally:
        free(parent)
        free(table)


cdef void _merge(int *parent, int *table, int nl, int keep, int drop, list queue):
    cdef int c, t, back
    cdef int row = drop * nl
    moved = []
    for c in range(nl):
        t = table[row + c]
        if t < 0:
            continue
        table[row + c] = -1
        t = _find(parent, t)
        if t != drop:
            back = table[t * nl + c]
            if back >= 0 and _find(parent, back) == drop:
                table[t * nl + c] = -1
        moved.append((c, t))
    parent[drop] = keep
    for c, t in moved:
        queue.append((keep, c + 1, keep if t == drop else t))


def trace(list table, int nl, int start, word):
    cdef int v = start
    cdef int a
    for x in word:
        a = x
        v = table[v * nl + a - 1]
        if v < 0:
            return -1
    return v


def bfs_order(list table, int nv, int nl, int start):
    cdef int *seen = <int *> malloc(max(nv, 1) * sizeof(int))
    cdef int k, v, c, t
    order = [start]
    try:
        for k in range(nv):
            seen[k] = 0
        seen[start] = 1
        k = 0
        while k < len(order):
            v = order[k]
            k += 1
            for c in range(nl):
                t = table[v * nl + c]
                if t >= 0 and not seen[t]:
                    seen[t] = 1
                    order.append(t)
        return order
    finally:
        free(seen)


def bfs_code(list table, int nv, int nl, int start):
    order = bfs_order(table, nv, nl, start)
    cdef int *label = <int *> malloc(max(nv, 1) * sizeof(int))
    cdef int k, v, c, t
    try:
        for k in range(nv):
            label[k] = -1
        for k in range(len(order)):
            label[<int> order[k]] = k
        code = [len(order)]
        for v in order:
            for c in range(nl):
                t = table[v * nl + c]
                code.append(label[t] + 1 if t >= 0 else 0)
        return tuple(code)
    finally:
        free(label)


def min_code(list table, int nv, int nl):
    best = None
    cdef int best_start = -1
    cdef int s
    for s in range(nv):
        code = bfs_code(table, nv, nl, s)
        if best is None or code < best:
            best = code
            best_start = s
    return best, best_start
