"""Pure-Python hot loops.

Letters are 1-based generator indices.  A transition table is a flat list of
length ``nv * nl``; entry ``v * nl + (a - 1)`` is the a-neighbour of vertex v,
or -1 when undefined.  A self-reference is an a-loop.

The compiled twin in ``_ckernels.pyx`` implements exactly the same functions.
"""


def reduce_letters(seq):
    out = []
    for a in seq:
        if out and out[-1] == a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def concat_reduce(a, b):
    # both inputs already reduced, so cancellation only happens at the seam
    i = len(a)
    j = 0
    m = len(b)
    while i > 0 and j < m and a[i - 1] == b[j]:
        i -= 1
        j += 1
    return tuple(a[:i]) + tuple(b[j:])


def fold(nverts, nl, edges):
    """Fold the graph on ``nverts`` vertices with labelled edges ``(u, a, v)``.

    Returns ``(count, table)`` where vertex 0 keeps index 0 and the other
    surviving vertices are renumbered in increasing order of their old index.
    """
    parent = list(range(nverts))
    table = [-1] * (nverts * nl)
    queue = list(edges)

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def merge(x, y):
        keep, drop = (x, y) if x < y else (y, x)
        row = drop * nl
        moved = []
        for c in range(nl):
            t = table[row + c]
            if t < 0:
                continue
            table[row + c] = -1
            t = find(t)
            if t != drop:
                back = table[t * nl + c]
                if back >= 0 and find(back) == drop:
                    table[t * nl + c] = -1
            moved.append((c, t))
        parent[drop] = keep
        for c, t in moved:
            queue.append((keep, c + 1, keep if t == drop else t))

    while queue:
        u, a, v = queue.pop()
        c = a - 1
        u = find(u)
        v = find(v)
        x = table[u * nl + c]
        if x >= 0:
            x = find(x)
            if x != v:
                merge(x, v)
            continue
        y = table[v * nl + c]
        if y >= 0:
            y = find(y)
            if y != u:
                merge(y, u)
                continue
        table[u * nl + c] = v
        table[v * nl + c] = u

    reps = [v for v in range(nverts) if find(v) == v]
    index = {v: k for k, v in enumerate(reps)}
    out = [-1] * (len(reps) * nl)
    for k, v in enumerate(reps):
        for c in range(nl):
            t = table[v * nl + c]
            if t >= 0:
                out[k * nl + c] = index[find(t)]
    return len(reps), out


def trace(table, nl, start, word):
    v = start
    for a in word:
        v = table[v * nl + a - 1]
        if v < 0:
            return -1
    return v


def bfs_order(table, nv, nl, start):
    order = [start]
    seen = [False] * nv
    seen[start] = True
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        for c in range(nl):
            t = table[v * nl + c]
            if t >= 0 and not seen[t]:
                seen[t] = True
                order.append(t)
    return order


def bfs_code(table, nv, nl, start):
    order = bfs_order(table, nv, nl, start)
    label = [-1] * nv
    for k, v in enumerate(order):
        label[v] = k
    code = [len(order)]
    for v in order:
        for c in range(nl):
            t = table[v * nl + c]
            code.append(label[t] + 1 if t >= 0 else 0)
    return tuple(code)


def min_code(table, nv, nl):
    best = None
    best_start = -1
    for s in range(nv):
        code = bfs_code(table, nv, nl, s)
        if best is None or code < best:
            best = code
            best_start = s
    return best, best_start
