"""Slow, independent reference implementations used by the verification suites.

Nothing here calls the kernels or the core-graph code; each oracle works
directly from the presentation <x_1..x_n | x_i^2>.
"""

from __future__ import annotations

from itertools import product as iproduct


def naive_reduce(seq) -> tuple[int, ...]:
    """Delete the leftmost cancelling pair until none is left."""
    out = list(seq)
    changed = True
    while changed:
        changed = False
        for k in range(len(out) - 1):
            if out[k] == out[k + 1]:
                del out[k : k + 2]
                changed = True
                break
    return tuple(out)


def naive_product(*words) -> tuple[int, ...]:
    seq: list[int] = []
    for w in words:
        seq.extend(w)
    return naive_reduce(seq)


def reduced_words(n: int, max_len: int):
    """All reduced words of length <= max_len, shortest first."""
    out = [()]
    layer = [()]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for a in range(1, n + 1):
                if not w or w[-1] != a:
                    nxt.append(w + (a,))
        out.extend(nxt)
        layer = nxt
    return out


class ConjugacyOracle:
    """Conjugacy classes of short words as components of a finite graph.

    Vertices are reduced words of length <= max_len; u is joined to
    x_i u x_i whenever that is still short.  Any two conjugate words of
    length <= L are joined by a path through words of length <= L (strip
    matching end letters, then rotate), so the components are exact.
    """

    def __init__(self, n: int, max_len: int):
        self.n = n
        self.max_len = max_len
        words = reduced_words(n, max_len)
        index = {w: k for k, w in enumerate(words)}
        parent = list(range(len(words)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for w, k in index.items():
            for a in range(1, n + 1):
                v = naive_reduce((a,) + w + (a,))
                j = index.get(v)
                if j is not None:
                    ra, rb = find(k), find(j)
                    if ra != rb:
                        parent[ra] = rb
        self._index = index
        self._root = [find(k) for k in range(len(words))]

    def conjugate(self, u, v) -> bool:
        u, v = tuple(u), tuple(v)
        if max(len(u), len(v)) > self.max_len:
            raise ValueError("word longer than the oracle's range")
        return self._root[self._index[u]] == self._root[self._index[v]]


def brute_conjugator(n: int, u, v, max_len: int):
    """Search g of length <= max_len with g u g^-1 = v."""
    u, v = tuple(u), tuple(v)
    for g in reduced_words(n, max_len):
        if naive_product(g, u, g[::-1]) == v:
            return g
    return None


class CosetOracle:
    """Truncated coset enumeration for a subgroup H of W_n.

    The coset table is kept involutive (so the relators x_i^2 hold at every
    coset), each subgroup generator is scanned once at coset 1 with
    coincidences processed in the usual way; cosets within ``depth`` of
    coset 1 are then defined on demand.  Membership is exact for words no
    longer than ``depth``: the Schreier graph of H is the scanned part plus
    trees, and on-demand definitions reproduce those trees.
    """

    def __init__(self, n: int, gens, depth: int = 12):
        self.n = n
        self.depth = depth
        self.table: dict[int, dict[int, int]] = {1: {}}
        self.alias: dict[int, int] = {}
        self.next_coset = 2
        for g in gens:
            self._scan(tuple(g))

    def _rep(self, c: int) -> int:
        while c in self.alias:
            c = self.alias[c]
        return c

    def _new(self) -> int:
        c = self.next_coset
        self.next_coset += 1
        self.table[c] = {}
        return c

    def _define(self, c: int, a: int, d: int):
        self.table[c][a] = d
        self.table[d][a] = c

    def _coincide(self, c: int, d: int):
        queue = [(c, d)]
        while queue:
            c, d = queue.pop()
            c, d = self._rep(c), self._rep(d)
            if c == d:
                continue
            if c > d:
                c, d = d, c
            # d is absorbed into c
            self.alias[d] = c
            row = self.table.pop(d)
            for a, e in row.items():
                e = self._rep(e) if e != d else c
                other = self.table.get(e)
                if other is not None and other.get(a) == d:
                    del other[a]
                existing = self.table[c].get(a)
                if existing is None:
                    self._define(c, a, e)
                else:
                    queue.append((existing, e))

    def _scan(self, word):
        if not word:
            return
        c = 1
        for a in word[:-1]:
            c = self._rep(c)
            d = self.table[c].get(a)
            if d is None:
                d = self._new()
                self._define(c, a, d)
            c = d
        c = self._rep(c)
        a = word[-1]
        # close the loop: c . a must be coset 1
        d = self.table[c].get(a)
        if d is not None:
            self._coincide(d, 1)
            return
        e = self.table[1].get(a)
        if e is None:
            self._define(c, a, 1)
        else:
            self._coincide(c, e)

    def contains(self, word) -> bool:
        """Trace from coset 1, defining missing cosets on the way.

        Away from the scanned part only the relators x_i^2 act, and an
        involutive table satisfies them, so no coincidence can follow a
        definition made here: the cosets met are exactly those of the
        depth-bounded region along this word.
        """
        word = tuple(word)
        if len(word) > self.depth:
            raise ValueError("word longer than the enumerated region")
        c = 1
        for a in word:
            c = self._rep(c)
            d = self.table[c].get(a)
            if d is None:
                d = self._new()
                self._define(c, a, d)
            c = d
        return self._rep(c) == 1


def exponent_vectors(m: int, max_l1: int):
    """Integer vectors of length m with l1 norm <= max_l1."""
    rng = range(-max_l1, max_l1 + 1)
    for e in iproduct(rng, repeat=m):
        if sum(abs(x) for x in e) <= max_l1:
            yield e
