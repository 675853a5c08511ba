"""Free splittings of W_n as trees of groups with trivial edge groups.

A W_k-star is recorded up to equivalence by its set of corank-1 factor
classes: collapsing every edge but the one at leaf m leaves the one-edge
splitting A_m * <leaf_m>, and the classes [A_m] determine the star.  Trees
(``SplittingTree``) are kept as witnesses only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import aut as _aut
from .aut import Automorphism, apply, compose
from .subgroup import (
    CoreGraph,
    FreeFactorClass,
    class_from_hex,
    complement_in,
    complement_leaf,
    conjugate_by,
    conjugate_into,
    conjugate_subgroups,
    core_from_generators,
    equal_subgroups,
    factor_class,
    intersect,
    is_free_factor,
    is_full,
    join,
    kurosh_signature,
    member,
    missing_letter,
    standardize_basis,
)
from .word import RankError, Word, are_conjugate, as_involution, format_word, inverse, parse_word, product


class SplittingTree:
    """A finite tree with a tuple of involution generators at each vertex.

    ``marking`` (optional) is an automorphism phi with
    phi(x_a) = groups[v][k] for a = letters[v][k]; it is found by basis
    standardization when first needed.
    """

    __slots__ = ("n", "groups", "edges", "_marking", "_letters")

    def __init__(self, n: int, groups, edges, marking: Automorphism | None = None, letters=None):
        self.n = n
        self.groups = tuple(tuple(g) for g in groups)
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        self._marking = marking
        self._letters = None if letters is None else tuple(tuple(x) for x in letters)

    def __repr__(self):
        parts = ["<" + ",".join(format_word(w) for w in g) + ">" for g in self.groups]
        return f"SplittingTree(n={self.n}, groups=[{', '.join(parts)}], edges={list(self.edges)})"

    def __eq__(self, other):
        return isinstance(other, SplittingTree) and (self.n, self.groups, self.edges) == (
            other.n,
            other.groups,
            other.edges,
        )

    def __hash__(self):
        return hash((self.n, self.groups, self.edges))

    @property
    def nverts(self) -> int:
        return len(self.groups)

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def side(self, edge: int, vertex: int) -> frozenset:
        """Vertices reachable from ``vertex`` without crossing ``edge``."""
        seen = {vertex}
        queue = deque([vertex])
        while queue:
            x = queue.popleft()
            for k, (a, b) in enumerate(self.edges):
                if k == edge:
                    continue
                y = b if a == x else a if b == x else None
                if y is not None and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def all_generators(self) -> list[Word]:
        return [w for g in self.groups for w in g]

    def marking_and_letters(self):
        if self._marking is None:
            phi, lets = standardize_basis(self.all_generators())
            out, k = [], 0
            for g in self.groups:
                out.append(tuple(lets[k : k + len(g)]))
                k += len(g)
            self._marking, self._letters = phi, tuple(out)
        return self._marking, self._letters

    def center(self) -> int:
        """The center vertex of a star-shaped tree."""
        nv = self.nverts
        if nv == 2:
            return 0 if len(self.groups[0]) >= len(self.groups[1]) else 1
        for v in range(nv):
            if self.degree(v) == nv - 1:
                return v
        raise ValueError("tree is not star-shaped")


def _word_list(ws) -> tuple[Word, ...]:
    return tuple(w.word if hasattr(w, "core_letter") else w for w in ws)


def standard_star(n: int, center: Iterable[int]) -> SplittingTree:
    """Center <x_i : i in center> with one leaf <x_j> for each j outside it."""
    center = sorted(set(center))
    if any(not 1 <= i <= n for i in center):
        raise ValueError(f"center letters must lie in 1..{n}")
    if len(center) >= n:
        raise ValueError("a star needs at least one leaf: |I| = n gives no splitting")
    leaves = [j for j in range(1, n + 1) if j not in center]
    groups = [tuple(Word(n, (i,)) for i in center)]
    letters = [tuple(center)]
    for j in leaves:
        groups.append((Word(n, (j,)),))
        letters.append((j,))
    edges = [(0, v) for v in range(1, len(groups))]
    return SplittingTree(n, groups, edges, _aut.identity(n), letters)


def act_tree(f: Automorphism, tree: SplittingTree) -> SplittingTree:
    if f.n != tree.n:
        raise RankError(f"rank mismatch: {f.n} vs {tree.n}")
    groups = [tuple(apply(f, w) for w in g) for g in tree.groups]
    marking = None if tree._marking is None else compose(f, tree._marking)
    return SplittingTree(tree.n, groups, tree.edges, marking, tree._letters)


def collapse(tree: SplittingTree, edges: Iterable[int]) -> SplittingTree:
    """Collapse the given edges, merging vertex groups along them."""
    drop = set(edges)
    if any(not 0 <= e < len(tree.edges) for e in drop):
        raise ValueError("edge index out of range")
    if len(drop) >= len(tree.edges):
        raise ValueError("collapsing every edge leaves a point, not a splitting")
    parent = list(range(tree.nverts))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in sorted(drop):
        a, b = tree.edges[e]
        ra, rb = find(a), find(b)
        parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(v) for v in range(tree.nverts)})
    index = {r: k for k, r in enumerate(roots)}
    groups: list[list] = [[] for _ in roots]
    letters: list[list] = [[] for _ in roots]
    _, lets = (tree._marking, tree._letters) if tree._marking is not None else (None, None)
    for v in range(tree.nverts):
        groups[index[find(v)]].extend(tree.groups[v])
        if lets is not None:
            letters[index[find(v)]].extend(lets[v])
    new_edges = [(index[find(a)], index[find(b)]) for k, (a, b) in enumerate(tree.edges) if k not in drop]
    return SplittingTree(tree.n, groups, new_edges, tree._marking, letters if lets is not None else None)


def blow_up(tree: SplittingTree, vertex: int, moved: Sequence[int]) -> SplittingTree:
    """Split ``vertex`` into two joined by a new edge.

    The neighbors in ``moved`` are reattached to a new vertex with trivial
    group; both halves must keep degree >= 3 when their group is trivial.
    """
    nbrs = tree.neighbors(vertex)
    moved = list(moved)
    if not set(moved) <= set(nbrs):
        raise ValueError("moved vertices must be neighbors of the blown-up vertex")
    if len(moved) < 2 or (not tree.groups[vertex] and len(nbrs) - len(moved) < 2):
        raise ValueError("blow-up would create a trivial vertex of degree < 3")
    new = tree.nverts
    edges = []
    for a, b in tree.edges:
        if a == vertex and b in moved:
            edges.append((new, b))
        elif b == vertex and a in moved:
            edges.append((a, new))
        else:
            edges.append((a, b))
    edges.append((vertex, new))
    letters = None if tree._letters is None else tree._letters + ((),)
    return SplittingTree(tree.n, tree.groups + ((),), edges, tree._marking, letters)


def maximal_blowup(tree: SplittingTree) -> SplittingTree:
    """Blow up trivial vertices until every trivial vertex has degree 3."""
    while True:
        for v in range(tree.nverts):
            nbrs = tree.neighbors(v)
            if not tree.groups[v] and len(nbrs) >= 4:
                tree = blow_up(tree, v, nbrs[:2])
                break
        else:
            return tree


# -- validation ------------------------------------------------------------


@dataclass
class ValidationReport:
    ok: bool
    message: str = ""
    vertex: int | None = None

    def __bool__(self):
        return self.ok


def validate(tree: SplittingTree) -> ValidationReport:
    n = tree.n
    nv = tree.nverts
    if nv == 0:
        return ValidationReport(False, "empty tree")
    if not tree.edges:
        return ValidationReport(False, "tree is a point")
    if len(tree.edges) != nv - 1:
        return ValidationReport(False, f"{len(tree.edges)} edges on {nv} vertices is not a tree")
    for a, b in tree.edges:
        if not (0 <= a < nv and 0 <= b < nv) or a == b:
            return ValidationReport(False, f"bad edge ({a}, {b})")
    if len(tree.side(-1, 0)) != nv:
        return ValidationReport(False, "graph is not connected")
    for v in range(nv):
        if not tree.groups[v] and tree.degree(v) < 3:
            return ValidationReport(False, f"vertex {v} has trivial group and degree {tree.degree(v)} < 3", v)
    classes = []
    for v, g in enumerate(tree.groups):
        for w in g:
            if w.n != n:
                return ValidationReport(False, f"vertex {v}: rank mismatch", v)
            t = as_involution(w)
            if t is None:
                return ValidationReport(False, f"vertex {v}: {format_word(w)} is not an involution", v)
            classes.append(t.core_letter)
    if sorted(classes) != list(range(1, n + 1)):
        return ValidationReport(False, f"generator classes {sorted(classes)} are not 1..{n} once each")
    for v, g in enumerate(tree.groups):
        if not g:
            continue
        verdict = is_free_factor(core_from_generators(n, g))
        if verdict.status != "yes":
            return ValidationReport(False, f"vertex {v}: group is not a free factor ({verdict.status})", v)
    if not is_full(core_from_generators(n, tree.all_generators())):
        return ValidationReport(False, "vertex groups do not generate W_n")
    return ValidationReport(True, "valid")


# -- star classes ----------------------------------------------------------


@dataclass(frozen=True)
class StarClass:
    """Equivalence class of a W_k-star, keyed by its sorted corank-1 classes."""

    n: int
    k: int
    corank1: tuple[FreeFactorClass, ...]
    witness: SplittingTree | None = field(default=None, compare=False, hash=False, repr=False)

    @property
    def codes(self) -> tuple[bytes, ...]:
        return tuple(c.code for c in self.corank1)

    def sort_key(self):
        return (self.k, self.codes)

    def to_json(self, with_witness: bool = False) -> dict:
        d = {"rank": self.n, "k": self.k, "corank1": [c.hex() for c in self.corank1]}
        if with_witness and self.witness is not None:
            d["witness"] = tree_to_json(self.witness)
        return d


def make_star_class(n: int, classes: Iterable[FreeFactorClass], witness=None) -> StarClass:
    cs = tuple(sorted(set(classes), key=lambda c: c.code))
    return StarClass(n, n - len(cs), cs, witness)


def star_class(tree: SplittingTree) -> StarClass:
    n = tree.n
    c = tree.center()
    nv = tree.nverts
    leaves = [v for v in range(nv) if v != c]
    if nv > 2 and any(tree.degree(v) != 1 for v in leaves):
        raise ValueError("tree is not star-shaped")
    if any(len(tree.groups[v]) != 1 for v in leaves):
        raise ValueError("star leaves must carry a single involution")
    classes = []
    for m in leaves:
        gens = [w for v in range(nv) if v != m for w in tree.groups[v]]
        classes.append(factor_class(core_from_generators(n, gens)))
    k = len(tree.groups[c])
    out = make_star_class(n, classes, tree)
    if out.k != k:
        raise ValueError("corank-1 classes of the star are not distinct")
    return out


def act(f: Automorphism, s: StarClass) -> StarClass:
    if f.n != s.n:
        raise RankError(f"rank mismatch: {f.n} vs {s.n}")
    classes = [factor_class(core_from_generators(s.n, [apply(f, w) for w in c.gens])) for c in s.corank1]
    witness = None if s.witness is None else act_tree(f, s.witness)
    return make_star_class(s.n, classes, witness)


def star_from_json(d: dict) -> StarClass:
    n = int(d["rank"])
    classes = [class_from_hex(h) for h in d["corank1"]]
    if any(c.n != n for c in classes):
        raise RankError("corank-1 code rank differs from star rank")
    out = make_star_class(n, classes)
    if "k" in d and int(d["k"]) != out.k:
        raise ValueError("k does not match the number of corank-1 classes")
    if "witness" in d:
        tree = tree_from_json(d["witness"])
        if star_class(tree) != out:
            raise ValueError("witness tree does not match the corank-1 classes")
        out = StarClass(out.n, out.k, out.corank1, tree)
    return out


# -- compatibility and refinement ------------------------------------------


def _leaf_of(core: CoreGraph) -> tuple[int, Word]:
    return missing_letter(core), complement_leaf(core)


def compatible_one_edge(a: FreeFactorClass, b: FreeFactorClass) -> StarClass | None:
    """The W_{n-2}-star refining both one-edge splittings, or None."""
    if a == b:
        return None
    A, A2 = a.core(), b.core()
    n = A.n
    if kurosh_signature(A) != (n - 1, 0) or kurosh_signature(A2) != (n - 1, 0):
        raise ValueError("compatible_one_edge expects corank-1 factors")
    ja, jb = missing_letter(A), missing_letter(A2)
    if ja == jb:
        return None
    t = complement_leaf(A)
    k = conjugate_into(A2, t)
    if k is None:
        return None
    # the unique conjugate of A2 containing t
    A2 = conjugate_by(A2, inverse(k))
    B = intersect(A, A2)
    if kurosh_signature(B) != (n - 2, 0):
        return None
    if not equal_subgroups(join(n, B, [t]), A2):
        return None
    s = complement_in(B, A, jb)
    if s is None:
        raise AssertionError("compatible pair without a complement leaf")
    tree = SplittingTree(n, [B.gens, (t,), (s,)], [(0, 1), (0, 2)])
    out = star_class(tree)
    if set(out.corank1) != {a, b}:
        raise AssertionError("refinement does not collapse onto both inputs")
    return out


def refine(classes: Iterable[FreeFactorClass]) -> StarClass:
    """The star whose corank-1 set is exactly ``classes``.

    Raises ValueError naming an offending pair when the classes are not
    pairwise compatible.
    """
    cs = sorted(set(classes), key=lambda c: c.code)
    if not cs:
        raise ValueError("refine needs at least one class")
    n = cs[0].n
    if len(cs) > n:
        raise ValueError("at most n corank-1 classes can be refined")
    cores = [c.core() for c in cs]
    for c, core in zip(cs, cores):
        if kurosh_signature(core) != (n - 1, 0):
            raise ValueError(f"class {c.hex()} is not corank-1")
    A1 = cores[0]
    j1, t1 = _leaf_of(A1)
    if len(cs) == 1:
        tree = SplittingTree(n, [A1.gens, (t1,)], [(0, 1)])
        return star_class(tree)
    js = [j1]
    Bs = []
    for l in range(1, len(cs)):
        jl = missing_letter(cores[l])
        if jl in js:
            raise ValueError(f"incompatible pair: classes 0 and {l} miss the same generator class")
        js.append(jl)
        k = conjugate_into(cores[l], t1)
        if k is None:
            raise ValueError(f"incompatible pair: classes 0 and {l}")
        Al = conjugate_by(cores[l], inverse(k))
        Bl = intersect(A1, Al)
        if kurosh_signature(Bl) != (n - 2, 0) or not equal_subgroups(join(n, Bl, [t1]), Al):
            raise ValueError(f"incompatible pair: classes 0 and {l}")
        Bs.append(Bl)
    m = len(cs)
    C = Bs[0]
    for Bl in Bs[1:]:
        C = intersect(C, Bl)
    if kurosh_signature(C) != (n - m, 0):
        raise ValueError("classes are not jointly compatible (center has the wrong rank)")
    leaves = [t1]
    for idx in range(len(Bs)):
        D = A1
        for other, Bo in enumerate(Bs):
            if other != idx:
                D = Bo if D is A1 else intersect(D, Bo)
        s = complement_in(C, D, js[idx + 1])
        if s is None:
            raise ValueError(f"no leaf found for class {idx + 1}; classes are not jointly compatible")
        leaves.append(s)
    groups = [tuple(C.gens)] + [(s,) for s in leaves]
    tree = SplittingTree(n, groups, [(0, v) for v in range(1, m + 1)])
    if not is_full(core_from_generators(n, tree.all_generators())):
        raise ValueError("refinement pieces do not generate W_n; classes are not jointly compatible")
    out = star_class(tree)
    if out.corank1 != tuple(cs):
        raise ValueError("refinement does not reproduce the input classes")
    return out


def is_compatible(s: StarClass, t: StarClass) -> bool:
    """Pairwise compatibility of the union of the two corank-1 sets."""
    union = sorted(set(s.corank1) | set(t.corank1), key=lambda c: c.code)
    if len(union) > s.n:
        return False
    for x in range(len(union)):
        for y in range(x + 1, len(union)):
            if compatible_one_edge(union[x], union[y]) is None:
                return False
    return True


def refines(s: StarClass, t: StarClass) -> bool:
    """s refines t: t is obtained from s by collapsing edges."""
    return set(t.corank1) <= set(s.corank1)


def one_edge_star(c: FreeFactorClass) -> StarClass:
    return refine([c])


def collapse_to(s: StarClass, c: FreeFactorClass) -> StarClass:
    """The one-edge collapse of the star's witness onto the leaf of class c."""
    if c not in s.corank1:
        raise ValueError("class is not a corank-1 factor of the star")
    tree = s.witness if s.witness is not None else refine(s.corank1).witness
    center = tree.center()
    for e, (a, b) in enumerate(tree.edges):
        leaf = b if a == center else a
        gens = [w for v in range(tree.nverts) if v != leaf for w in tree.groups[v]]
        if factor_class(core_from_generators(s.n, gens)) == c:
            keep = e
            break
    else:
        raise AssertionError("no edge of the witness carries the class")
    return star_class(collapse(tree, [e for e in range(len(tree.edges)) if e != keep]))


def equivalent_one_edge(t1: SplittingTree, t2: SplittingTree) -> bool:
    """Decide equivalence of two one-edge splittings A_i * <s_i> directly.

    The trees are equivariantly isomorphic iff some g carries A_1 onto A_2
    and g s_1 g^-1 is an A_2-conjugate of s_2.
    """
    n = t1.n

    def pieces(t):
        if len(t.edges) != 1:
            raise ValueError("expected a one-edge splitting")
        c = t.center()
        return core_from_generators(n, t.groups[c]), t.groups[1 - c][0]

    A1, s1 = pieces(t1)
    A2, s2 = pieces(t2)
    g = conjugate_subgroups(A1, A2)
    if g is None:
        return False
    s = product(n, (g, s1, inverse(g)))
    c = are_conjugate(s2, s)
    if c is None:
        return False
    return member(A2, c) or member(A2, product(n, (c, s2)))


# -- free factor systems ---------------------------------------------------


@dataclass(frozen=True)
class FreeFactorSystem:
    n: int
    factors: tuple[FreeFactorClass, ...]

    def __post_init__(self):
        total = sum(f.signature[0] for f in self.factors)
        if total != self.n or any(f.signature[1] for f in self.factors):
            raise ValueError("factor signatures do not add up to a free factor system of W_n")


def ffs_of(tree: SplittingTree) -> FreeFactorSystem:
    fs = [factor_class(core_from_generators(tree.n, g)) for g in tree.groups if g]
    return FreeFactorSystem(tree.n, tuple(sorted(fs, key=lambda c: c.code)))


def standard_ffs(n: int, blocks: Iterable[Iterable[int]]) -> FreeFactorSystem:
    fs = [factor_class(core_from_generators(n, [Word(n, (i,)) for i in b])) for b in blocks]
    return FreeFactorSystem(n, tuple(sorted(fs, key=lambda c: c.code)))


def _conjugate_into_factor(a: FreeFactorClass, b: FreeFactorClass) -> Word | None:
    """g with g A g^-1 inside B (one common witness for all generators)."""
    n = a.n
    gens = list(a.gens)
    t = as_involution(gens[0]) if gens else None
    if t is None:
        return None
    B = b.core()
    j = t.core_letter
    for v, letter in B.loops():
        if letter != j:
            continue
        g0 = product(n, (B.path(v), inverse(t.conjugator)))
        for g in (g0, product(n, (g0, gens[0]))):
            gi = inverse(g)
            if all(member(B, product(n, (g, w, gi))) for w in gens):
                return g
    return None


def ffs_leq(f: FreeFactorSystem, g: FreeFactorSystem) -> bool:
    """Every factor of f is conjugate into some factor of g."""
    if f.n != g.n:
        raise RankError(f"rank mismatch: {f.n} vs {g.n}")
    return all(any(_conjugate_into_factor(a, b) is not None for b in g.factors) for a in f.factors)


# -- export ----------------------------------------------------------------


def tree_to_json(tree: SplittingTree) -> dict:
    return {
        "rank": tree.n,
        "vertices": [{"id": v, "group": [format_word(w) for w in g]} for v, g in enumerate(tree.groups)],
        "edges": [list(e) for e in tree.edges],
    }


def tree_from_json(d: dict) -> SplittingTree:
    n = int(d["rank"])
    verts = sorted(d["vertices"], key=lambda x: int(x["id"]))
    groups = [[parse_word(s, n) for s in v["group"]] for v in verts]
    return SplittingTree(n, groups, [tuple(e) for e in d["edges"]])


def tree_to_dot(tree: SplittingTree, name: str = "splitting") -> str:
    lines = [f"graph {name} {{"]
    for v, g in enumerate(tree.groups):
        label = "<" + ", ".join(format_word(w) for w in g) + ">" if g else "1"
        lines.append(f'  v{v} [label="{label}"];')
    for a, b in tree.edges:
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
