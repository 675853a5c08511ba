"""Graphs whose vertices are star classes: L_n, Y_n, X~_n, X_n and X'_n.

These graphs are locally infinite, so neighborhoods are only ever explored
through ``neighbors_bounded``, which closes a finite pool of corank-1 classes
under Whitehead moves and reports when its budget cut anything off.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .aut import Automorphism, apply, move_images, substitute
from .splitting import (
    StarClass,
    act,
    compatible_one_edge,
    is_compatible,
    make_star_class,
    refine,
    refines,
    star_from_json,
)
from .subgroup import (
    FreeFactorClass,
    class_of,
    core_from_generators,
    factor_class,
    whitehead_moves,
)
from .word import Word


class ComplexKind(str, Enum):
    L = "L"
    Y = "Y"
    XTILDE = "Xtilde"
    X = "X"
    XPRIME = "Xprime"

    @classmethod
    def parse(cls, text: str) -> "ComplexKind":
        for k in cls:
            if k.value.lower() == text.lower():
                return k
        raise ValueError(f"unknown complex {text!r}; expected one of L, Y, Xtilde, X, Xprime")


def admissible(kind: ComplexKind, s: StarClass) -> bool:
    n, k = s.n, s.k
    if kind is ComplexKind.L:
        return k in (0, 1)
    if kind is ComplexKind.Y:
        return k == n - 1
    if kind in (ComplexKind.XTILDE, ComplexKind.X):
        return k == n - 2
    return 0 <= k <= n - 2


def _check_admissible(kind: ComplexKind, *stars: StarClass):
    for s in stars:
        if not admissible(kind, s):
            raise ValueError(f"a W_{s.k}-star is not a vertex of {kind.value} (n={s.n})")


def adjacent(kind: ComplexKind, s: StarClass, t: StarClass) -> bool:
    kind = ComplexKind(kind)
    _check_admissible(kind, s, t)
    if s == t:
        return False
    if kind in (ComplexKind.L, ComplexKind.XPRIME):
        return refines(s, t) or refines(t, s)
    if kind in (ComplexKind.Y, ComplexKind.XTILDE):
        return is_compatible(s, t)
    union = set(s.corank1) | set(t.corank1)
    return len(union) == 3 and is_compatible(s, t)


def _union(stars: Iterable[StarClass]) -> list[FreeFactorClass]:
    out: set = set()
    for s in stars:
        out |= set(s.corank1)
    return sorted(out, key=lambda c: c.code)


def _check_triangle(s1, s2, s3):
    for a, b in ((s1, s2), (s1, s3), (s2, s3)):
        if not adjacent(ComplexKind.X, a, b):
            raise ValueError("the three stars are not pairwise adjacent in X_n")


def triangle_type(s1: StarClass, s2: StarClass, s3: StarClass) -> str:
    """'Wn3' or 'Wn4', the center rank of the minimal common refinement."""
    _check_triangle(s1, s2, s3)
    union = _union((s1, s2, s3))
    ref = refine(union)
    n = s1.n
    if len(union) == 3 and ref.k == n - 3:
        return "Wn3"
    if len(union) == 4 and ref.k == n - 4:
        return "Wn4"
    raise AssertionError("refinement rank disagrees with the corank-1 count")


def _fourth_from_recipe(s1, s2, s3) -> StarClass:
    n = s1.n
    union = _union((s1, s2, s3))
    common = set(s1.corank1) & set(s2.corank1) & set(s3.corank1)
    if len(common) != 1:
        raise AssertionError("a Wn4 triangle shares exactly one corank-1 class")
    (a,) = common
    tree = refine(union).witness
    c = tree.center()
    center = list(tree.groups[c])
    if not center:
        raise ValueError("fourth_vertex needs n >= 5")
    leaves = [tree.groups[v][0] for v in range(tree.nverts) if v != c]
    e = factor_class(core_from_generators(n, center[1:] + leaves))
    return refine([a, e])


def fourth_vertex_candidates(s1: StarClass, s2: StarClass, s3: StarClass, bound: int = 16, depth: int = 1):
    """Stars in the bounded ball around s1 adjacent to all three; plus truncation flag."""
    ball = neighbors_bounded(ComplexKind.X, s1, bound, depth=depth, edges=False)
    found = [
        t
        for t in ball.vertices
        if t not in (s1, s2, s3) and adjacent(ComplexKind.X, t, s2) and adjacent(ComplexKind.X, t, s3)
    ]
    return found, ball.truncated


def fourth_vertex(s1: StarClass, s2: StarClass, s3: StarClass, bound: int = 16, search: bool = True) -> StarClass | None:
    """A fourth star adjacent to all three for Wn4 triangles; None for Wn3.

    For a Wn3 triangle the bounded search (when ``search``) must come back
    empty; a hit would contradict the classification and raises.
    """
    kind = triangle_type(s1, s2, s3)
    if kind == "Wn4":
        s4 = _fourth_from_recipe(s1, s2, s3)
        for s in (s1, s2, s3):
            if s4 == s or not adjacent(ComplexKind.X, s4, s):
                raise AssertionError("fourth vertex recipe failed")
        return s4
    if search:
        found, _ = fourth_vertex_candidates(s1, s2, s3, bound)
        if found:
            raise AssertionError("found a fourth vertex for a Wn3 triangle")
    return None


def triangle_report(s1, s2, s3, bound: int = 16) -> dict:
    kind = triangle_type(s1, s2, s3)
    ref = refine(_union((s1, s2, s3)))
    out = {"type": kind, "refinement_class": ref.to_json()}
    s4 = fourth_vertex(s1, s2, s3, bound)
    if s4 is not None:
        out["fourth_vertex"] = s4.to_json()
    else:
        out["fourth_vertex_search_bound"] = bound
    return out


def simplex_refinement(stars: Sequence[StarClass]) -> StarClass:
    """Refinement of k >= 4 pairwise X_n-adjacent stars; a W_{n-k-1}-star."""
    stars = list(stars)
    k = len(stars)
    if not stars:
        raise ValueError("empty family")
    n = stars[0].n
    if n < 5:
        raise ValueError("simplex_refinement needs n >= 5")
    if k < 4:
        raise ValueError("simplex_refinement needs at least 4 stars")
    if k > n - 2:
        raise ValueError(f"no family of {k} pairwise adjacent stars yields a star when n = {n}")
    for x, y in combinations(range(k), 2):
        if not adjacent(ComplexKind.X, stars[x], stars[y]):
            raise ValueError(f"stars {x} and {y} are not adjacent in X_n")
    out = refine(_union(stars))
    if out.k != n - k - 1:
        raise ValueError(f"refinement is a W_{out.k}-star, expected W_{n - k - 1}")
    return out


# -- bounded balls ---------------------------------------------------------


@dataclass
class BallReport:
    kind: ComplexKind
    center: StarClass | None
    radius: int
    complexity_bound: int
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    truncated: bool = False


def standard_corank1(n: int) -> list[FreeFactorClass]:
    return [class_of(n, [Word(n, (i,)) for i in range(1, n + 1) if i != j]) for j in range(1, n + 1)]


def candidate_pool(n: int, seeds: Iterable[FreeFactorClass], bound: int, depth: int = 1, max_pool: int = 5000):
    """Close the seeds under single Whitehead moves, ``depth`` times.

    Classes whose cyclic core has more than ``bound`` vertices are dropped;
    the second return value says whether anything was dropped.
    """
    moves = whitehead_moves(n)
    imgs = [move_images(n, m) for m in moves]
    pool = {c.code: c for c in seeds}
    frontier = list(pool.values())
    truncated = False
    for _ in range(depth):
        nxt = []
        for c in frontier:
            for im in imgs:
                gens = [Word(n, substitute(im, w.letters)) for w in c.gens]
                d = factor_class(core_from_generators(n, gens))
                if d.code in pool:
                    continue
                if d.complexity() > bound:
                    truncated = True
                    continue
                if len(pool) >= max_pool:
                    truncated = True
                    break
                pool[d.code] = d
                nxt.append(d)
        frontier = nxt
    return sorted(pool.values(), key=lambda c: c.code), truncated


def neighbors_bounded(kind, s: StarClass, complexity: int, depth: int = 1, edges: bool = True) -> BallReport:
    """Neighbors of s built from a bounded pool of corank-1 classes."""
    kind = ComplexKind(kind)
    _check_admissible(kind, s)
    n = s.n
    pool, truncated = candidate_pool(n, list(s.corank1) + standard_corank1(n), complexity, depth)
    own = set(s.corank1)
    compat = [c for c in pool if c not in own and all(compatible_one_edge(a, c) is not None for a in own)]
    cands: dict = {}

    def add(classes):
        classes = list(classes)
        if not classes or len(set(classes)) > n:
            return
        t = make_star_class(n, classes)
        if t != s and admissible(kind, t):
            cands[t] = classes

    if kind is ComplexKind.Y:
        for c in compat:
            add([c])
    elif kind is ComplexKind.X:
        for a in s.corank1:
            for c in compat:
                add([a, c])
    elif kind is ComplexKind.XTILDE:
        base = sorted(own, key=lambda c: c.code) + compat
        for x, y in combinations(base, 2):
            add([x, y])
    else:
        for r in range(1, len(s.corank1)):
            for sub in combinations(s.corank1, r):
                add(sub)
        for c in compat:
            add(list(s.corank1) + [c])
    found = []
    for t, classes in cands.items():
        try:
            t = refine(classes)
        except ValueError:
            continue
        if adjacent(kind, s, t):
            found.append(t)
    verts = [s] + sorted(found, key=StarClass.sort_key)
    report = BallReport(kind, s, 1, complexity, verts, [], truncated)
    if edges:
        report.edges = _edges(kind, verts)
    return report


def _edges(kind, verts):
    out = []
    for x, y in combinations(range(len(verts)), 2):
        if adjacent(kind, verts[x], verts[y]):
            out.append((x, y))
    return out


def ball_from_vertices(kind, stars: Sequence[StarClass], complexity: int = 0) -> BallReport:
    kind = ComplexKind(kind)
    verts = sorted(set(stars), key=StarClass.sort_key)
    return BallReport(kind, verts[0] if verts else None, 0, complexity, verts, _edges(kind, verts), False)


# -- induced maps ----------------------------------------------------------


def intermediates(s: StarClass, s0: FreeFactorClass) -> list[StarClass]:
    """The W_{n-2}-stars {s0, c} for c in corank1(s) other than s0."""
    if s0 not in s.corank1:
        raise ValueError("s0 is not a corank-1 class of s")
    return [refine([s0, c]) for c in s.corank1 if c != s0]


def _refine_images(images: Sequence[StarClass], what: str) -> StarClass:
    for x, y in combinations(range(len(images)), 2):
        if not is_compatible(images[x], images[y]):
            raise ValueError(f"{what}: images {x} and {y} are not compatible")
    return refine(_union(images))


def induced_image_X_to_Xprime(s: StarClass, s0: FreeFactorClass, images: Mapping[StarClass, StarClass]) -> StarClass:
    """Image of s from the images of its intermediate W_{n-2}-stars."""
    inter = intermediates(s, s0)
    missing = [t for t in inter if t not in images]
    if missing:
        raise ValueError("images must be given for every intermediate star")
    imgs = [images[t] for t in inter]
    n = s.n
    if s.k == n - 4:
        a, b, c = imgs
        for x, y in ((a, b), (a, c), (b, c)):
            if not adjacent(ComplexKind.X, x, y):
                raise ValueError("X->X': image stars are not pairwise adjacent")
        if triangle_type(a, b, c) != "Wn4":
            raise ValueError("X->X': image triangle is of type Wn3, no common W_{n-4}-star")
    out = _refine_images(imgs, "X->X'")
    if out.k != s.k:
        raise ValueError(f"X->X': images refine to a W_{out.k}-star, expected W_{s.k}")
    return out


def induced_image_Y_to_L(images: Sequence[StarClass]) -> StarClass:
    """The {0}-star refining n pairwise compatible one-edge stars."""
    out = _refine_images(list(images), "Y->L")
    if out.k != 0:
        raise ValueError(f"Y->L: images refine to a W_{out.k}-star, not a {{0}}-star")
    return out


def induced_permutation(f: Automorphism, s: StarClass) -> tuple[int, ...] | None:
    """Permutation of corank1(s) induced by f, or None if f moves the class."""
    image = act(f, s)
    if image != s:
        return None
    codes = list(s.codes)
    out = []
    for c in s.corank1:
        d = factor_class(core_from_generators(s.n, [apply(f, w) for w in c.gens]))
        out.append(codes.index(d.code))
    return tuple(out)


# -- export ----------------------------------------------------------------


def _label(s: StarClass) -> str:
    return f"W{s.k}:" + "|".join(c.hex() for c in s.corank1)


def export(kind, ball: BallReport, fmt: str = "json") -> str:
    kind = ComplexKind(kind)
    if fmt == "dot":
        lines = [f"graph {kind.value} {{"]
        for i, v in enumerate(ball.vertices):
            lines.append(f'  s{i} [label="{_label(v)}"];')
        for x, y in ball.edges:
            lines.append(f"  s{x} -- s{y};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "kind": kind.value,
            "radius": ball.radius,
            "complexity_bound": ball.complexity_bound,
            "truncated": ball.truncated,
            "vertices": [v.to_json() for v in ball.vertices],
            "edges": [list(e) for e in ball.edges],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected dot or json")


def ball_from_json(text: str) -> BallReport:
    d = json.loads(text)
    kind = ComplexKind(d["kind"])
    verts = [star_from_json(v) for v in d["vertices"]]
    return BallReport(
        kind,
        verts[0] if verts else None,
        int(d["radius"]),
        int(d["complexity_bound"]),
        verts,
        [tuple(e) for e in d["edges"]],
        bool(d["truncated"]),
    )
