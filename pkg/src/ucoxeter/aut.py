"""Automorphisms of W_n given by words in partial conjugations and swaps.

Convention: an automorphism carries a move word (m_1, ..., m_k) and stands for
the composite m_1 o m_2 o ... o m_k, so m_k is applied first.  ``compose(f, g)``
is f o g, i.e. ``apply(compose(f, g), w) == apply(f, apply(g, w))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import kernels
from .word import (
    Involution,
    RankError,
    Word,
    are_conjugate,
    as_involution,
    format_word,
    inverse,
    parse_word,
    product,
)


@dataclass(frozen=True, slots=True)
class PartialConj:
    """x_j -> x_i x_j x_i for j in s; every other generator fixed."""

    s: frozenset
    i: int

    def __post_init__(self):
        if not isinstance(self.s, frozenset):
            object.__setattr__(self, "s", frozenset(self.s))
        if self.i in self.s:
            raise ValueError(f"PartialConj: i={self.i} lies in S={sorted(self.s)}")
        if not self.s:
            raise ValueError("PartialConj: S must be nonempty")


@dataclass(frozen=True, slots=True)
class Swap:
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("Swap needs two distinct letters")


Move = Union[PartialConj, Swap]


def _check_move(n: int, m: Move):
    if isinstance(m, PartialConj):
        letters = set(m.s) | {m.i}
    else:
        letters = {m.i, m.j}
    if not all(1 <= a <= n for a in letters):
        raise ValueError(f"move {m} uses letters outside 1..{n}")


def move_images(n: int, m: Move) -> list[tuple[int, ...]]:
    """Images of x_1..x_n under a single move, as letter tuples (index 0 unused)."""
    imgs: list[tuple[int, ...]] = [()] + [(a,) for a in range(1, n + 1)]
    if isinstance(m, PartialConj):
        for j in m.s:
            imgs[j] = (m.i, j, m.i)
    else:
        imgs[m.i], imgs[m.j] = (m.j,), (m.i,)
    return imgs


def substitute(imgs: Sequence[tuple[int, ...]], letters: Iterable[int]) -> tuple[int, ...]:
    out: tuple[int, ...] = ()
    for a in letters:
        out = kernels.concat_reduce(out, imgs[a])
    return out


class Automorphism:
    """An automorphism of W_n with its move word and cached generator images."""

    __slots__ = ("n", "moves", "images", "_imgs", "_perm")

    def __init__(self, n: int, moves, images: Sequence[Word]):
        self.n = n
        self.moves = None if moves is None else tuple(moves)
        self.images = tuple(images)
        self._imgs = [()] + [w.letters for w in self.images]
        if len(self.images) != n:
            raise ValueError(f"expected {n} images, got {len(self.images)}")
        perm = []
        for w in self.images:
            t = as_involution(w)
            if t is None:
                raise ValueError(f"image {format_word(w)} is not an involution")
            perm.append(t.core_letter)
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError("images do not induce a bijection of generator classes")
        self._perm = tuple(perm)

    def __repr__(self):
        return f"Automorphism(n={self.n}, images=[{', '.join(map(format_word, self.images))}])"

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.n == other.n and self.images == other.images

    def __hash__(self):
        return hash((self.n, self.images))

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def image(self, i: int) -> Word:
        return self.images[i - 1]

    def image_involution(self, i: int) -> Involution:
        return as_involution(self.images[i - 1])

    @property
    def class_perm(self) -> tuple[int, ...]:
        return self._perm

    def is_identity(self) -> bool:
        return all(w.letters == (i + 1,) for i, w in enumerate(self.images))


def identity(n: int) -> Automorphism:
    return Automorphism(n, (), [Word(n, (i,)) for i in range(1, n + 1)])


def from_moves(n: int, moves: Iterable[Move]) -> Automorphism:
    moves = tuple(moves)
    imgs: list[tuple[int, ...]] = [()] + [(a,) for a in range(1, n + 1)]
    # extend on the right: (f o m)(x_i) = f(m(x_i))
    for m in moves:
        _check_move(n, m)
        mi = move_images(n, m)
        imgs = [()] + [substitute(imgs, mi[a]) for a in range(1, n + 1)]
    return Automorphism(n, moves, [Word(n, imgs[a]) for a in range(1, n + 1)])


def make_move(n: int, m: Move) -> Automorphism:
    return from_moves(n, (m,))


def from_images_unchecked(images: Sequence[Word]) -> Automorphism:
    """Admit an image tuple without a move word.

    The involution and class-permutation invariants are still enforced, but
    whether the images really define an automorphism is left to the caller.
    Such values cannot be inverted.
    """
    images = tuple(images)
    if not images:
        raise ValueError("need at least one image")
    return Automorphism(images[0].n, None, images)


def _check_same(f: Automorphism, g: Automorphism):
    if f.n != g.n:
        raise RankError(f"rank mismatch: {f.n} vs {g.n}")


def apply(f: Automorphism, w: Word) -> Word:
    if w.n != f.n:
        raise RankError(f"rank mismatch: {f.n} vs {w.n}")
    return Word(f.n, substitute(f._imgs, w.letters))


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    """f o g."""
    _check_same(f, g)
    moves = None if f.moves is None or g.moves is None else f.moves + g.moves
    return Automorphism(f.n, moves, [apply(f, w) for w in g.images])


def compose_all(n: int, autos: Iterable[Automorphism]) -> Automorphism:
    out = identity(n)
    for f in autos:
        out = compose(out, f)
    return out


def invert(f: Automorphism) -> Automorphism:
    if f.moves is None:
        raise ValueError("automorphism admitted without a move word cannot be inverted")
    return from_moves(f.n, f.moves[::-1])


def apply_move_to_word(n: int, m: Move, w: Word) -> Word:
    return Word(n, substitute(move_images(n, m), w.letters))


# -- named families --------------------------------------------------------


def sigma(n: int, j: int, i: int) -> Automorphism:
    """x_j -> x_i x_j x_i."""
    return make_move(n, PartialConj(frozenset({j}), i))


def swap(n: int, i: int, j: int) -> Automorphism:
    return make_move(n, Swap(i, j))


def F_w(n: int, i: int, w: Word) -> Automorphism:
    """x_i -> w x_i w^-1, other generators fixed; w must avoid the letter i."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    if w.n != n:
        raise RankError(f"rank mismatch: {n} vs {w.n}")
    if i in w.letters:
        raise ValueError(f"F_{{{i},w}} needs w free of the letter {i}")
    # the last move acts first and ends up innermost, hence the reversal
    return from_moves(n, [PartialConj(frozenset({i}), a) for a in reversed(w.letters)])


def F(n: int, i: int) -> Automorphism:
    """x_i -> x_1 x_2 x_i x_2 x_1 for i >= 3."""
    if not 3 <= i <= n:
        raise ValueError(f"F_i needs 3 <= i <= n, got i={i}")
    return F_w(n, i, Word(n, (1, 2)))


def ad(g: Word) -> Automorphism:
    """Inner automorphism x -> g x g^-1."""
    n = g.n
    full = frozenset(range(1, n + 1))
    # ad_g = ad_{a_1} o ... o ad_{a_k}; each factor also conjugates the others
    return from_moves(n, [PartialConj(full - {a}, a) for a in g.letters])


def named_family(name: str, n: int, *params) -> Automorphism:
    """Constructors by name: sigma(j, i), swap(i, j), F(i), Fw(i, w), ad(g), id()."""
    key = name.lower()
    if key in ("sigma", "s"):
        j, i = params
        return sigma(n, int(j), int(i))
    if key in ("swap", "t"):
        i, j = params
        return swap(n, int(i), int(j))
    if key == "f":
        (i,) = params
        return F(n, int(i))
    if key == "fw":
        i, w = params
        if isinstance(w, str):
            w = parse_word(w, n)
        return F_w(n, int(i), w)
    if key == "ad":
        (g,) = params
        if isinstance(g, str):
            g = parse_word(g, n)
        return ad(g)
    if key in ("id", "identity"):
        return identity(n)
    raise ValueError(f"unknown family {name!r}; expected sigma, swap, F, Fw, ad or id")


# -- outer classes ---------------------------------------------------------


def equal_outer(f: Automorphism, g: Automorphism) -> Word | None:
    """Return h with ad_h o f = g, or None when [f] != [g] in Out(W_n)."""
    _check_same(f, g)
    if f.class_perm != g.class_perm:
        return None
    n = f.n
    t = as_involution(f.images[0])
    t2 = as_involution(g.images[0])
    # h t h^-1 = t2  iff  h in {u2 u^-1, u2 x_j u^-1}
    u, u2 = t.conjugator, t2.conjugator
    xj = Word(n, (t.core_letter,))
    for h in (product(n, (u2, inverse(u))), product(n, (u2, xj, inverse(u)))):
        hinv = inverse(h)
        if all(product(n, (h, a, hinv)) == b for a, b in zip(f.images, g.images)):
            return h
    return None


def class_permutation(f: Automorphism) -> tuple[int, ...]:
    """pi as a tuple: pi[i-1] is the class letter of f(x_i)."""
    return f.class_perm


def compose_perms(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def in_Cn(f: Automorphism) -> bool:
    return f.class_perm == tuple(range(1, f.n + 1))


# -- twists and the stabilizer of a one-edge splitting ----------------------


def standard_twist(n: int, far: Iterable[int], z: Word) -> Automorphism:
    """Identity on x_j (j not in far), conjugation by z on x_k (k in far).

    z must be spelled in letters outside ``far``.
    """
    far = frozenset(far)
    if not far:
        raise ValueError("far side must be nonempty")
    if far & set(z.letters):
        raise ValueError("twistor must lie on the near side")
    return from_moves(n, [PartialConj(far, a) for a in reversed(z.letters)])


def twist(tree, edge: int, z: Word, at: int | None = None) -> Automorphism:
    """The twist D_{e,z} about edge e of a free splitting.

    ``at`` is the endpoint whose vertex group contains z (found automatically
    when omitted).  D_{e,z} fixes every generator on that side of e and
    conjugates every generator on the other side by z.
    """
    from .subgroup import core_from_generators, member

    n = tree.n
    if z.n != n:
        raise RankError(f"rank mismatch: {n} vs {z.n}")
    u, v = tree.edges[edge]
    ends = (u, v) if at is None else (at,)
    if at is not None and at not in (u, v):
        raise ValueError(f"vertex {at} is not an endpoint of edge {edge}")
    near_vertex = None
    for x in ends:
        gens = tree.groups[x]
        if z.is_identity() or (gens and member(core_from_generators(n, gens), z)):
            near_vertex = x
            break
    if near_vertex is None:
        raise ValueError(f"twistor {format_word(z)} is not in the vertex group at the chosen endpoint")
    if z.is_identity():
        return identity(n)
    marking, letters = tree.marking_and_letters()
    near = tree.side(edge, near_vertex)
    far_letters = frozenset(a for x in range(len(tree.groups)) if x not in near for a in letters[x])
    zz = apply(invert(marking), z)
    d = standard_twist(n, far_letters, zz)
    return compose(marking, compose(d, invert(marking)))


def normalize_stabilizer_rep(f: Automorphism, A_gens: Sequence[Word], leaf: Word) -> Automorphism:
    """The representative of [f] that maps A onto A and fixes the leaf.

    Raises ValueError when [f] does not stabilize the one-edge splitting
    A * <leaf>.
    """
    from .subgroup import conjugate_subgroups, core_from_generators, equal_subgroups, member

    n = f.n
    A_gens = [w.word if isinstance(w, Involution) else w for w in A_gens]
    if isinstance(leaf, Involution):
        leaf = leaf.word
    A = core_from_generators(n, A_gens)
    fA = core_from_generators(n, [apply(f, w) for w in A_gens])
    g = conjugate_subgroups(fA, A)
    if g is None:
        raise ValueError("f does not preserve the conjugacy class of A")
    h0 = compose(ad(g), f)
    img = apply(h0, leaf)
    c = are_conjugate(leaf, img)
    if c is None:
        raise ValueError("f moves the leaf out of its conjugacy class")
    # img = c leaf c^-1; the inner correction must come from A
    for a in (c, product(n, (c, leaf))):
        if member(A, a):
            out = compose(ad(inverse(a)), h0)
            break
    else:
        raise ValueError("f does not stabilize the splitting A * <leaf>")
    if apply(out, leaf) != leaf:
        raise AssertionError("normalization failed to fix the leaf")
    if not equal_subgroups(core_from_generators(n, [apply(out, w) for w in A_gens]), A):
        raise AssertionError("normalization failed to preserve A")
    return out


# -- serialization ---------------------------------------------------------


def move_to_json(m: Move) -> dict:
    if isinstance(m, PartialConj):
        return {"kind": "pc", "set": sorted(m.s), "i": m.i}
    return {"kind": "swap", "i": m.i, "j": m.j}


def move_from_json(d: dict) -> Move:
    kind = d.get("kind")
    if kind == "pc":
        return PartialConj(frozenset(int(a) for a in d["set"]), int(d["i"]))
    if kind == "swap":
        return Swap(int(d["i"]), int(d["j"]))
    raise ValueError(f"unknown move kind {kind!r}")


def to_json(f: Automorphism) -> dict:
    if f.moves is None:
        raise ValueError("automorphism without a move word has no JSON form")
    return {
        "rank": f.n,
        "moves": [move_to_json(m) for m in f.moves],
        "images": [format_word(w) for w in f.images],
    }


def from_json(d: Union[dict, str]) -> Automorphism:
    if isinstance(d, str):
        d = json.loads(d)
    n = int(d["rank"])
    f = from_moves(n, [move_from_json(m) for m in d.get("moves", [])])
    if "images" in d:
        given = [parse_word(s, n, reduce_input=False) for s in d["images"]]
        if tuple(given) != f.images:
            raise ValueError("images in JSON do not match the move word")
    return f
