"""Randomized verification suites, one per acceptance criterion.

A suite is a case generator plus a ``check`` that takes one JSON-serializable
case and returns None or a failure message, so any failing case can be saved
and replayed on its own.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations

from . import aut as A
from . import oracles
from .aut import PartialConj, Swap, apply, compose, equal_outer, from_moves, invert
from .complexes import (
    ComplexKind,
    adjacent,
    fourth_vertex,
    induced_image_X_to_Xprime,
    induced_image_Y_to_L,
    intermediates,
    standard_corank1,
    triangle_type,
)
from .splitting import (
    act,
    act_tree,
    collapse,
    collapse_to,
    compatible_one_edge,
    equivalent_one_edge,
    is_compatible,
    make_star_class,
    refine,
    standard_star,
    star_class,
    validate,
)
from .subgroup import class_of, core_from_generators, member
from .word import Word, are_conjugate, inverse, product

# -- random inputs ---------------------------------------------------------


def random_letters(rng: random.Random, n: int, length: int, avoid=()) -> list[int]:
    out: list[int] = []
    choices = [a for a in range(1, n + 1) if a not in avoid]
    while len(out) < length:
        a = rng.choice(choices)
        if not out or out[-1] != a:
            out.append(a)
    return out


def random_move(rng: random.Random, n: int, letters=None):
    letters = list(range(1, n + 1)) if letters is None else list(letters)
    if rng.random() < 0.15 and len(letters) >= 2:
        i, j = rng.sample(letters, 2)
        return Swap(i, j)
    i = rng.choice(letters)
    others = [a for a in letters if a != i]
    s = [a for a in others if rng.random() < 0.5] or [rng.choice(others)]
    return PartialConj(frozenset(s), i)


def random_moves(rng, n, count, letters=None) -> list:
    return [A.move_to_json(random_move(rng, n, letters)) for _ in range(count)]


def moves_auto(n: int, moves) -> A.Automorphism:
    return from_moves(n, [A.move_from_json(m) for m in moves])


def random_index_word(rng, m, lo, hi) -> list[int]:
    """Indices into a basis of m involutions, no two adjacent equal (so nontrivial)."""
    out: list[int] = []
    for _ in range(rng.randint(lo, hi)):
        choices = [x for x in range(m) if not out or x != out[-1]]
        out.append(rng.choice(choices))
    return out


def random_center(rng, n, k) -> list[int]:
    return sorted(rng.sample(range(1, n + 1), k))


def star_tree(n, center, moves):
    return act_tree(moves_auto(n, moves), standard_star(n, center))


def _w(n, letters) -> Word:
    return Word(n, tuple(letters))


def _element_of(rng, n, gens, count) -> Word:
    """A random product of the given involutions."""
    out = Word(n, ())
    for _ in range(count):
        out = out * rng.choice(gens)
    return out


# -- suite plumbing --------------------------------------------------------


@dataclass
class SuiteResult:
    suite: str
    criterion: int
    ranks: list
    seed: int
    bound: int
    cases: int = 0
    failures: list = field(default_factory=list)
    wall: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "criterion": self.criterion,
            "ranks": self.ranks,
            "seed": self.seed,
            "bound": self.bound,
            "cases": self.cases,
            "failures": self.failures,
            "notes": self.notes,
            "ok": self.ok,
        }


class Suite:
    name = ""
    criterion = 0
    ranks: tuple = (5,)
    min_rank = 2
    budget = 0.0  # seconds, from the acceptance criterion

    def cases(self, rng: random.Random, n: int, bound: int):
        raise NotImplementedError

    def check(self, n: int, case: dict, bound: int, ctx: dict):
        raise NotImplementedError


SUITES: dict[str, Suite] = {}


def register(cls):
    SUITES[cls.name] = cls()
    return cls


def run_suite(name: str, ranks=None, seed: int = 0, bound: int = 16, max_failures: int = 20) -> SuiteResult:
    suite = SUITES[name]
    ranks = list(suite.ranks if not ranks else ranks)
    for n in ranks:
        if n < suite.min_rank:
            raise ValueError(f"suite {name} needs rank >= {suite.min_rank}")
    res = SuiteResult(name, suite.criterion, ranks, seed, bound)
    t0 = time.perf_counter()
    for n in ranks:
        rng = random.Random(f"{name}:{n}:{seed}")
        ctx: dict = {}
        for case in suite.cases(rng, n, bound):
            res.cases += 1
            try:
                msg = suite.check(n, case, bound, ctx)
            except Exception as exc:  # a crash is a failure with the same payload
                msg = f"{type(exc).__name__}: {exc}"
            if msg is not None and len(res.failures) < max_failures:
                res.failures.append({"suite": name, "rank": n, "bound": bound, "case": case, "message": msg})
    res.wall = time.perf_counter() - t0
    return res


def replay(payload) -> str | None:
    """Re-run one saved failure payload; returns the failure message or None."""
    if isinstance(payload, str):
        payload = json.loads(payload)
    suite = SUITES[payload["suite"]]
    return suite.check(int(payload["rank"]), payload["case"], int(payload.get("bound", 16)), {})


# -- 1: word algebra -------------------------------------------------------


@register
class WordAlgebra(Suite):
    name = "word-algebra"
    criterion = 1
    ranks = (3, 4, 5, 6)
    budget = 5.0
    conj_len = 6

    def cases(self, rng, n, bound):
        for _ in range(4000):
            yield {
                "kind": "assoc",
                "u": random_letters(rng, n, rng.randint(0, 8)),
                "v": random_letters(rng, n, rng.randint(0, 8)),
                "w": random_letters(rng, n, rng.randint(0, 8)),
            }
        for _ in range(2000):
            yield {"kind": "inverse", "w": random_letters(rng, n, rng.randint(0, 12))}
        L = self.conj_len
        for k in range(4000):
            if k % 2 == 0:
                u = random_letters(rng, n, rng.randint(0, L))
                while True:
                    g = random_letters(rng, n, rng.randint(0, 3))
                    v = oracles.naive_product(g, u, g[::-1])
                    if len(v) <= L:
                        break
                yield {"kind": "conj", "u": u, "v": list(v)}
            else:
                length = rng.randint(0, L)
                yield {"kind": "conj", "u": random_letters(rng, n, length), "v": random_letters(rng, n, length)}

    def check(self, n, case, bound, ctx):
        kind = case["kind"]
        if kind == "assoc":
            u, v, w = (_w(n, case[x]) for x in "uvw")
            left, right = (u * v) * w, u * (v * w)
            want = oracles.naive_product(case["u"], case["v"], case["w"])
            if left != right:
                return "product is not associative"
            if left.letters != want:
                return f"product {left.letters} != oracle {want}"
            return None
        if kind == "inverse":
            w = _w(n, case["w"])
            if not (w * w.inverse()).is_identity() or not (w.inverse() * w).is_identity():
                return "w w^-1 is not the identity"
            if oracles.naive_product(case["w"], w.inverse().letters) != ():
                return "oracle disagrees on the inverse"
            return None
        u, v = _w(n, case["u"]), _w(n, case["v"])
        oracle = ctx.get("conj")
        if oracle is None:
            oracle = ctx["conj"] = oracles.ConjugacyOracle(n, self.conj_len)
        g = are_conjugate(u, v)
        want = oracle.conjugate(case["u"], case["v"])
        if (g is not None) != want:
            return f"are_conjugate says {g is not None}, oracle says {want}"
        if g is not None and oracles.naive_product(g.letters, case["u"], g.letters[::-1]) != tuple(case["v"]):
            return f"witness {g.letters} does not conjugate u to v"
        return None


# -- 2: generator laws -----------------------------------------------------


@register
class GeneratorLaws(Suite):
    name = "generator-laws"
    criterion = 2
    ranks = (3, 4, 5, 6)
    budget = 1.0

    def cases(self, rng, n, bound):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    yield {"kind": "sigma", "j": j, "i": i}
                    if i < j:
                        yield {"kind": "swap", "i": i, "j": j}
        for _ in range(200):
            yield {"kind": "hom", "f": random_moves(rng, n, 8), "g": random_moves(rng, n, 8)}
        yield {"kind": "onto"}

    def check(self, n, case, bound, ctx):
        ident = A.identity(n)
        kind = case["kind"]
        if kind in ("sigma", "swap"):
            f = A.sigma(n, case["j"], case["i"]) if kind == "sigma" else A.swap(n, case["i"], case["j"])
            if compose(f, f) != ident:
                return f"{kind} is not an involution"
            if kind == "sigma" and not A.in_Cn(f):
                return "sigma does not lie in C_n"
            if kind == "swap":
                p = list(range(1, n + 1))
                p[case["i"] - 1], p[case["j"] - 1] = p[case["j"] - 1], p[case["i"] - 1]
                if A.class_permutation(f) != tuple(p):
                    return "swap does not induce its transposition"
            return None
        if kind == "hom":
            f, g = moves_auto(n, case["f"]), moves_auto(n, case["g"])
            lhs = A.class_permutation(compose(f, g))
            rhs = A.compose_perms(A.class_permutation(f), A.class_permutation(g))
            if lhs != rhs:
                return f"class permutation of f o g is {lhs}, expected {rhs}"
            if compose(invert(f), f) != ident:
                return "invert(f) o f is not the identity"
            return None
        # the image of the swaps is all of S_n
        gens = [A.class_permutation(A.swap(n, i, i + 1)) for i in range(1, n)]
        seen = {tuple(range(1, n + 1))}
        frontier = list(seen)
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = A.compose_perms(g, p)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        if len(seen) != math.factorial(n) or seen != set(permutations(range(1, n + 1))):
            return f"swap images generate {len(seen)} permutations, not {math.factorial(n)}"
        return None


# -- 3: commutation witnesses ----------------------------------------------

_AB = {"a": (1, 2), "A": (2, 1), "b": (2, 3), "B": (3, 2)}
_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}


def random_ab_word(rng, length) -> str:
    out = ""
    while len(out) < length:
        c = rng.choice("aAbB")
        if not out or _INV[c] != out[-1]:
            out += c
    return out


def ab_element(n, s) -> Word:
    w = Word(n, ())
    for c in s:
        w = w * Word(n, _AB[c])
    return w


@register
class Commutation(Suite):
    name = "commutation"
    criterion = 3
    ranks = (5, 6)
    min_rank = 4
    budget = 30.0
    max_l1 = 8

    def cases(self, rng, n, bound):
        for i in range(3, n + 1):
            for j in range(i + 1, n + 1):
                yield {"kind": "F", "i": i, "j": j}
        for e in oracles.exponent_vectors(n - 2, self.max_l1):
            if any(e):
                yield {"kind": "noninner", "e": list(e)}
        for _ in range(200):
            i, j = rng.sample(range(4, n + 1), 2)
            yield {
                "kind": "Fgh",
                "i": i,
                "j": j,
                "g": random_ab_word(rng, rng.randint(0, 8)),
                "h": random_ab_word(rng, rng.randint(0, 8)),
            }
        words = sorted({random_ab_word(rng, rng.randint(0, 8)) for _ in range(60)})
        for x, y in combinations(words, 2):
            yield {"kind": "inject", "i": n, "g": x, "h": y}

    def check(self, n, case, bound, ctx):
        kind = case["kind"]
        if kind == "F":
            f, g = A.F(n, case["i"]), A.F(n, case["j"])
            return None if compose(f, g) == compose(g, f) else "F_i and F_j do not commute"
        if kind == "noninner":
            powers = ctx.get("powers")
            if powers is None:
                powers = ctx["powers"] = {}
                for i in range(3, n + 1):
                    f = A.F(n, i)
                    fi = invert(f)
                    cur, cur_inv = A.identity(n), A.identity(n)
                    powers[(i, 0)] = cur
                    for k in range(1, self.max_l1 + 1):
                        cur, cur_inv = compose(cur, f), compose(cur_inv, fi)
                        powers[(i, k)], powers[(i, -k)] = cur, cur_inv
            prod = A.identity(n)
            for i, e in zip(range(3, n + 1), case["e"]):
                prod = compose(prod, powers[(i, e)])
            if equal_outer(prod, A.identity(n)) is not None:
                return f"F-word with exponents {case['e']} is inner"
            return None
        if kind == "Fgh":
            f = A.F_w(n, case["i"], ab_element(n, case["g"]))
            g = A.F_w(n, case["j"], ab_element(n, case["h"]))
            return None if compose(f, g) == compose(g, f) else "F_{i,g} and F_{j,h} do not commute"
        g, h = ab_element(n, case["g"]), ab_element(n, case["h"])
        if g == h:
            return f"distinct reduced words {case['g']} and {case['h']} give the same element"
        same = equal_outer(A.F_w(n, case["i"], g), A.F_w(n, case["i"], h))
        return None if same is None else "w -> [F_{i,w}] is not injective"


# -- 4: membership ---------------------------------------------------------


def random_involution_letters(rng, n, max_half) -> list[int]:
    u = random_letters(rng, n, rng.randint(0, max_half))
    a = rng.choice([x for x in range(1, n + 1) if not u or x != u[-1]])
    return u + [a] + u[::-1]


@register
class Membership(Suite):
    name = "membership"
    criterion = 4
    ranks = (3, 4, 5, 6)
    budget = 30.0
    depth = 12

    def cases(self, rng, n, bound):
        for _ in range(500):
            gens = []
            for _ in range(rng.randint(1, 3)):
                if rng.random() < 0.75:
                    gens.append(random_involution_letters(rng, n, 3))
                else:
                    gens.append(random_letters(rng, n, rng.randint(2, 5)))
            for _ in range(4):
                if rng.random() < 0.5:
                    seq: list[int] = []
                    for _ in range(rng.randint(1, 4)):
                        seq += rng.choice(gens)
                    w = list(oracles.naive_reduce(seq))[:10]
                else:
                    w = random_letters(rng, n, rng.randint(0, 10))
                yield {"gens": gens, "w": w}

    def check(self, n, case, bound, ctx):
        key = tuple(tuple(g) for g in case["gens"])
        pair = ctx.get(key)
        if pair is None:
            core = core_from_generators(n, [_w(n, g) for g in key])
            pair = ctx[key] = (core, oracles.CosetOracle(n, key, self.depth))
        core, oracle = pair
        got = member(core, _w(n, case["w"]))
        want = oracle.contains(case["w"])
        return None if got == want else f"member says {got}, coset enumeration says {want}"


# -- 5: Scott-Swarup roundtrip ---------------------------------------------


@register
class ScottSwarup(Suite):
    name = "scott-swarup"
    criterion = 5
    min_rank = 3
    budget = 60.0

    def cases(self, rng, n, bound):
        for _ in range(200):
            k = rng.randint(0, n - 1)
            yield {"center": random_center(rng, n, k), "moves": random_moves(rng, n, rng.randint(0, 6))}

    def check(self, n, case, bound, ctx):
        tree = star_tree(n, case["center"], case["moves"])
        s = star_class(tree)
        k = len(case["center"])
        if s.k != k or len(s.corank1) != n - k:
            return f"|corank1| = {len(s.corank1)}, expected {n - k}"
        r = refine(s.corank1)
        if r != s:
            return "refine(star_class) does not round-trip"
        if len(r.witness.edges) != n - k:
            return "refinement has the wrong number of edges"
        rep = validate(r.witness)
        if not rep.ok:
            return f"refinement is not a valid splitting: {rep.message}"
        for c in s.corank1:
            if collapse_to(r, c) != make_star_class(n, [c]):
                return f"refinement does not collapse onto {c.hex()}"
        return None


# -- 6: uniqueness of one-edge splittings ----------------------------------


@register
class Uniqueness(Suite):
    name = "uniqueness"
    criterion = 6
    min_rank = 3
    budget = 10.0

    def cases(self, rng, n, bound):
        for _ in range(100):
            k = rng.randint(0, n - 1)
            yield {
                "center": random_center(rng, n, k),
                "moves": random_moves(rng, n, rng.randint(0, 6)),
                "leaf": rng.randrange(n - k),
                "g": random_letters(rng, n, rng.randint(0, 4)),
            }

    def check(self, n, case, bound, ctx):
        tree = star_tree(n, case["center"], case["moves"])
        keep = case["leaf"]
        t1 = collapse(tree, [e for e in range(len(tree.edges)) if e != keep])
        t1b = act_tree(A.ad(_w(n, case["g"])), t1)
        c = star_class(t1)
        t2 = refine(c.corank1).witness
        if not (star_class(t2) == c == star_class(t1b)):
            return "one-edge constructions give different classes"
        if not equivalent_one_edge(t1, t2) or not equivalent_one_edge(t1b, t2):
            return "one-edge trees with the same corank-1 class are not equivalent"
        return None


# -- 7: triangles ----------------------------------------------------------


def model_triangles(n: int):
    m = standard_corank1(n)

    def star(*js):
        return refine([m[j - 1] for j in js])

    left = (star(1, n), star(2, n), star(1, 2))
    right = (star(1, n), star(2, n), star(3, n))
    return left, right


@register
class Triangles(Suite):
    name = "triangle"
    criterion = 7
    min_rank = 5
    budget = 60.0

    def cases(self, rng, n, bound):
        yield {"kind": "model", "side": "left"}
        yield {"kind": "model", "side": "right"}
        for _ in range(50):
            yield {"kind": "image", "moves": random_moves(rng, n, rng.randint(1, 6))}

    def check(self, n, case, bound, ctx):
        left, right = model_triangles(n)
        if case["kind"] == "model":
            if case["side"] == "left":
                if triangle_type(*left) != "Wn3":
                    return "left triangle is not Wn3"
                if fourth_vertex(*left, bound=bound) is not None:
                    return "left triangle has a fourth vertex"
            else:
                if triangle_type(*right) != "Wn4":
                    return "right triangle is not Wn4"
                if fourth_vertex(*right, bound=bound) is None:
                    return "right triangle has no fourth vertex"
            return None
        f = moves_auto(n, case["moves"])
        li = [act(f, s) for s in left]
        ri = [act(f, s) for s in right]
        if triangle_type(*li) != "Wn3" or triangle_type(*ri) != "Wn4":
            return "triangle type changed under an automorphism"
        s4 = fourth_vertex(*ri, bound=bound)
        if s4 is None:
            return "image of the right triangle lost its fourth vertex"
        if fourth_vertex(*li, bound=bound, search=False) is not None:
            return "image of the left triangle gained a fourth vertex"
        return None


# -- 8: induced maps -------------------------------------------------------


@register
class InducedMaps(Suite):
    name = "induced-maps"
    criterion = 8
    min_rank = 4
    budget = 60.0

    def cases(self, rng, n, bound):
        for _ in range(50):
            k = rng.choice([n - 3, n - 4]) if n >= 5 else n - 3
            yield {
                "center": random_center(rng, n, k),
                "moves": random_moves(rng, n, rng.randint(0, 4)),
                "s0": rng.randrange(n - k),
                "zero_moves": random_moves(rng, n, rng.randint(0, 4)),
                "gamma": random_moves(rng, n, rng.randint(1, 6)),
            }

    def check(self, n, case, bound, ctx):
        gamma = moves_auto(n, case["gamma"])
        s = star_class(star_tree(n, case["center"], case["moves"]))
        s0 = s.corank1[case["s0"]]
        images = {t: act(gamma, t) for t in intermediates(s, s0)}
        got = induced_image_X_to_Xprime(s, s0, images)
        if got != act(gamma, s):
            return "X -> X' image is not gamma . s"
        if induced_image_X_to_Xprime(s, s0, {t: t for t in images}) != s:
            return "X -> X' with identity images does not return s"
        z = star_class(star_tree(n, [], case["zero_moves"]))
        ones = [make_star_class(n, [c]) for c in z.corank1]
        got = induced_image_Y_to_L([act(gamma, t) for t in ones])
        if got != act(gamma, z):
            return "Y -> L image is not gamma . s"
        return None


# -- 9: twists -------------------------------------------------------------


@register
class Twists(Suite):
    name = "twists"
    criterion = 9
    min_rank = 4
    budget = 30.0

    def cases(self, rng, n, bound):
        for _ in range(100):
            j = rng.randint(1, n)
            yield {
                "kind": "law",
                "leaf": j,
                "moves": random_moves(rng, n, rng.randint(0, 4)),
                "z": [rng.randrange(n - 1) for _ in range(rng.randint(0, 4))],
                "z2": [rng.randrange(n - 1) for _ in range(rng.randint(0, 4))],
            }
        made = {"commute": 0, "noncommute": 0}
        while min(made.values()) < 100:
            z = random_letters(rng, n, rng.randint(1, 5), avoid=(n,))
            want = "commute" if made["commute"] <= made["noncommute"] else "noncommute"
            zs = set(z)
            moves = []
            for _ in range(rng.randint(1, 4)):
                if want == "commute":
                    i = rng.choice(range(1, n))
                    allowed = [a for a in range(1, n) if a != i and a not in zs]
                    if not allowed:
                        continue
                    s = [a for a in allowed if rng.random() < 0.5] or [rng.choice(allowed)]
                    moves.append(A.move_to_json(PartialConj(frozenset(s), i)))
                else:
                    moves.append(A.move_to_json(random_move(rng, n, range(1, n))))
            gt = moves_auto(n, moves)
            fixes = apply(gt, _w(n, z)) == _w(n, z)
            kind = "commute" if fixes else "noncommute"
            if kind != want:
                continue
            made[kind] += 1
            yield {"kind": "twistor", "expect": kind, "z": z, "gt": moves, "h": random_letters(rng, n, rng.randint(0, 4))}
        for _ in range(50):
            yield {
                "kind": "two-edge",
                "center": random_center(rng, n, n - 2),
                "moves": random_moves(rng, n, rng.randint(0, 4)),
                "z1": random_index_word(rng, n - 2, 1, 4),
                "z2": random_index_word(rng, n - 2, 1, 4),
            }
        words = sorted({tuple(random_letters(rng, n, rng.randint(0, 8), avoid=(n,))) for _ in range(40)})
        for x, y in combinations(words, 2):
            yield {"kind": "inject", "z": list(x), "z2": list(y)}

    def check(self, n, case, bound, ctx):
        kind = case["kind"]
        if kind == "law":
            j = case["leaf"]
            center = [a for a in range(1, n + 1) if a != j]
            tree = star_tree(n, center, case["moves"])
            cgens = tree.groups[0]
            z = product(n, [cgens[k] for k in case["z"]])
            z2 = product(n, [cgens[k] for k in case["z2"]])
            d = lambda w: A.twist(tree, 0, w, at=0)  # noqa: E731
            if compose(d(z), d(z2)) != d(z2 * z):
                return "D_z o D_z' != D_{z' z}"
            if compose(d(inverse(z)), d(inverse(z2))) != d(inverse(z * z2)):
                return "z -> D_{z^-1} is not a homomorphism"
            if d(Word(n, ())) != A.identity(n):
                return "trivial twistor does not give the identity"
            if not case["moves"] and j == n and d(z) != A.F_w(n, n, z):
                return "standard one-edge twist differs from F_{n,z}"
            return None
        if kind == "twistor":
            z = _w(n, case["z"])
            gt = moves_auto(n, case["gt"])
            g = compose(A.ad(_w(n, case["h"])), gt)
            d = A.F_w(n, n, z)
            a_gens = [Word(n, (a,)) for a in range(1, n)]
            norm = A.normalize_stabilizer_rep(g, a_gens, Word(n, (n,)))
            if norm != gt:
                return "normalized representative is not the constructed lift"
            commutes = equal_outer(compose(g, d), compose(d, g)) is not None
            fixes = apply(norm, z) == z
            if commutes != fixes:
                return f"commutes={commutes} but lift fixes twistor={fixes}"
            if commutes != (case["expect"] == "commute"):
                return "case landed on the wrong side of the twistor criterion"
            return None
        if kind == "two-edge":
            tree = star_tree(n, case["center"], case["moves"])
            cg = tree.groups[0]
            z1 = product(n, [cg[k] for k in case["z1"]])
            z2 = product(n, [cg[k] for k in case["z2"]])
            d1 = A.twist(tree, 0, z1, at=0)
            d2 = A.twist(tree, 1, z2, at=0)
            return None if compose(d1, d2) == compose(d2, d1) else "twists about the two edges do not commute"
        z, z2 = _w(n, case["z"]), _w(n, case["z2"])
        tree = standard_star(n, range(1, n))
        same = equal_outer(A.twist(tree, 0, z, at=0), A.twist(tree, 0, z2, at=0))
        return None if same is None else "z -> D_{e,z} is not injective in Out"


# -- 10: compatibility -----------------------------------------------------


def incompatible_pair(n: int):
    rest = [Word(n, (i,)) for i in range(4, n + 1)]
    a = class_of(n, [Word(n, (2,)), Word(n, (3,))] + rest)
    b = class_of(n, [Word(n, (2,)), Word(n, (1, 3, 1))] + rest)
    return a, b


@register
class Compatibility(Suite):
    name = "compatibility"
    criterion = 10
    min_rank = 5
    budget = 30.0

    def cases(self, rng, n, bound):
        yield {"kind": "incompatible"}
        fig = [1, 2, 3, n]
        for x, y in combinations(fig, 2):
            yield {"kind": "model", "pair": [x, y], "moves": []}
        for _ in range(20):
            x, y = rng.sample(fig, 2)
            yield {"kind": "model", "pair": [x, y], "moves": random_moves(rng, n, rng.randint(1, 6))}
        for _ in range(50):
            yield {
                "kind": "commuting-twists",
                "center": random_center(rng, n, n - 2),
                "moves": random_moves(rng, n, rng.randint(0, 4)),
                "z1": random_index_word(rng, n - 2, 1, 3),
                "z2": random_index_word(rng, n - 2, 1, 3),
            }
        for _ in range(50):
            yield {
                "kind": "random-twists",
                "a": [rng.randint(1, n), random_moves(rng, n, rng.randint(0, 3))],
                "b": [rng.randint(1, n), random_moves(rng, n, rng.randint(0, 3))],
                "z1": random_index_word(rng, n - 1, 1, 2),
                "z2": random_index_word(rng, n - 1, 1, 2),
            }

    def check(self, n, case, bound, ctx):
        kind = case["kind"]
        if kind == "incompatible":
            a, b = incompatible_pair(n)
            if compatible_one_edge(a, b) is not None:
                return "incompatible pair was accepted"
            if is_compatible(make_star_class(n, [a]), make_star_class(n, [b])):
                return "is_compatible accepted the incompatible pair"
            return None
        if kind == "model":
            m = standard_corank1(n)
            f = moves_auto(n, case["moves"])
            x, y = case["pair"]
            sa, sb = act(f, make_star_class(n, [m[x - 1]])), act(f, make_star_class(n, [m[y - 1]]))
            r = compatible_one_edge(sa.corank1[0], sb.corank1[0])
            if r is None or not is_compatible(sa, sb):
                return f"pair {case['pair']} was rejected"
            if r != act(f, refine([m[x - 1], m[y - 1]])):
                return "common refinement is not the expected W_{n-2}-star"
            return None
        if kind == "commuting-twists":
            tree = star_tree(n, case["center"], case["moves"])
            cg = tree.groups[0]
            t1, t2 = collapse(tree, [1]), collapse(tree, [0])
            z1 = product(n, [cg[k] for k in case["z1"]])
            z2 = product(n, [cg[k] for k in case["z2"]])
            d1, d2 = A.twist(t1, 0, z1, at=0), A.twist(t2, 0, z2, at=0)
            if equal_outer(compose(d1, d2), compose(d2, d1)) is None:
                return "twists in a common refinement do not commute"
            s1, s2 = star_class(t1), star_class(t2)
            if s1 == s2 or not is_compatible(s1, s2):
                return "commuting twists about distinct classes but is_compatible is false"
            return None
        trees = []
        for j, moves in (case["a"], case["b"]):
            trees.append(star_tree(n, [x for x in range(1, n + 1) if x != j], moves))
        ta, tb = trees
        za = product(n, [ta.groups[0][k] for k in case["z1"]])
        zb = product(n, [tb.groups[0][k] for k in case["z2"]])
        sa, sb = star_class(ta), star_class(tb)
        if sa == sb:
            return None
        da, db = A.twist(ta, 0, za, at=0), A.twist(tb, 0, zb, at=0)
        commute = equal_outer(compose(da, db), compose(db, da)) is not None
        if commute and not is_compatible(sa, sb):
            return "twists commute in Out but the splittings are incompatible"
        return None


SUITE_ORDER = [
    "word-algebra",
    "generator-laws",
    "commutation",
    "membership",
    "scott-swarup",
    "uniqueness",
    "triangle",
    "induced-maps",
    "twists",
    "compatibility",
]
