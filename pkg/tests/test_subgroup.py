import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import autos, words
from ucoxeter import aut as A
from ucoxeter import oracles
from ucoxeter import subgroup as G
from ucoxeter.word import Word, conjugate, gen, inverse


def W(*xs, n=5):
    return Word(n, tuple(xs))


def core(n, *gens):
    return G.core_from_generators(n, [Word(n, tuple(g)) for g in gens])


def test_two_generator_core_is_one_vertex():
    c = core(3, (1,), (2,))
    assert c.nv == 1
    assert sorted(c.loops()) == [(0, 1), (0, 2)]


def test_hand_folded_core():
    c = core(2, (1,), (2, 1, 2))
    assert c.nv == 2
    assert c.edges() == [(0, 2, 1)]
    assert sorted(c.loops()) == [(0, 1), (1, 1)]
    # the coset oracle agrees on every word up to length 8
    oracle = oracles.CosetOracle(2, [(1,), (2, 1, 2)], depth=8)
    for w in oracles.reduced_words(2, 8):
        assert G.member(c, Word(2, w)) == oracle.contains(w)


def test_member_examples():
    assert not G.member(core(3, (1,), (2,)), gen(3, 3))
    assert G.member(core(2, (1,), (2, 1, 2)), Word(2, (1, 2, 1, 2)))


def test_conjugate_into_example():
    assert G.conjugate_into(core(5, (2,), (3,), (4,), (5,)), W(3, 1, 3)) is None
    g = G.conjugate_into(core(5, (2,), (3,), (4,), (5,)), W(1, 4, 1))
    assert G.member(core(5, (2,), (3,), (4,), (5,)), conjugate(g, W(1, 4, 1)))


def test_conjugate_subgroups_rejects_incompatible_pair():
    a = core(5, (2,), (3,), (4,), (5,))
    b = core(5, (2,), (1, 3, 1), (4,), (5,))
    assert G.conjugate_subgroups(a, b) is None
    assert a.code != b.code


def test_kurosh_examples():
    assert G.kurosh_signature(core(5, (1,), (2,), (3,))) == (3, 0)
    assert G.kurosh_signature(core(3, (1, 2))) == (0, 1)
    assert G.kurosh_signature(core(2, (1,), (2, 1, 2))) == (2, 0)


def test_intersect_example():
    a = core(5, (2,), (3,), (4,), (5,))
    b = core(5, (1,), (3,), (4,), (5,))
    c = G.intersect(a, b)
    assert G.equal_subgroups(c, core(5, (3,), (4,), (5,)))
    rng = random.Random(3)
    for _ in range(500):
        w = Word(5, tuple(_rand_letters(rng, 5, rng.randint(0, 10))))
        assert G.member(c, w) == (G.member(a, w) and G.member(b, w))
    assert G.intersect(core(3, (1,)), core(3, (2,))).nv == 1
    assert G.kurosh_signature(G.intersect(core(3, (1,)), core(3, (2,)))) == (0, 0)


def _rand_letters(rng, n, k):
    out = []
    while len(out) < k:
        a = rng.randint(1, n)
        if not out or out[-1] != a:
            out.append(a)
    return out


def test_free_factor_examples():
    v = G.is_free_factor(core(5, (1,), (2,), (3,)))
    assert v.status == "yes" and v.witness.is_identity()
    assert G.is_free_factor(core(2, (1,), (2, 1, 2))).status == "no"
    v = G.is_free_factor(core(5, (2, 3, 1, 3, 2), (3,), (4,), (5,)))
    assert v.status == "yes"
    assert len(v.witness.moves) == 2
    image = G.core_from_generators(5, [A.apply(v.witness, w) for w in [W(2, 3, 1, 3, 2), W(3), W(4), W(5)]])
    assert image.nv == 1


def test_index_two_oracle():
    # the coset table of <x1, x2 x1 x2> in W_2 closes with two cosets
    o = oracles.CosetOracle(2, [(1,), (2, 1, 2)], depth=4)
    live = [c for c in o.table if c not in o.alias]
    assert len(live) == 2
    assert all(len(o.table[c]) == 2 for c in live)


def test_free_part_is_rejected():
    with pytest.raises(ValueError):
        G.is_free_factor(core(3, (1, 2)))


def test_code_roundtrip():
    c = core(5, (2, 3, 1, 3, 2), (4,))
    cls = G.factor_class(c)
    back = G.class_from_hex(cls.hex())
    assert back == cls
    assert G.conjugate_subgroups(G.core_from_code(cls.code), c) is not None


def test_json_and_dot():
    c = core(3, (1,), (2, 3, 2))
    d = G.to_json(c)
    assert G.equal_subgroups(G.from_json(d), c)
    dot = G.to_dot(c)
    assert dot.startswith("graph core {") and dot.rstrip().endswith("}")
    assert dot.count("--") == len(c.edges()) + len(c.loops())


@given(st.lists(words(4, 6).filter(len), min_size=1, max_size=3), st.integers(0, 2**20))
def test_membership_matches_coset_oracle(gens, seed):
    c = G.core_from_generators(4, gens)
    oracle = oracles.CosetOracle(4, [g.letters for g in gens], depth=10)
    rng = random.Random(seed)
    for _ in range(20):
        if rng.random() < 0.5:
            w = Word(4, ())
            for _ in range(rng.randint(0, 3)):
                w = w * rng.choice(gens)
            if len(w) > 10:
                continue
        else:
            w = Word(4, tuple(_rand_letters(rng, 4, rng.randint(0, 10))))
        assert G.member(c, w) == oracle.contains(w.letters)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4, unique=True), autos(5), words(5, 6))
def test_conjugate_subgroups_roundtrip(letters, f, g):
    gens = [A.apply(f, gen(5, a)) for a in letters]
    a = G.core_from_generators(5, gens)
    b = G.core_from_generators(5, [conjugate(g, w) for w in gens])
    h = G.conjugate_subgroups(a, b)
    assert h is not None
    assert G.equal_subgroups(G.conjugate_by(a, h), b)
    assert a.code == b.code


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4, unique=True), autos(5))
def test_images_of_standard_factors_are_free_factors(letters, f):
    c = G.core_from_generators(5, [A.apply(f, gen(5, a)) for a in letters])
    v = G.is_free_factor(c)
    assert v.status == "yes"
    assert len(v.letters) == len(set(v.letters)) == len(letters)
