import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import autos, words
from ucoxeter import aut as A
from ucoxeter import splitting as S
from ucoxeter.subgroup import class_of, factor_class, core_from_generators
from ucoxeter.suites import model_triangles, incompatible_pair
from ucoxeter.word import Word, gen


def W(*xs, n=5):
    return Word(n, tuple(xs))


def cls(n, *gens):
    return class_of(n, [Word(n, tuple(g)) for g in gens])


def std_class(n, skip):
    return class_of(n, [gen(n, i) for i in range(1, n + 1) if i != skip])


def test_standard_star_shapes():
    t = S.standard_star(4, [])
    assert len(t.edges) == 4 and t.groups[0] == ()
    t = S.standard_star(5, [2, 3, 4])
    assert t.groups[0] == (gen(5, 2), gen(5, 3), gen(5, 4))
    assert sorted(g.letters for v in range(1, t.nverts) for g in t.groups[v]) == [(1,), (5,)]
    assert len(S.standard_star(5, [1, 2, 3, 4]).edges) == 1
    with pytest.raises(ValueError):
        S.standard_star(3, [1, 2, 3])


def test_star_class_standard():
    s = S.star_class(S.standard_star(5, [1, 2, 3, 4]))
    assert s.corank1 == (std_class(5, 5),) and s.k == 4
    s = S.star_class(S.standard_star(5, [2, 3, 4]))
    assert set(s.corank1) == {std_class(5, 1), std_class(5, 5)} and s.k == 3


def test_act_examples():
    s = S.star_class(S.standard_star(5, [1, 2, 3, 4]))
    assert S.act(A.identity(5), s) == s
    t = S.act(A.swap(5, 1, 5), s)
    assert t.corank1 == (cls(5, (5,), (2,), (3,), (4,)),)


@given(words(5, 8), st.integers(0, 3))
def test_inner_action_fixes_classes(g, k):
    s = S.star_class(S.standard_star(5, list(range(1, 5 - k))))
    assert S.act(A.ad(g), s) == s


def test_compatible_one_edge_example():
    a, b = std_class(5, 1), std_class(5, 2)
    s = S.compatible_one_edge(a, b)
    assert s == S.star_class(S.standard_star(5, [3, 4, 5]))
    center = s.witness.groups[s.witness.center()]
    assert core_from_generators(5, center).code == cls(5, (3,), (4,), (5,)).code


def test_incompatible_pair():
    a, b = incompatible_pair(5)
    assert S.compatible_one_edge(a, b) is None
    assert not S.is_compatible(S.one_edge_star(a), S.one_edge_star(b))
    assert S.compatible_one_edge(a, a) is None


def test_refine_examples():
    a = std_class(5, 1)
    assert S.refine([a]) == S.one_edge_star(a)
    left, right = model_triangles(5)
    union = {c for s in left for c in s.corank1}
    assert len(union) == 3
    r = S.refine(union)
    assert r.k == 5 - 3
    assert all(S.refines(r, s) for s in left)


def test_refine_rejects_incompatible():
    a, b = incompatible_pair(5)
    with pytest.raises(ValueError):
        S.refine([a, b])


@given(autos(5, 6), st.sampled_from([[], [1], [1, 2], [2, 3, 4], [1, 3, 5]]))
def test_refine_roundtrip(f, center):
    s = S.star_class(S.act_tree(f, S.standard_star(5, center)))
    r = S.refine(s.corank1)
    assert r == s
    assert S.star_class(r.witness) == s
    for c in s.corank1:
        assert S.collapse_to(r, c) == S.one_edge_star(c)


def test_collapse_zero_star():
    n = 5
    t = S.standard_star(n, [])
    for j in range(1, n + 1):
        kept = j - 1  # edge j-1 joins the leaf <x_j>
        c = S.collapse(t, [e for e in range(n) if e != kept])
        assert S.star_class(c).corank1 == (std_class(n, j),)


def test_validate():
    assert S.validate(S.standard_star(5, [1, 2])).ok
    bad = S.SplittingTree(4, [(), (gen(4, 1), gen(4, 2)), (gen(4, 3), gen(4, 4))], [(0, 1), (0, 2)])
    rep = S.validate(bad)
    assert not rep.ok and rep.vertex == 0
    leaf = S.SplittingTree(3, [(gen(3, 3),), (gen(3, 1), W(2, 1, 2, n=3))], [(0, 1)])
    assert not S.validate(leaf).ok


@pytest.mark.parametrize("n", [4, 5])
def test_maximal_blowup_edge_count(n):
    t = S.maximal_blowup(S.standard_star(n, []))
    assert len(t.edges) == 2 * n - 3
    assert S.validate(t).ok
    assert all(t.degree(v) == 3 for v in range(t.nverts) if not t.groups[v])


def test_blow_up_then_collapse():
    t = S.standard_star(5, [])
    b = S.blow_up(t, 0, [1, 2])
    assert S.validate(b).ok
    back = S.collapse(b, [len(b.edges) - 1])
    assert S.star_class(back) == S.star_class(t)


def test_equivalent_one_edge():
    t = S.standard_star(5, [1, 2, 3, 4])
    u = S.act_tree(A.ad(W(1, 5)), t)
    assert S.equivalent_one_edge(t, u)
    assert not S.equivalent_one_edge(t, S.standard_star(5, [2, 3, 4, 5]))


def test_free_factor_systems():
    fine = S.ffs_of(S.standard_star(5, [2, 3]))
    coarse = S.standard_ffs(5, [[1, 2, 3], [4], [5]])
    assert S.ffs_leq(fine, coarse)
    assert not S.ffs_leq(coarse, fine)


def test_tree_json_and_dot():
    t = S.act_tree(A.F(5, 3), S.standard_star(5, [1, 2]))
    assert S.tree_from_json(S.tree_to_json(t)) == t
    dot = S.tree_to_dot(t)
    assert dot.count("--") == len(t.edges)
    s = S.star_class(t)
    assert S.star_from_json(s.to_json(with_witness=True)) == s
