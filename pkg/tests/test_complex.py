import json
import random

import pytest

from ucoxeter import aut as A
from ucoxeter import complexes as C
from ucoxeter import splitting as S
from ucoxeter.complexes import ComplexKind as K
from ucoxeter.suites import model_triangles, incompatible_pair, moves_auto, random_moves


def m(n):
    return C.standard_corank1(n)


def test_kind_parse():
    assert K.parse("xprime") is K.XPRIME
    with pytest.raises(ValueError):
        K.parse("Z")


def test_left_pair_adjacent_in_X():
    left, _ = model_triangles(5)
    assert C.adjacent(K.X, left[0], left[1])


def test_zero_star_and_collapse_adjacent_in_L():
    zero = S.star_class(S.standard_star(5, []))
    one = S.refine(list(zero.corank1)[:4])
    assert one.k == 1
    assert C.adjacent(K.L, zero, one)
    assert not C.adjacent(K.L, zero, zero)


def test_incompatible_pair_not_adjacent_in_Y():
    a, b = incompatible_pair(5)
    assert not C.adjacent(K.Y, S.one_edge_star(a), S.one_edge_star(b))


def test_inadmissible_vertex():
    with pytest.raises(ValueError):
        C.adjacent(K.Y, S.star_class(S.standard_star(5, [])), S.one_edge_star(m(5)[0]))


@pytest.mark.parametrize("n", [5, 6])
def test_triangle_types(n):
    left, right = model_triangles(n)
    assert C.triangle_type(*left) == "Wn3"
    assert C.triangle_type(*right) == "Wn4"


def test_triangle_types_invariant():
    left, right = model_triangles(5)
    rng = random.Random(11)
    for _ in range(5):
        f = moves_auto(5, random_moves(rng, 5, 4))
        assert C.triangle_type(*[S.act(f, s) for s in left]) == "Wn3"
        assert C.triangle_type(*[S.act(f, s) for s in right]) == "Wn4"


def test_fourth_vertex():
    left, right = model_triangles(5)
    s4 = C.fourth_vertex(*right)
    assert s4 is not None and s4 not in right
    assert all(C.adjacent(K.X, s4, s) for s in right)
    assert C.fourth_vertex(*left, bound=16) is None


def test_simplex_refinement():
    n = 6
    base = S.star_class(S.standard_star(n, [1]))
    c = list(base.corank1)
    stars = [S.refine([c[0], x]) for x in c[1:]]
    assert len(stars) == 4
    out = C.simplex_refinement(stars)
    assert out.k == 1 and out == base
    with pytest.raises(ValueError):
        C.simplex_refinement(stars[:3])
    five = [S.refine([m(5)[0], x]) for x in m(5)[1:]]
    with pytest.raises(ValueError):
        C.simplex_refinement(five)


def test_ball_contains_left_triangle():
    left, _ = model_triangles(5)
    ball = C.neighbors_bounded(K.X, left[0], 8)
    assert ball.vertices[0] == left[0]
    assert left[1] in ball.vertices and left[2] in ball.vertices
    for x, y in ball.edges:
        assert C.adjacent(K.X, ball.vertices[x], ball.vertices[y])


def test_induced_X_to_Xprime():
    n = 6
    s = S.star_class(S.standard_star(n, [1, 2]))  # W_{n-4}-star
    s0 = s.corank1[0]
    inter = C.intermediates(s, s0)
    assert C.induced_image_X_to_Xprime(s, s0, {t: t for t in inter}) == s
    f = A.compose(A.F(n, 4), A.sigma(n, 3, 5))
    images = {t: S.act(f, t) for t in inter}
    assert C.induced_image_X_to_Xprime(s, s0, images) == S.act(f, s)
    left, _ = model_triangles(n)
    with pytest.raises(ValueError):
        C.induced_image_X_to_Xprime(s, s0, dict(zip(inter, left)))


def test_induced_Y_to_L():
    n = 5
    zero = S.star_class(S.standard_star(n, []))
    ones = [S.one_edge_star(c) for c in zero.corank1]
    assert C.induced_image_Y_to_L(ones) == zero
    f = A.compose(A.F(n, 3), A.swap(n, 1, 4))
    assert C.induced_image_Y_to_L([S.act(f, t) for t in ones]) == S.act(f, zero)
    part = S.refine([c for t in ones[1:] for c in t.corank1])
    assert C.adjacent(K.L, zero, part)


def test_induced_permutation():
    zero = S.star_class(S.standard_star(5, []))
    perm = C.induced_permutation(A.swap(5, 1, 2), zero)
    assert sorted(perm) == list(range(5)) and perm != tuple(range(5))
    assert C.induced_permutation(A.F(5, 3), zero) is None


def test_export_empty_and_left():
    empty = C.ball_from_vertices(K.X, [])
    assert C.export(K.X, empty, "dot") == "graph X {\n}\n"
    doc = json.loads(C.export(K.X, empty, "json"))
    assert doc["vertices"] == [] and doc["edges"] == []
    left, _ = model_triangles(5)
    ball = C.ball_from_vertices(K.X, left)
    dot = C.export(K.X, ball, "dot")
    assert dot.count("[label=") == 3 and dot.count(" -- ") == 3
    back = C.ball_from_json(C.export(K.X, ball, "json"))
    assert back.vertices == ball.vertices and back.edges == ball.edges
    with pytest.raises(ValueError):
        C.export(K.X, ball, "png")
