import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import autos, words
from ucoxeter import aut as A
from ucoxeter.splitting import standard_star
from ucoxeter.word import Word, conjugate, gen, identity, inverse


def W(*xs, n=5):
    return Word(n, tuple(xs))


def test_sigma_image():
    assert A.apply(A.sigma(5, 2, 1), gen(5, 2)) == W(1, 2, 1)


def test_sigma_squared_is_identity():
    assert A.compose(A.sigma(5, 2, 1), A.sigma(5, 2, 1)).is_identity()


def test_F3_image():
    assert A.apply(A.F(5, 3), gen(5, 3)) == W(1, 2, 3, 2, 1)
    with pytest.raises(ValueError):
        A.F(5, 2)


def test_Fw_image():
    f = A.F_w(5, 5, W(2, 3))
    assert f.image(5) == W(2, 3, 5, 3, 2)
    assert all(f.image(i) == gen(5, i) for i in range(1, 5))
    with pytest.raises(ValueError):
        A.F_w(5, 2, W(2, 3))


def test_ad_image():
    g = W(1, 3, 5, 1)
    f = A.ad(g)
    for i in range(1, 6):
        assert f.image(i) == conjugate(g, gen(5, i))


def test_equal_outer_examples():
    assert A.equal_outer(A.ad(W(1)), A.identity(5)) == W(1)
    assert A.equal_outer(A.sigma(5, 2, 1), A.swap(5, 1, 2)) is None


def test_class_permutation_examples():
    s = A.sigma(4, 3, 1)
    assert A.class_permutation(s) == (1, 2, 3, 4) and A.in_Cn(s)
    t = A.swap(4, 1, 3)
    assert A.class_permutation(t) == (3, 2, 1, 4) and not A.in_Cn(t)


def test_twist_standard_star():
    tree = standard_star(5, [1, 2, 3, 4])
    d = A.twist(tree, 0, W(2, 3))
    assert d.image(5) == W(2, 3, 5, 3, 2)
    assert all(d.image(i) == gen(5, i) for i in range(1, 5))
    assert A.twist(tree, 0, identity(5)).is_identity()
    with pytest.raises(ValueError):
        A.twist(tree, 0, W(5, 1), at=0)


def test_twist_law_reverses_order():
    tree = standard_star(5, [1, 2, 3, 4])
    z, z2 = W(1, 2), W(3, 4, 1)
    lhs = A.compose(A.twist(tree, 0, z), A.twist(tree, 0, z2))
    assert lhs == A.twist(tree, 0, z2 * z)


def test_normalize_stabilizer_rep_examples():
    A_gens = [gen(5, i) for i in range(1, 5)]
    out = A.normalize_stabilizer_rep(A.ad(W(1)), A_gens, gen(5, 5))
    assert out.is_identity()
    # the normalized lift fixes x_5, so F_{5,z} becomes conjugation by z^-1 on A
    z = W(2, 3, 1)
    f = A.F_w(5, 5, z)
    out = A.normalize_stabilizer_rep(f, A_gens, gen(5, 5))
    assert out == A.compose(A.ad(inverse(z)), f)
    assert out.image(5) == gen(5, 5)
    assert all(out.image(i) == conjugate(inverse(z), gen(5, i)) for i in range(1, 5))
    with pytest.raises(ValueError):
        A.normalize_stabilizer_rep(A.swap(5, 4, 5), A_gens, gen(5, 5))


def test_named_family():
    assert A.named_family("F", 5, "3") == A.F(5, 3)
    assert A.named_family("Fw", 5, "4", "1.2") == A.F_w(5, 4, W(1, 2))
    with pytest.raises(ValueError):
        A.named_family("bogus", 5)


@given(st.integers(0, 2**32), words(5, 6))
def test_normalize_recovers_aut_of_A(seed, g):
    import random

    from ucoxeter.suites import moves_auto, random_moves

    rng = random.Random(seed)
    # moves among the letters of A fix x_5 and preserve A
    h = moves_auto(5, random_moves(rng, 5, rng.randint(0, 5), letters=[1, 2, 3, 4]))
    f = A.compose(A.ad(g), h)
    A_gens = [gen(5, i) for i in range(1, 5)]
    assert A.normalize_stabilizer_rep(f, A_gens, gen(5, 5)) == h


@given(autos(5), autos(5), words(5, 8))
def test_compose_is_composition(f, g, w):
    assert A.apply(A.compose(f, g), w) == A.apply(f, A.apply(g, w))


@given(autos(5))
def test_invert(f):
    assert A.compose(f, A.invert(f)).is_identity()
    assert A.compose(A.invert(f), f).is_identity()


@given(autos(5), autos(5))
def test_class_permutation_homomorphism(f, g):
    assert A.class_permutation(A.compose(f, g)) == A.compose_perms(A.class_permutation(f), A.class_permutation(g))


@given(autos(5), words(5, 8))
def test_equal_outer_roundtrip(f, g):
    assert A.equal_outer(f, A.compose(A.ad(g), f)) == g


@given(autos(4))
def test_json_roundtrip(f):
    assert A.from_json(A.to_json(f)) == f


@given(st.integers(1, 5), st.integers(1, 5))
def test_generators_are_involutions(i, j):
    if i != j:
        s = A.sigma(5, j, i)
        assert A.compose(s, s).is_identity()
        t = A.swap(5, i, j)
        assert A.compose(t, t).is_identity()


@given(words(5, 6).filter(lambda w: 5 not in w.letters), words(5, 6).filter(lambda w: 5 not in w.letters))
def test_twist_antihomomorphism(z, z2):
    tree = standard_star(5, [1, 2, 3, 4])
    assert A.compose(A.twist(tree, 0, z), A.twist(tree, 0, z2)) == A.twist(tree, 0, z2 * z)
    assert A.twist(tree, 0, inverse(z)) == A.invert(A.twist(tree, 0, z))
