from ucoxeter import oracles


def test_naive_reduce():
    assert oracles.naive_reduce([1, 2, 2, 1, 3]) == (3,)
    assert oracles.naive_product((1, 2), (2, 1)) == ()


def test_reduced_word_counts():
    # n (n-1)^(k-1) words of length k
    words = oracles.reduced_words(3, 4)
    assert len(words) == 1 + 3 + 6 + 12 + 24
    assert len(set(words)) == len(words)


def test_conjugacy_oracle_small():
    o = oracles.ConjugacyOracle(2, 2)
    assert o.conjugate((1, 2), (2, 1))
    assert not o.conjugate((1,), (2,))
    assert not o.conjugate((), (1,))


def test_brute_conjugator():
    g = oracles.brute_conjugator(3, (3,), (1, 2, 3, 2, 1), 3)
    assert oracles.naive_product(g, (3,), g[::-1]) == (1, 2, 3, 2, 1)
    assert oracles.brute_conjugator(3, (1,), (2,), 3) is None


def test_coset_oracle_extremes():
    full = oracles.CosetOracle(3, [(1,), (2,), (3,)], depth=6)
    trivial = oracles.CosetOracle(3, [], depth=6)
    for w in oracles.reduced_words(3, 6):
        assert full.contains(w)
        assert trivial.contains(w) == (w == ())


def test_coset_oracle_conjugate_generator():
    o = oracles.CosetOracle(3, [(1, 2, 1)], depth=8)
    assert o.contains((1, 2, 1))
    assert not o.contains((2,))
    assert not o.contains((1, 2))


def test_exponent_vectors():
    vs = list(oracles.exponent_vectors(2, 1))
    assert sorted(vs) == [(-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)]
