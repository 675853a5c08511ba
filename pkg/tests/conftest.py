import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ucoxeter import aut as A
from ucoxeter.suites import random_moves
from ucoxeter.word import Word

settings.register_profile(
    "ucoxeter",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ucoxeter")


def letters(n, max_len=10):
    """Strategy for reduced letter sequences in W_n."""

    def build(seq):
        out = []
        for a in seq:
            if out and out[-1] == a:
                out.pop()
            else:
                out.append(a)
        return tuple(out)

    return st.lists(st.integers(1, n), max_size=max_len).map(build)


def words(n, max_len=10):
    return letters(n, max_len).map(lambda t: Word(n, t))


def autos(n, max_moves=5):
    """Strategy for automorphisms given by short random move words."""
    return st.integers(0, 2**32).map(
        lambda s: A.from_moves(
            n, [A.move_from_json(m) for m in random_moves(random.Random(s), n, random.Random(s + 1).randint(0, max_moves))]
        )
    )


@pytest.fixture
def rng():
    return random.Random(20261016)
