import json

from ucoxeter import suites
from ucoxeter.suites import SUITE_ORDER, SUITES, random_index_word, replay, run_suite


def test_order_covers_registry():
    assert SUITE_ORDER == sorted(SUITE_ORDER, key=lambda s: SUITES[s].criterion)
    assert [SUITES[s].criterion for s in SUITE_ORDER] == list(range(1, 11))


def test_deterministic():
    a = run_suite("uniqueness", ranks=[4], seed=5)
    b = run_suite("uniqueness", ranks=[4], seed=5)
    assert a.to_json() == b.to_json()


def test_cases_differ_by_seed():
    rng_cases = lambda seed: list(SUITES["scott-swarup"].cases(__import__("random").Random(seed), 5, 16))[:5]  # noqa: E731
    assert rng_cases(1) != rng_cases(2)


def test_result_json_roundtrips():
    res = run_suite("generator-laws", ranks=[3], seed=1)
    doc = json.loads(json.dumps(res.to_json()))
    assert doc["ok"] and doc["criterion"] == 2 and doc["seed"] == 1


def test_replay_payload():
    # a saved payload replays from its JSON alone
    ok = {"suite": "word-algebra", "rank": 4, "case": {"kind": "assoc", "u": [1, 2], "v": [2, 3], "w": [3]}}
    assert replay(ok) is None
    assert replay(json.dumps(ok)) is None


def test_min_rank_enforced():
    try:
        run_suite("triangle", ranks=[4])
    except ValueError as exc:
        assert "rank" in str(exc)
    else:
        raise AssertionError("expected a rank error")


def test_random_index_word_has_no_repeats():
    import random

    rng = random.Random(0)
    for _ in range(200):
        w = random_index_word(rng, 3, 1, 6)
        assert 1 <= len(w) <= 6
        assert all(a != b for a, b in zip(w, w[1:]))


def test_crash_becomes_failure(monkeypatch):
    suite = SUITES["uniqueness"]

    def boom(n, case, bound, ctx):
        raise RuntimeError("boom")

    monkeypatch.setattr(suite, "check", boom)
    res = suites.run_suite("uniqueness", ranks=[4], seed=0, max_failures=3)
    assert not res.ok and len(res.failures) == 3
    assert res.failures[0]["message"] == "RuntimeError: boom"
