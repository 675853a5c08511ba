"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every criterion is run through the same randomized suite the CLI exposes
(``ucoxeter verify <suite>``), at the default seed, with its time budget.
"""

import pytest

from ucoxeter import kernels
from ucoxeter.suites import SUITES, run_suite

# criterion -> (suite, ranks, minimum number of cases, seconds)
CRITERIA = {
    1: ("word-algebra", [3, 4, 5, 6], 4 * 10_000, 5.0),
    2: ("generator-laws", [3, 4, 5, 6], 1, 1.0),
    3: ("commutation", [5, 6], 1, 30.0),
    4: ("membership", [3, 4, 5, 6], 4 * 2_000, 30.0),
    5: ("scott-swarup", [5], 200, 60.0),
    6: ("uniqueness", [5], 100, 10.0),
    7: ("triangle", [5], 2 + 50, 60.0),
    8: ("induced-maps", [5], 50, 60.0),
    9: ("twists", [5], 100 + 200 + 50, 30.0),
    10: ("compatibility", [5], 1, 30.0),
}


def _report(capsys, number, res, budget, ok):
    status = "PASS" if ok else "FAIL"
    line = (
        f"[acceptance] criterion {number:2d} {status}  {res.suite:15s} ranks={res.ranks} "
        f"cases={res.cases} failures={len(res.failures)} wall={res.wall:.2f}s budget={budget:.0f}s "
        f"backend={kernels.BACKEND}"
    )
    with capsys.disabled():
        print("\n" + line)


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    name, ranks, min_cases, budget = CRITERIA[number]
    assert SUITES[name].criterion == number
    res = run_suite(name, ranks=ranks, seed=0, bound=16)
    ok = res.ok and res.cases >= min_cases and res.wall < budget
    _report(capsys, number, res, budget, ok)
    assert res.failures == [], res.failures[:3]
    assert res.cases >= min_cases
    assert res.wall < budget


def test_suites_map_one_to_one():
    assert sorted(s.criterion for s in SUITES.values() if s.criterion) == list(range(1, 11))
