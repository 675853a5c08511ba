import json

import pytest

from ucoxeter.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_word_normalize(capsys):
    code, out, err = run(capsys, "word", "normalize", "1.2.2.3")
    assert code == 0 and out == "1.3\n"
    assert "wall" in err


def test_word_conj_json(capsys):
    code, out, _ = run(capsys, "word", "conj", "1.2", "2.1", "--json")
    assert code == 0 and json.loads(out)["conjugator"] == "1"


def test_aut_commands(capsys):
    assert run(capsys, "aut", "apply", "sigma:2,1", "2", "--rank", "3")[1] == "1.2.1\n"
    assert run(capsys, "aut", "outer-eq", "ad:1", "id", "--rank", "5")[1] == "yes 1\n"
    assert run(capsys, "aut", "cn", "swap:1,2", "--rank", "4")[1].startswith("no")
    code, out, _ = run(capsys, "aut", "family", "F", "3", "--rank", "5", "--json")
    assert json.loads(out)["images"][2] == "1.2.3.2.1"
    code, out, _ = run(capsys, "aut", "compose", "F:3", "F:4", "--rank", "5")
    assert code == 0 and "x4 -> 1.2.4.2.1" in out


def test_aut_json_roundtrip(capsys, tmp_path):
    _, out, _ = run(capsys, "aut", "family", "Fw", "5", "2.3", "--rank", "5", "--json")
    path = tmp_path / "f.json"
    path.write_text(out)
    assert run(capsys, "aut", "apply", str(path), "5", "--rank", "5")[1] == "2.3.5.3.2\n"


def test_subgroup_commands(capsys):
    assert run(capsys, "subgroup", "member", "1,2.1.2", "1.2.1.2", "--rank", "2")[1] == "yes\n"
    assert run(capsys, "subgroup", "conj", "2,3,4,5", "2,1.3.1,4,5", "--rank", "5")[1] == "none\n"
    out = run(capsys, "subgroup", "freefactor", "2.3.1.3.2,3,4,5", "--rank", "5")[1]
    assert out.startswith("yes") and "2 moves" in out
    assert run(capsys, "subgroup", "freefactor", "1,2.1.2", "--rank", "2")[1].startswith("no")
    assert run(capsys, "subgroup", "intersect", "2,3,4,5", "1,3,4,5", "--rank", "5")[1] == "<3, 4, 5>\n"
    out = run(capsys, "subgroup", "core", "1,2.1.2", "--rank", "2", "--format", "dot")[1]
    assert out.startswith("graph core {")


def test_star_commands(capsys):
    code, out, _ = run(capsys, "star", "make", "--center", "3,4,5", "--rank", "5", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["k"] == 3 and "witness" in doc
    assert run(capsys, "star", "compatible", "ff:2,3,4,5", "ff:1,3,4,5", "--rank", "5")[1] == "yes\n"
    assert run(capsys, "star", "compatible", "ff:2,3,4,5", "ff:2,1.3.1,4,5", "--rank", "5")[1] == "no\n"
    code, out, _ = run(capsys, "star", "refine", "ff:2,3,4,5", "ff:1,3,4,5", "--rank", "5", "--json")
    assert json.loads(out)["k"] == 3
    out = run(capsys, "star", "collapse", "std:3,4,5", "--keep", "1", "--rank", "5", "--json")[1]
    assert json.loads(out)["k"] == 4
    out = run(capsys, "star", "act", "F:3", "std:1,2", "--rank", "5")[1]
    assert out.startswith("W2-star")
    out = run(capsys, "star", "canon", "std:1,2@ad:3.4", "--rank", "5", "--json")[1]
    assert out == run(capsys, "star", "canon", "std:1,2", "--rank", "5", "--json")[1]


def test_complex_commands(capsys):
    out = run(capsys, "complex", "triangle", "--model", "left", "--rank", "5")[1]
    assert out.startswith("type Wn3") and "none" in out
    out = run(capsys, "complex", "triangle", "--model", "right", "--rank", "5")[1]
    assert out.startswith("type Wn4") and "found" in out
    assert run(capsys, "complex", "adjacent", "Y", "ff:2,3,4,5", "ff:1,3,4,5", "--rank", "5")[1] == "yes\n"
    out = run(capsys, "complex", "export", "X", "std:2,3,4", "std:1,3,4", "--rank", "5", "--format", "dot")[1]
    assert out.startswith("graph X {") and out.count(" -- ") == 1
    code, out, _ = run(capsys, "complex", "induce", "y-l", "F:3*swap:1,2", "std:", "--rank", "5")
    assert code == 0 and out.rstrip().endswith("equivariant: yes")
    code, out, _ = run(capsys, "complex", "induce", "x-xprime", "F:4", "std:1,2", "--rank", "6")
    assert code == 0


def test_verify_and_replay(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "uniqueness", "--rank", "5", "--seed", "3")
    assert code == 0 and "seed 3" in out and "PASS" in out
    assert "wall" in err and "wall" not in out
    code, out2, _ = run(capsys, "verify", "uniqueness", "--rank", "5", "--seed", "3")
    assert out2 == out
    payload = {"suite": "word-algebra", "rank": 3, "bound": 16, "case": {"kind": "inverse", "w": [1, 2, 3]}}
    path = tmp_path / "p.json"
    path.write_text(json.dumps([payload]))
    code, out, _ = run(capsys, "verify", "--replay", str(path))
    assert code == 0 and "pass" in out


def test_verify_failure_exit_code(capsys, tmp_path):
    # a throwaway suite whose check always fails
    from ucoxeter import suites

    class Broken(suites.Suite):
        name = "broken-test-suite"
        criterion = 0

        def cases(self, rng, n, bound):
            yield {"x": rng.randint(0, 9)}

        def check(self, n, case, bound, ctx):
            return "always fails"

    suites.SUITES[Broken.name] = Broken()
    try:
        path = tmp_path / "fail.json"
        code, out, _ = run(capsys, "verify", Broken.name, "--rank", "3", "--save-failures", str(path))
        assert code == 1 and out.startswith("FAIL")
        code, out, _ = run(capsys, "verify", "--replay", str(path))
        assert code == 1 and "FAIL" in out
    finally:
        del suites.SUITES[Broken.name]


@pytest.mark.parametrize(
    "argv",
    [
        ["frob"],
        ["word"],
        ["verify", "nope"],
        ["verify"],
        ["aut", "apply", "F:3", "1", ],
        ["word", "normalize", "1.x"],
        ["star", "canon", "weird", "--rank", "5"],
        ["complex", "adjacent", "Z", "std:1", "std:2", "--rank", "5"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_usage_error_lists_forms(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert "valid forms" in err and "scott-swarup" in err
