"""Command-line interface: ``ucoxeter <group> <command> ...``.

Input forms
  word        dotted letters, ``1.2.3``; ``e`` is the identity
  subgroup    comma-separated generator words, ``2,3,1.4.1``
  aut         ``*``-separated family terms composed left to right, e.g.
              ``sigma:2,1*F:3*Fw:4,1.2*ad:1.3*swap:1,2*id``, or a JSON
              document (inline or a path ending in .json)
  star        ``std:1,2,3`` (standard star with that center, optionally
              ``std:1,2@AUT``), ``ff:GENS`` (one-edge star of a corank-1
              factor), ``hex:CODE|CODE`` (corank-1 codes), or JSON

Exit status
  0  success
  1  a verification or equivariance check failed
  2  usage error (the valid forms are printed to stderr)

Wall-clock times go to stderr so stdout is reproducible.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import aut as A
from . import complexes as C
from . import splitting as S
from . import subgroup as G
from . import suites
from .word import (
    RankError,
    are_conjugate,
    conjugacy_key,
    cyclic_reduce,
    format_word,
    parse_word,
)

USAGE_FORMS = """valid forms:
  ucoxeter word normalize WORD [--rank n]
  ucoxeter word conj WORD WORD [--rank n]
  ucoxeter aut compose AUT AUT --rank n
  ucoxeter aut apply AUT WORD --rank n
  ucoxeter aut outer-eq AUT AUT --rank n
  ucoxeter aut cn AUT --rank n
  ucoxeter aut family NAME [PARAM ...] --rank n
  ucoxeter subgroup core|member|conj|freefactor|intersect ... --rank n
  ucoxeter star make|canon|act|compatible|refine|collapse ... --rank n
  ucoxeter complex adjacent|triangle|ball|induce|export ... --rank n
  ucoxeter verify SUITE|all [--rank n ...] [--seed s] [--bound b] [--replay FILE]
suites: """ + ", ".join(suites.SUITE_ORDER)


class UsageError(Exception):
    pass


# -- input parsing ---------------------------------------------------------


def _need_rank(args) -> int:
    if args.rank is None:
        raise UsageError("this command needs --rank")
    return args.rank


def _load_json(text: str):
    if text.endswith(".json") and os.path.exists(text):
        with open(text) as fh:
            return json.load(fh)
    return json.loads(text)


def _word(text: str, n: int | None):
    return parse_word(text, n)


def _gens(text: str, n: int):
    text = text.strip()
    if text in ("", "e"):
        return []
    return [parse_word(t, n) for t in text.split(",")]


def _core(text: str, n: int):
    return G.core_from_generators(n, _gens(text, n))


def parse_aut(text: str, n: int) -> A.Automorphism:
    text = text.strip()
    if text.startswith("{") or text.endswith(".json"):
        f = A.from_json(_load_json(text))
        if f.n != n:
            raise RankError(f"automorphism has rank {f.n}, expected {n}")
        return f
    out = A.identity(n)
    for term in text.split("*"):
        name, _, rest = term.strip().partition(":")
        params = [p for p in rest.split(",") if p] if rest else []
        out = A.compose(out, A.named_family(name, n, *params))
    return out


def parse_star(text: str, n: int) -> S.StarClass:
    text = text.strip()
    if text.startswith("{") or text.endswith(".json"):
        d = _load_json(text)
        if "corank1" in d:
            s = S.star_from_json(d)
        else:
            s = S.star_class(S.tree_from_json(d))
        if s.n != n:
            raise RankError(f"star has rank {s.n}, expected {n}")
        return s
    head, _, rest = text.partition(":")
    if head == "std":
        center, _, aut_text = rest.partition("@")
        letters = [int(x) for x in center.split(",") if x]
        tree = S.standard_star(n, letters)
        if aut_text:
            tree = S.act_tree(parse_aut(aut_text, n), tree)
        return S.star_class(tree)
    if head == "ff":
        return S.one_edge_star(G.factor_class(_core(rest, n)))
    if head == "hex":
        return S.refine([G.class_from_hex(h) for h in rest.split("|") if h])
    raise UsageError(f"cannot parse star {text!r}")


# -- output ----------------------------------------------------------------


def _emit(args, text: str | None = None, doc=None):
    if args.json and doc is not None:
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif text is not None:
        print(text)
    else:
        print(json.dumps(doc, indent=2, sort_keys=True))


def _star_text(s: S.StarClass) -> str:
    lines = [f"W{s.k}-star, rank {s.n}, {len(s.corank1)} corank-1 classes"]
    for c in s.corank1:
        lines.append(f"  {c.hex()}  <{', '.join(format_word(w) for w in c.gens)}>")
    return "\n".join(lines)


def _opt_word(w):
    return None if w is None else format_word(w)


# -- word ------------------------------------------------------------------


def cmd_word_normalize(args):
    w = _word(args.word, args.rank)
    core, conj = cyclic_reduce(w)
    _emit(args, format_word(w), {"word": format_word(w), "length": len(w), "cyclic_core": format_word(core), "conjugator": format_word(conj)})
    return 0


def cmd_word_conj(args):
    n = args.rank or max(_word(args.u, None).n, _word(args.v, None).n)
    u, v = _word(args.u, n), _word(args.v, n)
    g = are_conjugate(u, v)
    key = ".".join(map(str, conjugacy_key(u)))
    _emit(args, "none" if g is None else format_word(g), {"conjugate": g is not None, "conjugator": _opt_word(g), "key": key})
    return 0


# -- aut -------------------------------------------------------------------


def _aut_doc(f):
    d = {"rank": f.n, "images": [format_word(w) for w in f.images], "class_permutation": list(f.class_perm)}
    if f.moves is not None:
        d["moves"] = [A.move_to_json(m) for m in f.moves]
    return d


def _aut_text(f):
    return "\n".join(f"x{i + 1} -> {format_word(w)}" for i, w in enumerate(f.images))


def cmd_aut_compose(args):
    n = _need_rank(args)
    f = A.compose(parse_aut(args.f, n), parse_aut(args.g, n))
    _emit(args, _aut_text(f), _aut_doc(f))
    return 0


def cmd_aut_apply(args):
    n = _need_rank(args)
    w = A.apply(parse_aut(args.f, n), _word(args.word, n))
    _emit(args, format_word(w), {"image": format_word(w)})
    return 0


def cmd_aut_outer_eq(args):
    n = _need_rank(args)
    h = A.equal_outer(parse_aut(args.f, n), parse_aut(args.g, n))
    text = "no" if h is None else f"yes {format_word(h)}"
    _emit(args, text, {"equal": h is not None, "conjugator": _opt_word(h)})
    return 0


def cmd_aut_cn(args):
    n = _need_rank(args)
    f = parse_aut(args.f, n)
    inside = A.in_Cn(f)
    perm = " ".join(map(str, f.class_perm))
    _emit(args, f"{'yes' if inside else 'no'} ({perm})", {"in_Cn": inside, "class_permutation": list(f.class_perm)})
    return 0


def cmd_aut_family(args):
    n = _need_rank(args)
    f = A.named_family(args.name, n, *args.params)
    _emit(args, _aut_text(f), _aut_doc(f))
    return 0


# -- subgroup --------------------------------------------------------------


def cmd_subgroup_core(args):
    n = _need_rank(args)
    core = _core(args.gens, n)
    if args.cyclic:
        core = G.core_from_code(core.code)
    if args.format == "dot":
        print(G.to_dot(core), end="")
    elif args.format == "json" or args.json:
        print(json.dumps(G.to_json(core), indent=2, sort_keys=True))
    else:
        k, r = G.kurosh_signature(core)
        print(f"vertices {core.nv}, signature ({k}, {r}), code {G.factor_class(core).hex()}")
    return 0


def cmd_subgroup_member(args):
    n = _need_rank(args)
    ok = G.member(_core(args.gens, n), _word(args.word, n))
    _emit(args, "yes" if ok else "no", {"member": ok})
    return 0


def cmd_subgroup_conj(args):
    n = _need_rank(args)
    g = G.conjugate_subgroups(_core(args.a, n), _core(args.b, n))
    _emit(args, "none" if g is None else format_word(g), {"conjugate": g is not None, "conjugator": _opt_word(g)})
    return 0


def cmd_subgroup_freefactor(args):
    n = _need_rank(args)
    v = G.is_free_factor(_core(args.gens, n), depth=args.depth)
    doc = {"status": v.status, "detail": v.detail, "depth": v.depth}
    text = v.status
    if v.witness is not None:
        doc["witness"] = _aut_doc(v.witness)
        doc["letters"] = list(v.letters)
        text += f" (standard letters {','.join(map(str, v.letters))}, {len(v.witness.moves or ())} moves)"
    elif v.detail:
        text += f" ({v.detail})"
    _emit(args, text, doc)
    return 0


def cmd_subgroup_intersect(args):
    n = _need_rank(args)
    core = G.intersect(_core(args.a, n), _core(args.b, n))
    gens = [format_word(w) for w in core.gens]
    k, r = G.kurosh_signature(core)
    _emit(args, "<" + ", ".join(gens) + ">", {"generators": gens, "signature": [k, r]})
    return 0


# -- star ------------------------------------------------------------------


def _emit_star(args, s: S.StarClass, with_witness: bool = False):
    if args.format == "dot":
        if s.witness is None:
            raise UsageError("DOT output needs a witness tree")
        print(S.tree_to_dot(s.witness), end="")
    else:
        _emit(args, _star_text(s), s.to_json(with_witness))


def cmd_star_make(args):
    n = _need_rank(args)
    center = [int(x) for x in args.center.split(",") if x]
    tree = S.standard_star(n, center)
    if args.aut:
        tree = S.act_tree(parse_aut(args.aut, n), tree)
    rep = S.validate(tree)
    if not rep.ok:
        print(f"invalid star: {rep.message}", file=sys.stderr)
        return 1
    _emit_star(args, S.star_class(tree), True)
    return 0


def cmd_star_canon(args):
    n = _need_rank(args)
    _emit_star(args, parse_star(args.star, n))
    return 0


def cmd_star_act(args):
    n = _need_rank(args)
    _emit_star(args, S.act(parse_aut(args.f, n), parse_star(args.star, n)))
    return 0


def cmd_star_compatible(args):
    n = _need_rank(args)
    ok = S.is_compatible(parse_star(args.s, n), parse_star(args.t, n))
    _emit(args, "yes" if ok else "no", {"compatible": ok})
    return 0


def cmd_star_refine(args):
    n = _need_rank(args)
    classes = []
    for text in args.stars:
        classes.extend(parse_star(text, n).corank1)
    _emit_star(args, S.refine(classes), True)
    return 0


def cmd_star_collapse(args):
    n = _need_rank(args)
    s = parse_star(args.star, n)
    if not 0 <= args.keep < len(s.corank1):
        raise UsageError(f"--keep must be in 0..{len(s.corank1) - 1}")
    _emit_star(args, S.collapse_to(s, s.corank1[args.keep]))
    return 0


# -- complex ---------------------------------------------------------------


def cmd_complex_adjacent(args):
    n = _need_rank(args)
    kind = C.ComplexKind.parse(args.kind)
    ok = C.adjacent(kind, parse_star(args.s, n), parse_star(args.t, n))
    _emit(args, "yes" if ok else "no", {"adjacent": ok, "kind": kind.value})
    return 0


def cmd_complex_triangle(args):
    n = _need_rank(args)
    if args.model:
        left, right = suites.model_triangles(n)
        tri = left if args.model == "left" else right
    elif len(args.stars) == 3:
        tri = [parse_star(t, n) for t in args.stars]
    else:
        raise UsageError("give three stars or --model left|right")
    rep = C.triangle_report(*tri, bound=args.bound)
    fourth = rep.get("fourth_vertex")
    text = f"type {rep['type']}; fourth vertex: " + ("none within bound" if fourth is None else "found")
    _emit(args, text, rep)
    return 0


def _emit_ball(args, kind, ball):
    fmt = args.format or ("json" if args.json else None)
    if fmt:
        print(C.export(kind, ball, fmt), end="")
    else:
        more = " (truncated)" if ball.truncated else ""
        print(f"{len(ball.vertices)} vertices, {len(ball.edges)} edges{more}")


def cmd_complex_ball(args):
    n = _need_rank(args)
    kind = C.ComplexKind.parse(args.kind)
    ball = C.neighbors_bounded(kind, parse_star(args.star, n), args.complexity, depth=args.depth)
    _emit_ball(args, kind, ball)
    return 0


def cmd_complex_export(args):
    n = _need_rank(args)
    kind = C.ComplexKind.parse(args.kind)
    ball = C.ball_from_vertices(kind, [parse_star(t, n) for t in args.stars])
    if args.format is None:
        args.format = "json"
    _emit_ball(args, kind, ball)
    return 0


def cmd_complex_induce(args):
    n = _need_rank(args)
    f = parse_aut(args.f, n)
    s = parse_star(args.star, n)
    if args.map == "x-xprime":
        s0 = s.corank1[args.s0]
        images = {t: S.act(f, t) for t in C.intermediates(s, s0)}
        out = C.induced_image_X_to_Xprime(s, s0, images)
    else:
        out = C.induced_image_Y_to_L([S.act(f, S.one_edge_star(c)) for c in s.corank1])
    ok = out == S.act(f, s)
    doc = {"image": out.to_json(), "equivariant": ok}
    _emit(args, _star_text(out) + f"\nequivariant: {'yes' if ok else 'no'}", doc)
    return 0 if ok else 1


# -- verify ----------------------------------------------------------------


def _replay(args):
    data = _load_json(args.replay)
    if isinstance(data, dict) and "failures" in data:
        payloads = data["failures"]
    elif isinstance(data, list):
        payloads = data
    else:
        payloads = [data]
    bad = 0
    for p in payloads:
        msg = suites.replay(p)
        status = "FAIL" if msg is not None else "pass"
        bad += msg is not None
        print(f"replay {p['suite']} rank {p['rank']}: {status}" + (f": {msg}" if msg else ""))
    return 1 if bad else 0


def cmd_verify(args):
    if args.replay:
        return _replay(args)
    if args.suite is None:
        raise UsageError("verify needs a suite name or --replay FILE")
    names = suites.SUITE_ORDER if args.suite == "all" else [args.suite]
    for name in names:
        if name not in suites.SUITES:
            raise UsageError(f"unknown suite {name!r}")
    results = []
    failed = False
    for name in names:
        res = suites.run_suite(name, ranks=args.rank, seed=args.seed, bound=args.bound)
        results.append(res)
        failed |= not res.ok
        print(f"{name}: wall {res.wall:.2f}s", file=sys.stderr)
        if not args.json:
            status = "PASS" if res.ok else "FAIL"
            print(
                f"{status} {name} (criterion {res.criterion}) ranks {','.join(map(str, res.ranks))} "
                f"seed {res.seed} bound {res.bound}: {res.cases} cases, {len(res.failures)} failures"
            )
            for f in res.failures:
                print("  " + json.dumps(f, sort_keys=True))
    if args.json:
        doc = [r.to_json() for r in results]
        print(json.dumps(doc[0] if len(doc) == 1 else doc, indent=2, sort_keys=True))
    if args.save_failures:
        payloads = [f for r in results for f in r.failures]
        with open(args.save_failures, "w") as fh:
            json.dump(payloads, fh, indent=2, sort_keys=True)
    return 1 if failed else 0


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", "-n", type=int, default=None, help="rank n of W_n")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(
        prog="ucoxeter",
        description="Words, automorphisms, subgroups, splittings and star complexes of W_n.",
        epilog=USAGE_FORMS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    top = p.add_subparsers(dest="group", required=True)

    def leaf(sub, name, func, help_text, parents=(common,)):
        q = sub.add_parser(name, parents=list(parents), help=help_text)
        q.set_defaults(func=func)
        return q

    g = top.add_parser("word", help="reduced words").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "normalize", cmd_word_normalize, "reduce a word")
    q.add_argument("word")
    q = leaf(g, "conj", cmd_word_conj, "conjugacy test with witness g (g u g^-1 = v)")
    q.add_argument("u")
    q.add_argument("v")

    g = top.add_parser("aut", help="automorphisms").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "compose", cmd_aut_compose, "f o g")
    q.add_argument("f")
    q.add_argument("g")
    q = leaf(g, "apply", cmd_aut_apply, "image of a word")
    q.add_argument("f")
    q.add_argument("word")
    q = leaf(g, "outer-eq", cmd_aut_outer_eq, "equality in Out(W_n)")
    q.add_argument("f")
    q.add_argument("g")
    q = leaf(g, "cn", cmd_aut_cn, "membership in C_n")
    q.add_argument("f")
    q = leaf(g, "family", cmd_aut_family, "named generator: sigma j i, swap i j, F i, Fw i w, ad g, id")
    q.add_argument("name")
    q.add_argument("params", nargs="*")

    g = top.add_parser("subgroup", help="core graphs").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "core", cmd_subgroup_core, "core graph of a subgroup")
    q.add_argument("gens")
    q.add_argument("--format", choices=["text", "json", "dot"], default="text")
    q.add_argument("--cyclic", action="store_true", help="basepoint-free cyclic core")
    q = leaf(g, "member", cmd_subgroup_member, "membership")
    q.add_argument("gens")
    q.add_argument("word")
    q = leaf(g, "conj", cmd_subgroup_conj, "conjugacy of subgroups")
    q.add_argument("a")
    q.add_argument("b")
    q = leaf(g, "freefactor", cmd_subgroup_freefactor, "free factor decision with witness")
    q.add_argument("gens")
    q.add_argument("--depth", type=int, default=6)
    q = leaf(g, "intersect", cmd_subgroup_intersect, "intersection")
    q.add_argument("a")
    q.add_argument("b")

    star_fmt = argparse.ArgumentParser(add_help=False)
    star_fmt.add_argument("--format", choices=["text", "json", "dot"], default=None)
    g = top.add_parser("star", help="star splittings").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "make", cmd_star_make, "standard star, optionally moved", (common, star_fmt))
    q.add_argument("--center", required=True, help="comma-separated center letters")
    q.add_argument("--aut", default=None)
    q = leaf(g, "canon", cmd_star_canon, "canonical corank-1 codes", (common, star_fmt))
    q.add_argument("star")
    q = leaf(g, "act", cmd_star_act, "f . star", (common, star_fmt))
    q.add_argument("f")
    q.add_argument("star")
    q = leaf(g, "compatible", cmd_star_compatible, "common refinement test")
    q.add_argument("s")
    q.add_argument("t")
    q = leaf(g, "refine", cmd_star_refine, "common refinement of stars", (common, star_fmt))
    q.add_argument("stars", nargs="+")
    q = leaf(g, "collapse", cmd_star_collapse, "collapse onto one corank-1 class", (common, star_fmt))
    q.add_argument("star")
    q.add_argument("--keep", type=int, default=0, help="index of the corank-1 class kept")

    ball_fmt = argparse.ArgumentParser(add_help=False)
    ball_fmt.add_argument("--format", choices=["json", "dot"], default=None)
    g = top.add_parser("complex", help="star complexes").add_subparsers(dest="cmd", required=True)
    q = leaf(g, "adjacent", cmd_complex_adjacent, "edge test in a complex")
    q.add_argument("kind")
    q.add_argument("s")
    q.add_argument("t")
    q = leaf(g, "triangle", cmd_complex_triangle, "classify a triangle")
    q.add_argument("stars", nargs="*")
    q.add_argument("--model", choices=["left", "right"], default=None)
    q.add_argument("--bound", type=int, default=16)
    q = leaf(g, "ball", cmd_complex_ball, "bounded neighborhood", (common, ball_fmt))
    q.add_argument("kind")
    q.add_argument("star")
    q.add_argument("--complexity", type=int, default=16)
    q.add_argument("--depth", type=int, default=1)
    q = leaf(g, "export", cmd_complex_export, "induced subgraph on given stars", (common, ball_fmt))
    q.add_argument("kind")
    q.add_argument("stars", nargs="+")
    q = leaf(g, "induce", cmd_complex_induce, "induced map on the image of a star under f")
    q.add_argument("map", choices=["x-xprime", "y-l"])
    q.add_argument("f")
    q.add_argument("star")
    q.add_argument("--s0", type=int, default=0, help="index of the distinguished corank-1 class")

    q = top.add_parser("verify", parents=[common], help="randomized acceptance suites")
    q.set_defaults(func=cmd_verify, rank=None)
    q.add_argument("suite", nargs="?", default=None, help="suite name or 'all'")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--bound", type=int, default=16)
    q.add_argument("--replay", default=None, help="JSON file of failure payloads")
    q.add_argument("--save-failures", default=None, help="write failure payloads to this file")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args_list = list(sys.argv[1:] if argv is None else argv)
    # verify accepts several --rank flags; collect them before argparse sees them
    ranks = None
    if args_list and args_list[0] == "verify":
        ranks, rest, k = [], [args_list[0]], 1
        while k < len(args_list):
            tok = args_list[k]
            if tok in ("--rank", "-n") and k + 1 < len(args_list):
                ranks.append(args_list[k + 1])
                k += 2
                continue
            if tok.startswith("--rank="):
                ranks.append(tok.split("=", 1)[1])
                k += 1
                continue
            rest.append(tok)
            k += 1
        args_list = rest
    try:
        args = parser.parse_args(args_list)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.perf_counter()
    try:
        if ranks is not None:
            try:
                args.rank = [int(r) for x in ranks for r in x.split(",")] or None
            except ValueError:
                raise UsageError(f"bad --rank value in {ranks}") from None
        code = args.func(args)
    except (UsageError, RankError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(USAGE_FORMS, file=sys.stderr)
        return 2
    print(f"wall {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
