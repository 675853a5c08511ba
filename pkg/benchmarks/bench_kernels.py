"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

Both backends get identical inputs and their outputs are compared before
anything is timed.
"""

import argparse
import random
import sys
import timeit

from ucoxeter import _pykernels, kernels
from ucoxeter.subgroup import core_from_generators
from ucoxeter.suites import random_letters
from ucoxeter.word import Word


def make_inputs(seed):
    rng = random.Random(seed)
    seqs = [[rng.randint(1, 6) for _ in range(rng.randint(10, 60))] for _ in range(500)]
    folds = []
    for _ in range(200):
        n = rng.randint(3, 6)
        gens = [Word(n, tuple(random_letters(rng, n, rng.randint(1, 9)))) for _ in range(rng.randint(1, 4))]
        edges, nverts = [], 1
        for w in gens:
            prev = 0
            for k, a in enumerate(w.letters):
                nxt = 0 if k == len(w) - 1 else nverts
                if nxt:
                    nverts += 1
                edges.append((prev, a, nxt))
                prev = nxt
        folds.append((nverts, n, edges))
    cores = []
    for nverts, n, edges in folds:
        count, table = _pykernels.fold(nverts, n, edges)
        cores.append((list(table), count, n))
    return seqs, folds, cores


def workloads(mod, seqs, folds, cores):
    return {
        "reduce_letters": lambda: [mod.reduce_letters(s) for s in seqs],
        "fold": lambda: [mod.fold(nv, n, e) for nv, n, e in folds],
        "min_code": lambda: [mod.min_code(t, nv, n) for t, nv, n in cores],
    }


def plain(x):
    """Lists and tuples compared alike, whichever backend produced them."""
    if isinstance(x, (list, tuple)):
        return tuple(plain(y) for y in x)
    return x


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    backends = kernels.backends()
    if "cython" not in backends:
        print("compiled extension not available; only the Python backend can run", file=sys.stderr)
    inputs = make_inputs(args.seed)
    jobs = {name: workloads(mod, *inputs) for name, mod in backends.items()}
    for kernel in jobs["python"]:
        results = {name: plain(jobs[name][kernel]()) for name in jobs}
        if len({repr(r) for r in results.values()}) != 1:
            print(f"backends disagree on {kernel}", file=sys.stderr)
            return 1
    print(f"seed {args.seed}, best of {args.repeat}")
    print(f"{'kernel':16s} " + " ".join(f"{name:>10s}" for name in jobs) + "   speedup")
    for kernel in jobs["python"]:
        times = {name: min(timeit.repeat(jobs[name][kernel], number=1, repeat=args.repeat)) for name in jobs}
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "       -"
        print(f"{kernel:16s} " + " ".join(f"{times[name] * 1e3:8.2f}ms" for name in jobs) + f" {speed}")
    # end-to-end: building core graphs goes through the active backend
    rng = random.Random(args.seed)
    gens = [[Word(5, tuple(random_letters(rng, 5, rng.randint(1, 9)))) for _ in range(3)] for _ in range(300)]
    t = min(timeit.repeat(lambda: [core_from_generators(5, g).code for g in gens], number=1, repeat=args.repeat))
    print(f"core+code x300 with active backend ({kernels.BACKEND}): {t * 1e3:.1f}ms")
    return 0


if __name__ == "__main__":
    sys.exit(main())
