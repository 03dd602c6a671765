"""Timing comparison: compiled kernel backend vs the pure-Python twin.

Runs the hot primitives on fixed random workloads, then times one full gap
search end to end in each backend via subprocesses (the backend is chosen
at import, so a fresh interpreter is needed per side).

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import random
import subprocess
import sys
import time


def load_backends():
    from fgap.kernels import _pure
    try:
        from fgap.kernels import _ck
    except ImportError:
        _ck = None
    return _pure, _ck


def workloads(rng):
    polys = [[rng.randint(-50, 50) for _ in range(rng.randint(3, 9))]
             for _ in range(120)]
    polys = [p for p in polys if p[-1]]
    pairs = [(a, b) for a, b in zip(polys[::2], polys[1::2])]
    points = [(rng.randint(-99, 99), rng.randint(1, 40)) for _ in range(40)]
    return polys, pairs, points


def bench(mod, polys, pairs, points, repeat):
    out = {}

    def timed(name, fn):
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        out[name] = best

    chains = [mod.sturm_chain(p) for p in polys if len(p) > 2]
    timed("sturm_chain", lambda: [mod.sturm_chain(p) for p in polys
                                  if len(p) > 2])
    timed("varcount_at", lambda: [mod.varcount_at(c, p, q)
                                  for c in chains for p, q in points])
    timed("resultant", lambda: [mod.resultant(a, b) for a, b in pairs])
    timed("eval_qnum", lambda: [mod.eval_qnum(p, n, d)
                                for p in polys for n, d in points])
    return out


def bench_gap_search(env_extra):
    env = dict(os.environ)
    env.update(env_extra)
    code = ("import time; t0 = time.perf_counter(); "
            "from fgap.gapsearch import search_gap, QUAD_DEFAULT_HI; "
            "r = search_gap(QUAD_DEFAULT_HI); "
            "assert [c.poly.coeffs for c in r.survivors] == [(5, -5, 1)]; "
            "print('%.3f' % (time.perf_counter() - t0))")
    p = subprocess.run([sys.executable, "-c", code], env=env,
                       capture_output=True, text=True, check=True)
    return float(p.stdout.strip())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    pure, ck = load_backends()
    rng = random.Random(7)
    polys, pairs, points = workloads(rng)

    rows = [("pure", bench(pure, polys, pairs, points, args.repeat))]
    if ck is not None:
        rows.append(("c", bench(ck, polys, pairs, points, args.repeat)))
    else:
        print("compiled backend not built; showing pure only", file=sys.stderr)

    names = sorted(rows[0][1])
    print("%-14s" % "kernel" + "".join("%12s" % b for b, _ in rows) +
          ("%10s" % "speedup" if ck is not None else ""))
    for name in names:
        line = "%-14s" % name
        for _, res in rows:
            line += "%12.4f" % res[name]
        if ck is not None:
            line += "%9.2fx" % (rows[0][1][name] / rows[1][1][name])
        print(line)

    print()
    t_pure = bench_gap_search({"FGAP_PURE": "1"})
    print("gap search (pure backend): %7.3f s" % t_pure)
    if ck is not None:
        t_c = bench_gap_search({"FGAP_PURE": ""})
        print("gap search (c backend):    %7.3f s  (%.2fx)"
              % (t_c, t_pure / t_c))


if __name__ == "__main__":
    main()
