"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit
from array import array

from hessvar import kernels
from hessvar.roots import build_root_system
from hessvar.weyl import reflection_action


def root_tables(rs):
    slots = [[(i, c) for i, c in enumerate(rs.roots[k]) if c] for k in rs.positive]
    return (array("q", [s[0][0] for s in slots]), array("q", [s[0][1] for s in slots]),
            array("q", [s[1][0] if len(s) > 1 else -1 for s in slots]),
            array("q", [s[1][1] if len(s) > 1 else 0 for s in slots]))


def workloads():
    out = []
    for t, r in [("B", 4), ("D", 5), ("A", 6)]:
        rs = build_root_system(t, r)
        gens = [reflection_action(rs, a) for a in rs.simple]
        out.append((f"enumerate {rs.name}", lambda m, g=gens: m.enumerate_actions(g, 10**6)))
        actions = kernels._kernels_py.enumerate_actions(gens, 10**6)
        tab = root_tables(rs)
        out.append((f"inversion masks {rs.name}",
                    lambda m, a=actions, tb=tab: m.inversion_masks(a, *tb)))
    rng = random.Random(1)
    mats = [[[rng.randint(-9, 9) for _ in range(10)] for _ in range(8)] for _ in range(200)]
    out.append(("bareiss 200 x (8x10)", lambda m: [m.bareiss_rank(x) for x in mats]))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    mods = kernels.backends()
    names = [m.BACKEND for m in mods]
    print(f"{'workload':<28}" + "".join(f"{n:>12}" for n in names)
          + ("     speedup" if len(mods) > 1 else ""))
    for label, fn in workloads():
        times = [min(timeit.repeat(lambda: fn(m), number=1, repeat=args.repeat)) for m in mods]
        row = f"{label:<28}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[-1]:>11.1f}x"
        print(row)
    if len(mods) == 1:
        print("compiled backend not built; run `python3 setup.py build_ext --inplace`")


if __name__ == "__main__":
    main()
