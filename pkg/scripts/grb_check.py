"""Predicted profiles of G_{r,b} and, where feasible, the oracle's answer.

    python3 scripts/grb_check.py --r-max 8 --oracle 3,2
"""

import argparse
import time

from beit import formulas as F
from beit import graphs as G
from beit.resolution import betti_table, summarize


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r-max", type=int, default=8)
    ap.add_argument("--oracle", action="append", default=[], help="r,b pairs to compute exactly")
    args = ap.parse_args()

    print(f"{'r':>2} {'b':>2} {'n':>3} {'pd':>3} {'depth':>5} {'chain':>5}  extremal")
    for r in range(2, args.r_max + 1):
        for b in range(1, r):
            q = F.grb_profile(r, b)
            chain = F.predict_depth(G.construct_grb(r, b))
            ext = " ".join(f"({i},{j})" for i, j, _ in q.extremal)
            print(f"{r:>2} {b:>2} {q.n:>3} {q.p:>3} {q.depth:>5} {chain:>5}  {ext}")

    for spec in args.oracle:
        r, b = (int(x) for x in spec.split(","))
        g = G.construct_grb(r, b)
        t0 = time.perf_counter()
        t = betti_table(g, cap=g.n)
        s = summarize(t, g)
        q = F.grb_profile(r, b)
        print(f"\nG_({r},{b}), {g.n} vertices, oracle in {time.perf_counter() - t0:.1f}s")
        print(t.diagram())
        print(f"pd {s.pd} (pred {q.p})  depth {s.depth} (pred {q.depth})  reg {s.reg} (pred {r})")
        print(f"extremal {list(s.extremal)} (pred {list(q.extremal)})")


if __name__ == "__main__":
    main()
