"""Wheel Betti diagrams: closed form vs cone formula over C_n vs direct oracle.

    python3 scripts/wheel_tables.py --max-n 6
"""

import argparse
import time

from beit import formulas as F
from beit import graphs as G
from beit.resolution import betti_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--no-oracle", action="store_true", help="skip the direct W_n oracle")
    args = ap.parse_args()

    for n in range(4, args.max_n + 1):
        cyc = betti_table(G.cycle(n), cap=n)
        via_cone = F.betti_cone_formula(cyc, G.clique_vector(G.cycle(n)), n)
        print(f"W_{n}: pd={via_cone.pd} reg={via_cone.reg}")
        print(via_cone.diagram())
        if n >= 5:
            print("  closed form == cone formula:", F.wheel_betti(n) == via_cone)
        if not args.no_oracle:
            t0 = time.perf_counter()
            direct = betti_table(G.wheel(n), cap=n + 1)
            print(f"  cone formula == oracle: {direct == via_cone}  ({time.perf_counter() - t0:.1f}s)")
        print()


if __name__ == "__main__":
    main()
