"""Run every verification suite and write a JSON report.

    python3 scripts/run_verify.py [--extended] [--out results/verify.json]
"""

import argparse
import json
import time
from pathlib import Path

from beit.verify import SUITES, VerifyConfig, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--extended", action="store_true")
    ap.add_argument("--method", default="syzygy", choices=("syzygy", "koszul"))
    ap.add_argument("--out", default="results/verify.json")
    args = ap.parse_args()

    cfg = VerifyConfig(extended=args.extended, method=args.method)
    summary = {}
    for name in SUITES:
        t0 = time.perf_counter()
        reps = run_suite(name, cfg)[name]
        dt = time.perf_counter() - t0
        nfail = sum(not r.passed for r in reps)
        print(f"{name:18s} {len(reps):4d} instances  {nfail} failing  {dt:7.1f}s")
        summary[name] = {"instances": len(reps), "failing": nfail, "seconds": round(dt, 2),
                         "reports": [r.to_json() for r in sorted(reps, key=lambda r: r.instance)]}
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(summary, indent=1, sort_keys=True))
    print("wrote", out)


if __name__ == "__main__":
    main()
