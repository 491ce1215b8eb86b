#!/usr/bin/env python3
"""Run the full verification sweeps at their default desk-scale ranges.

Covers the three bound-violation families, the impurity property, and the
validity checks for the bounds that do hold. Exits nonzero if any instance
fails its per-row assertions.
"""

import argparse
import sys
import time

from qlrc import SweepSpec, prime_powers, run_sweep

SWEEPS = [
    ("thm3", dict(q_limit=64, V_max=9)),
    ("thm4", dict(q_values=(3, 5, 7, 9, 11, 13))),
    ("thm5", dict(q_values=(3, 5, 7, 9, 11, 13))),
    ("prop_impure", dict(q_limit=16)),
    ("rem_valid", dict(q_limit=64, H_max=9, V_max=9)),
]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--budget", type=int, default=None,
                        help="enumeration budget for per-row oracles")
    args = parser.parse_args(argv)

    failed = 0
    for mode, cfg in SWEEPS:
        qs = cfg.get("q_values") or prime_powers(cfg["q_limit"])
        spec = SweepSpec(mode=mode, q_values=qs,
                         H_max=cfg.get("H_max"), V_max=cfg.get("V_max"),
                         budget=args.budget, jobs=args.jobs, collect=True)
        start = time.monotonic()
        res = run_sweep(spec)
        elapsed = time.monotonic() - start
        status = "ok" if res.ok else "FAILED"
        print(f"{mode:12s} rows={len(res.rows):5d} skipped={res.skipped:4d} "
              f"failures={len(res.failures):3d} {elapsed:6.2f}s {status}")
        for row in res.failures:
            print(f"  FAIL q={row.q} H={row.H} V={row.V} a={row.a} "
                  f"b={row.b}: {row.message}", file=sys.stderr)
        failed += len(res.failures)
    return 4 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
