"""Run the ten acceptance criteria and print one line per criterion."""
import argparse
import sys
import time

from skein.suites import CRITERIA, run_criterion


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("criteria", nargs="*", type=int, default=sorted(CRITERIA))
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()
    failed = 0
    for n in args.criteria:
        t = time.perf_counter()
        res = run_criterion(n, args.jobs)
        ok = all(r.ok for r in res)
        failed += not ok
        print(f"criterion {n:2d} {'PASS' if ok else 'FAIL'} {CRITERIA[n][0]} ({time.perf_counter() - t:.2f}s)")
        for r in res:
            if not r.ok:
                print(f"    FAIL {r.name}: {r.detail}")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
