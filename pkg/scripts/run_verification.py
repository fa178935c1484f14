"""Run every randomized suite at full scale and report one line each.

Usage: python3 scripts/run_verification.py [--seed N] [--scale FRACTION]
--scale 0.1 runs a quick smoke pass at a tenth of the counts.
"""

import argparse
import sys
import time

from artquot import SUITE_NAMES, run_suite

FULL_COUNTS = {
    "socle-equality": 200,
    "hs-duality": 200,
    "coreduced": 200,
    "ttf-duality": 100,
    "radical": 50,
}


def run(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--scale", type=float, default=1.0)
    args = parser.parse_args(argv)

    failures = 0
    for name in SUITE_NAMES:
        count = max(1, round(FULL_COUNTS[name] * args.scale))
        start = time.perf_counter()
        result = run_suite(name, count=count, seed=args.seed)
        elapsed = time.perf_counter() - start
        mark = "ok" if result.ok else "FAIL"
        print(
            f"{name:<16} {result.passed}/{count} {mark} ({elapsed:.2f}s)"
        )
        for failure in result.failures:
            print(f"  repro: {failure['repro']}", file=sys.stderr)
        failures += count - result.passed
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(run())
