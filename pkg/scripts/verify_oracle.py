#!/usr/bin/env python3
"""Differential experiment: random models and scripts through the efficient
implementation and the brute-force reference, side by side.

Example:
    python3 scripts/verify_oracle.py --trials 500 --max-nodes 10
"""
import argparse
import sys
import time

from dagmut import run_differential


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-nodes", type=int, default=10)
    parser.add_argument("--max-script", type=int, default=6)
    args = parser.parse_args()

    started = time.monotonic()
    report = run_differential(trials=args.trials, base_seed=args.seed,
                              max_nodes=args.max_nodes,
                              max_script=args.max_script)
    elapsed = time.monotonic() - started

    print(f"{report.passed_trials()}/{report.trials} trials equivalent "
          f"({report.steps_checked} operator steps, {elapsed:.2f}s)")
    for failure in report.failures:
        print(f"  trial {failure.trial} seed {failure.seed} step {failure.step} "
              f"[{failure.kind}] script '{failure.script}': {failure.detail}")
    return 0 if report.ok else 2


if __name__ == "__main__":
    sys.exit(main())
