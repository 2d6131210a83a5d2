#!/usr/bin/env python3
"""Run every built-in suite through the solver and print comparison tables.

Usage: python scripts/run_benchmarks.py [--seed N] [--out-dir DIR]
"""
import argparse
import pathlib
import sys

from kcut.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out-dir", default="bench_results")
    args = ap.parse_args()
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for suite in ("small", "planted", "stress"):
        print(f"=== suite {suite} ===")
        code = cli_main(["bench", "--suite", suite, "--seed", str(args.seed),
                         "--out", str(out / f"{suite}.json")])
        worst = max(worst, code)
        print()
    return worst


if __name__ == "__main__":
    sys.exit(main())
