#!/usr/bin/env python3
"""Run the full verification suite and print the scenario table.

Same engine as `schurmann reproduce-paper`, exposed as a plain script so the
config is easy to tweak while experimenting:

    python3 scripts/run_scenarios.py --seed 0 --max-word-len 3
"""

import argparse
import sys

from schurmann import RunConfig, format_results, run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-word-len", dest="max_word_len", type=int, default=3)
    args = ap.parse_args()

    results = run_all(RunConfig(seed=args.seed, max_word_len=args.max_word_len))
    print(format_results(results))
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
