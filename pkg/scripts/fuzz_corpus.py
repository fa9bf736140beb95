"""Run the seeded invariant fuzz and print a per-k breakdown.

Usage: python3 scripts/fuzz_corpus.py [TRIALS] [JOBS]
"""

import sys
import time
from collections import Counter

from hedgehogs.fuzz import FuzzConfig, run_fuzz


def main(trials="1000", jobs="1"):
    cfg = FuzzConfig(trials=int(trials), jobs=int(jobs))
    t0 = time.perf_counter()
    results = run_fuzz(cfg)
    elapsed = time.perf_counter() - t0
    by_k = Counter(r.k for r in results)
    bad = [r for r in results if r.failures or r.numerical]
    print(f"{len(results)} trials in {elapsed:.1f}s, {len(bad)} failing")
    for k in sorted(by_k):
        print(f"  k={k}: {by_k[k]} trials")
    for r in bad[:10]:
        print(f"  trial {r.trial} k={r.k}: {r.failures or r.numerical}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
