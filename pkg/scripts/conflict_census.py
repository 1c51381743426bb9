#!/usr/bin/env python3
"""Census of stage-1 conflicts and which exchange cases resolve them.

Sweeps seeds per regime, records how often the initial labelling is
already antimagic, and tabulates the conflict cases hit and the
exchanges applied.  Useful for judging how much work the resolution
stage actually does in practice.
"""

import argparse
import collections
import sys

from antimagic import gen_instance, label, min_feasible_n, verify_antimagic


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--per-regime", type=int, default=300)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args()

    regimes = ("main", "main_triple", "degen_i2", "degen_i3",
               "disc_u3_isolated")
    cases = collections.Counter()
    applied = collections.Counter()
    clean = collections.Counter()
    for target in regimes:
        lo = min_feasible_n(target)
        for k in range(args.per_regime):
            n = lo + k % (args.n_max - lo + 1)
            g = gen_instance(n, target, seed=args.seed + k)
            out = label(g, seed=args.seed + k)
            assert verify_antimagic(g, out.labelling).ok
            tr = out.resolution
            if tr is None or tr.case == "none":
                clean[target] += 1
            else:
                cases[(target, tr.case)] += 1
                for ex in tr.applied:
                    applied[ex.describe()] += 1

    total = args.per_regime
    print(f"{'regime':<18} {'clean':>6} {'conflicted':>11}")
    for t in regimes:
        print(f"{t:<18} {clean[t]:>6} {total - clean[t]:>11}")
    print("\nconflict cases hit:")
    for (t, case), cnt in sorted(cases.items()):
        print(f"  {t:<18} case {case:<6} x{cnt}")
    print("\nexchanges applied:")
    for name, cnt in sorted(applied.items()):
        print(f"  {name:<12} x{cnt}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
