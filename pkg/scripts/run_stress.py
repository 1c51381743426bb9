#!/usr/bin/env python3
"""Generate-label-verify sweep over all constructive regimes.

Prints a per-regime success table and the exchange-count histogram.
Equivalent to ``antimagic stress`` with wider defaults; exits non-zero
on any verification failure.
"""

import argparse
import sys

from antimagic.cli import cmd_stress


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=700)
    p.add_argument("--n-min", type=int, default=16)
    p.add_argument("--n-max", type=int, default=48)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--regimes",
                   default="main,main_triple,degen_i1,degen_i2,degen_i3,"
                           "disc_u3_isolated,disc_triple")
    return cmd_stress(p.parse_args())


if __name__ == "__main__":
    sys.exit(main())
