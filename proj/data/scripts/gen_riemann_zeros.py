#!/usr/bin/env python3
"""Writes the ordinates of the first N nontrivial zeros of the Riemann zeta
function in the dataset text format (one ordinate per line, ascending)."""
import argparse
import sys

import mpmath


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    mpmath.mp.dps = 25
    ordinates = [mpmath.zetazero(n).imag for n in range(1, args.count + 1)]

    out = sys.stdout if args.out == "-" else open(args.out, "w")
    out.write("# source: mpmath.zetazero (Odlyzko-Schoenhage / Riemann-Siegel), mpmath %s\n"
              % mpmath.__version__)
    out.write("# content: ordinates of the first %d nontrivial zeros of zeta(s), ascending\n"
              % args.count)
    # complete up to the midpoint to the next zero is not known; use the last ordinate
    out.write("# complete_below: %s\n" % mpmath.nstr(ordinates[-1], 15))
    for g in ordinates:
        out.write(mpmath.nstr(g, 15) + "\n")
    if out is not sys.stdout:
        out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
