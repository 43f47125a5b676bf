#!/usr/bin/env python3
"""Closes gaps in a Hejhal scan using trace-formula windows.

Reads a candidate list (R parity a2 ...), runs `maass_search window` over
[tmin, tmax], and rescans every window whose deficit exceeds 0.3 with a
finer step. Repeats until the windows agree or the round limit is hit,
then writes the eigenvalue file with its header.
"""

import argparse
import subprocess
import sys


def read_candidates(path):
    out = []
    with open(path) as f:
        for line in f:
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            # a bare ordinate list (parity unknown) is accepted too
            if len(parts) >= 3:
                out.append((float(parts[0]), int(parts[1]), float(parts[2])))
            else:
                out.append((float(parts[0]), 0, 0.0))
    return sorted(out)


def write_ordinates(path, cands):
    with open(path, "w") as f:
        for r, _, _ in cands:
            f.write(f"{r:.12f}\n")


def windows(tool, ords, tmin, tmax, step):
    res = subprocess.run([tool, "window", ords, str(tmin), str(tmax), str(step)],
                         check=True, capture_output=True, text=True).stdout
    rows = []
    for line in res.splitlines():
        t, pred, have, diff = line.split()
        rows.append((float(t), float(diff)))
    return rows


def clusters(rows, thresh):
    bad = [t for t, d in rows if abs(d) > thresh]
    out = []
    for t in bad:
        if out and t - out[-1][1] <= 1.0:
            out[-1][1] = t
        else:
            out.append([t, t])
    return out


def local_scan(tool, lo, hi, scale):
    res = subprocess.run([tool, "local", str(lo), str(hi), str(scale)],
                         check=True, capture_output=True, text=True).stdout
    return [(float(a), int(b), float(c)) for a, b, c in (l.split() for l in res.splitlines())]


def merge(cands, new):
    added = 0
    for r, p, a2 in new:
        if any((q == p or q == 0) and abs(s - r) < 1e-7 for s, q, _ in cands):
            continue
        cands.append((r, p, a2))
        added += 1
    cands.sort()
    return added


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("tool")
    ap.add_argument("candidates")
    ap.add_argument("output")
    ap.add_argument("--tmin", type=float, default=5.0)
    ap.add_argument("--tmax", type=float, default=205.0)
    ap.add_argument("--rounds", type=int, default=4)
    args = ap.parse_args()

    cands = read_candidates(args.candidates)
    ords = args.output + ".ords"
    scale = 0.02
    for rnd in range(args.rounds):
        write_ordinates(ords, cands)
        rows = windows(args.tool, ords, args.tmin, args.tmax, 0.25)
        worst = max(abs(d) for _, d in rows)
        cl = clusters(rows, 0.3)
        print(f"round {rnd}: {len(cands)} forms, worst window deficit {worst:.2e}, {len(cl)} gaps", file=sys.stderr)
        if not cl:
            break
        for lo, hi in cl:
            new = local_scan(args.tool, lo - 1.5, hi + 1.5, scale)
            n = merge(cands, new)
            print(f"  [{lo - 1.5:.2f}, {hi + 1.5:.2f}] +{n}", file=sys.stderr)
        scale /= 2
    for r, p, a2 in cands:
        print(f"{r:.12f} {p:+d} {a2:+.10f}")


if __name__ == "__main__":
    main()
