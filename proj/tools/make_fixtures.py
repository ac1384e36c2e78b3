#!/usr/bin/env python3
"""Writes OEIS-style b-files for A000073, A001644 and A073145.

Each entry is generated from its OEIS definition, with the OEIS offset:
  A000073  a(n) = a(n-1) + a(n-2) + a(n-3), a(0) = a(1) = 0, a(2) = 1
  A001644  a(n) = a(n-1) + a(n-2) + a(n-3), a(0) = 3, a(1) = 1, a(2) = 3
  A073145  a(n) = -a(n-1) - a(n-2) + a(n-3), a(0) = 3, a(1) = -1, a(2) = -1
"""
import argparse
import pathlib

ENTRIES = {
    "A000073": ((0, 0, 1), (1, 1, 1)),
    "A001644": ((3, 1, 3), (1, 1, 1)),
    "A073145": ((3, -1, -1), (-1, -1, 1)),
}


def terms(seeds, coeffs, count):
    a = list(seeds)
    while len(a) < count:
        a.append(coeffs[0] * a[-1] + coeffs[1] * a[-2] + coeffs[2] * a[-3])
    return a[:count]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("outdir", type=pathlib.Path)
    parser.add_argument("--count", type=int, default=501)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for sid, (seeds, coeffs) in ENTRIES.items():
        lines = [f"# {sid}: terms 0..{args.count - 1}"]
        lines += [f"{n} {v}" for n, v in enumerate(terms(seeds, coeffs, args.count))]
        (args.outdir / f"b{sid[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
