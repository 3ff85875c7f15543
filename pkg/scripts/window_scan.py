#!/usr/bin/env python3
"""Scan the representation counts of a system over a range and write a
CSV of (n, count) plus a summary record to stderr."""

import argparse
import csv
import sys

from multrep import scan_counts, window_stats
from multrep.cli import parse_system_spec


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--system", required=True, help="e.g. s-inf:h=3,s=2")
    parser.add_argument("--lo", type=int, default=2)
    parser.add_argument("--hi", type=int, default=10_000)
    args = parser.parse_args()

    system = parse_system_spec(args.system)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "count"])
    writer.writerows(scan_counts(system, args.lo, args.hi))
    stats = window_stats(system, max(args.lo, 2), args.hi)
    print(f"window evidence: {stats.to_record()}", file=sys.stderr)


if __name__ == "__main__":
    main()
