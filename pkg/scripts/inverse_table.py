"""Reproduce the e_min / Kloosterman-bound table for x^-1 over odd n.

    python3 scripts/inverse_table.py --ns 3,5,7,9,11
    python3 scripts/inverse_table.py --ns 13,15 --histogram-only
"""

import argparse
import time
from dataclasses import dataclass

from apnforge.exclude import exclude_spectrum_fast
from apnforge.field import FieldSpec
from apnforge.theory.kloosterman import inverse_exclude_bound, kloosterman_table
from apnforge.vbf import from_inverse


@dataclass
class Config:
    ns: tuple = (3, 5, 7, 9, 11)
    histogram_only: bool = False


def run(cfg: Config):
    print(f"{'n':>3} {'e_min':>7} {'bound':>7} {'max|K-1|':>9} {'seconds':>8}")
    for n in cfg.ns:
        fs = FieldSpec.default(n)
        t0 = time.perf_counter()
        spec = exclude_spectrum_fast(from_inverse(fs), histogram_only=cfg.histogram_only or n > 13)
        dt = time.perf_counter() - t0
        table = kloosterman_table(fs)
        print(f"{n:>3} {spec.e_min:>7} {inverse_exclude_bound(table):>7} {table.max_dev:>9} {dt:>8.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--ns", default="3,5,7,9,11")
    p.add_argument("--histogram-only", action="store_true")
    a = p.parse_args()
    run(Config(tuple(int(x) for x in a.ns.split(",")), a.histogram_only))
