"""Run the catalog scans (even multiplicities, ortho-derivative nonlinearity, power-function axis values)
and print a per-dimension summary.

    python3 scripts/catalog_scan.py --ns 4,6,8
"""

import argparse
from collections import defaultdict
from dataclasses import dataclass

from apnforge.theory.experiments import EXPERIMENTS


@dataclass
class Config:
    ns: tuple = (4, 6, 8)
    names: tuple = tuple(sorted(EXPERIMENTS))


def run(cfg: Config):
    for name in cfg.names:
        rows = EXPERIMENTS[name](cfg.ns)
        print(f"== {name} ({len(rows)} functions)")
        by_n = defaultdict(list)
        for row in rows:
            by_n[row["n"]].append(row)
        for n, group in sorted(by_n.items()):
            for row in group:
                rest = {k: v for k, v in row.items() if k not in ("n", "function")}
                print(f"  n={n:<2} {row['function']:<24} {rest}")


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--ns", default="4,6,8")
    p.add_argument("--only", choices=sorted(EXPERIMENTS))
    a = p.parse_args()
    names = (a.only,) if a.only else Config.names
    run(Config(tuple(int(x) for x in a.ns.split(",")), names))
