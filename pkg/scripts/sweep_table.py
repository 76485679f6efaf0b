"""Desk-scale sweep: one row per check with pass/fail/skip counts and total time.

    python scripts/sweep_table.py --max-n 4 --max-s 3 --checks C1,C2,C3,C7
"""

from __future__ import annotations

import argparse
import time
from collections import defaultdict
from dataclasses import dataclass, field

from dsk.verify import CHECK_IDS, sweep


@dataclass
class SweepConfig:
    max_n: int = 3
    max_s: int = 2
    checks: list[str] = field(default_factory=lambda: list(CHECK_IDS))
    seed: int = 0
    jobs: int = 1
    audit: bool = False


def run(cfg: SweepConfig) -> list[tuple[str, int, int, int, int]]:
    start = time.perf_counter()
    reports = sweep(cfg.max_n, cfg.max_s, cfg.checks, seed=cfg.seed, jobs=cfg.jobs, audit=cfg.audit)
    wall = time.perf_counter() - start
    rows = defaultdict(lambda: [0, 0, 0, 0])
    for r in reports:
        row = rows[r.check]
        row[{"pass": 0, "fail": 1, "skipped": 2}[r.verdict]] += 1
        row[3] += r.millis
    print(f"{'check':<6}{'pass':>6}{'fail':>6}{'skip':>6}{'ms':>9}")
    for check in cfg.checks:
        p, f, s, ms = rows[check]
        print(f"{check:<6}{p:>6}{f:>6}{s:>6}{ms:>9}")
    print(f"{len(reports)} reports in {wall:.1f}s")
    for r in reports:
        if not r.passed:
            print(r.line(), r.witness)
    return [(c, *rows[c]) for c in cfg.checks]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--max-s", type=int, default=SweepConfig.max_s)
    ap.add_argument("--checks", default="all")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--audit", action="store_true")
    a = ap.parse_args()
    checks = list(CHECK_IDS) if a.checks == "all" else a.checks.split(",")
    run(SweepConfig(a.max_n, a.max_s, checks, a.seed, a.jobs, a.audit))


if __name__ == "__main__":
    main()
