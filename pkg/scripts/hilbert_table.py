"""Hilbert series of Q[x]/I_{n,lambda,s} next to the substaircase degree counts."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from dsk.grobner import hilbert_series
from dsk.ideals import griffin_ideal
from dsk.shapes import admissible_words, substaircases
from dsk.verify import staircase_series, valid_triples


@dataclass
class HilbertConfig:
    max_n: int = 4
    max_s: int = 3


def run(cfg: HilbertConfig):
    for t in valid_triples(cfg.max_n, cfg.max_s):
        subs = substaircases(t.n, t.lam, t.s)
        hilb = hilbert_series(griffin_ideal(t))
        mark = "" if hilb == staircase_series(subs) else "  MISMATCH"
        words = len(admissible_words(t.n, t.lam, t.s))
        print(f"{t.label():<14} dim={sum(hilb):<4} words={words:<4} hilb={hilb}{mark}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=HilbertConfig.max_n)
    ap.add_argument("--max-s", type=int, default=HilbertConfig.max_s)
    a = ap.parse_args()
    run(HilbertConfig(a.max_n, a.max_s))


if __name__ == "__main__":
    main()
