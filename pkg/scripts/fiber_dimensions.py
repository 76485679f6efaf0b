"""Fiber dimensions of the equivariant ideal over many parameter values.

Specializes the reduced basis of J at random u-values, some with repeated
entries, and tabulates dim Q[x]/J(alpha) against the substaircase count.
Equal numbers everywhere are what a free module would produce.

    python scripts/fiber_dimensions.py --max-n 3 --max-s 2 --samples 20
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass
from fractions import Fraction

from dsk.grobner import Ideal, standard_monomials
from dsk.ideals import equivariant_ideal
from dsk.polynomials import GREVLEX, specialize
from dsk.shapes import substaircases
from dsk.verify import valid_triples


@dataclass
class FiberConfig:
    max_n: int = 3
    max_s: int = 2
    samples: int = 10
    seed: int = 0


def fiber_dim(triple, gb, alpha) -> int:
    subs = {f"u{j}": a for j, a in enumerate(alpha, start=1)}
    gens = tuple(p for p in (specialize(g, subs).to_ring(triple.x_ring) for g in gb) if p)
    return len(standard_monomials(Ideal(triple.x_ring, gens, GREVLEX)))


def draw(s: int, rng: random.Random) -> tuple[Fraction, ...]:
    pool = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(rng.randint(1, s))]
    return tuple(rng.choice(pool) for _ in range(s))


def run(cfg: FiberConfig):
    rng = random.Random(cfg.seed)
    print(f"{'triple':<14}{'rank':>6}{'min':>6}{'max':>6}{'repeated':>10}")
    for t in valid_triples(cfg.max_n, cfg.max_s):
        rank = len(substaircases(t.n, t.lam, t.s))
        gb = equivariant_ideal(t).groebner
        alphas = [draw(t.s, rng) for _ in range(cfg.samples)]
        dims = [fiber_dim(t, gb, a) for a in alphas]
        repeated = sum(len(set(a)) < len(a) for a in alphas)
        flag = "" if min(dims) == max(dims) == rank else "  <-- jump"
        print(f"{t.label():<14}{rank:>6}{min(dims):>6}{max(dims):>6}{repeated:>10}{flag}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=FiberConfig.max_n)
    ap.add_argument("--max-s", type=int, default=FiberConfig.max_s)
    ap.add_argument("--samples", type=int, default=FiberConfig.samples)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    run(FiberConfig(a.max_n, a.max_s, a.samples, a.seed))


if __name__ == "__main__":
    main()
