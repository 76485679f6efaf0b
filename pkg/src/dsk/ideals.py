"""Constructors for the Tanisaki, Griffin and equivariant ideals and for the
finite and universal point loci."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations, product
from typing import Sequence

from .grobner import GREVLEX, Ideal, PointLocus, intersect
from .polynomials import MonomialOrder, Poly, Ring, as_fraction, double_tanisaki, elementary
from .shapes import Frame, Partition, frame, p_value, validate_triple

DEFAULT_COMPONENT_BUDGET = 64


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ParameterTriple:
    n: int
    lam: Partition
    s: int

    def __post_init__(self):
        object.__setattr__(self, "lam", validate_triple(self.n, self.lam, self.s))

    @property
    def k(self) -> int:
        return sum(self.lam)

    @cached_property
    def frame(self) -> Frame:
        return frame(self.n, self.lam, self.s)

    @cached_property
    def x_ring(self) -> Ring:
        return Ring.xu(self.n)

    @cached_property
    def xu_ring(self) -> Ring:
        return Ring.xu(self.n, self.s)

    def label(self) -> str:
        lam = ",".join(map(str, self.lam)) or "0"
        return f"{self.n},({lam}),{self.s}"


def _dedupe(polys: list[Poly]) -> list[Poly]:
    seen, out = set(), []
    for p in polys:
        if p and p not in seen:
            seen.add(p)
            out.append(p)
    return out


def tanisaki_generators(lam: Sequence[int], n: int, ring: Ring | None = None) -> list[Poly]:
    """e_d(S) for S a subset of x_1..x_n and |S| - p^n_{|S|}(lam) < d <= |S|."""
    ring = ring or Ring.xu(n)
    xs = [ring.var(f"x{i}") for i in range(1, n + 1)]
    gens = []
    for m in range(1, n + 1):
        p = p_value(lam, n, m)
        for subset in combinations(xs, m):
            for d in range(m - p + 1, m + 1):
                gens.append(elementary(d, subset, ring))
    return _dedupe(gens)


def griffin_ideal(t: ParameterTriple, order: MonomialOrder = GREVLEX) -> Ideal:
    ring = t.x_ring
    gens = [ring.var(f"x{i}") ** t.s for i in range(1, t.n + 1)]
    gens += tanisaki_generators(t.lam, t.n, ring)
    return Ideal(ring, tuple(_dedupe(gens)), order)


def family_one(t: ParameterTriple) -> list[Poly]:
    ring = t.xu_ring
    us = [ring.var(f"u{j}") for j in range(1, t.s + 1)]
    out = []
    for i in range(1, t.n + 1):
        x = ring.var(f"x{i}")
        f = ring.one()
        for u in us:
            f = f * (x - u)
        out.append(f)
    return out


def family_two(t: ParameterTriple) -> list[Poly]:
    """Double Tanisaki generators for every x-subset of size m and m - p < d <= m."""
    ring = t.xu_ring
    xs = [ring.var(f"x{i}") for i in range(1, t.n + 1)]
    params = [ring.var(f"u{j}") for j in t.frame.phi]
    out = []
    for m in range(1, t.n + 1):
        p = p_value(t.lam, t.n, m)
        for d in range(max(0, m - p) + 1, m + 1):
            for subset in combinations(xs, m):
                out.append(double_tanisaki(d, subset, params, ring))
    return out


def equivariant_ideal(t: ParameterTriple, order: MonomialOrder = GREVLEX) -> Ideal:
    gens = _dedupe(family_one(t) + family_two(t))
    return Ideal(t.xu_ring, tuple(gens), order)


def locus_patterns(t: ParameterTriple) -> list[tuple[int, ...]]:
    """Maps f: [n] -> [s] (1-based values) with |f^-1(i)| >= lambda_i, lexicographic."""
    need = t.lam + (0,) * (t.s - len(t.lam))
    out = []
    for f in product(range(1, t.s + 1), repeat=t.n):
        if all(f.count(i + 1) >= need[i] for i in range(t.s)):
            out.append(f)
    return out


def finite_locus(t: ParameterTriple, alpha: Sequence) -> PointLocus:
    alpha = tuple(as_fraction(a) for a in alpha)
    if len(alpha) != t.s:
        raise ValueError(f"need {t.s} values of alpha, got {len(alpha)}")
    if len(set(alpha)) != len(alpha):
        raise ValueError(f"alpha values must be pairwise distinct: {alpha}")
    pts = tuple(tuple(alpha[j - 1] for j in f) for f in locus_patterns(t))
    return PointLocus(pts, t.n)


@dataclass(frozen=True)
class UniversalComponent:
    assignment: tuple[int, ...]
    ideal: Ideal


def universal_components(t: ParameterTriple) -> list[UniversalComponent]:
    ring = t.xu_ring
    out = []
    for f in locus_patterns(t):
        gens = tuple(ring.var(f"x{i}") - ring.var(f"u{j}") for i, j in enumerate(f, start=1))
        out.append(UniversalComponent(f, Ideal(ring, gens, GREVLEX)))
    return out


def sample_universal_point(t: ParameterTriple, f: Sequence[int], u_values: Sequence) -> dict[str, Fraction]:
    """Point of the component {x_i = u_f(i)} with the given u-coordinates."""
    point = {f"u{j}": as_fraction(v) for j, v in enumerate(u_values, start=1)}
    for i, j in enumerate(f, start=1):
        point[f"x{i}"] = point[f"u{j}"]
    return point


def universal_vanishing_ideal(t: ParameterTriple, budget: int = DEFAULT_COMPONENT_BUDGET) -> Ideal:
    """Intersection of all component ideals, folded left to right in pattern order."""
    comps = universal_components(t)
    if len(comps) > budget:
        raise BudgetExceeded(f"{len(comps)} universal components exceed the budget of {budget}")
    return reduce(intersect, (c.ideal for c in comps))
