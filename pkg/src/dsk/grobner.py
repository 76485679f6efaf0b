"""Ideal arithmetic over Q: Buchberger, normal forms, intersections,
standard monomials, associated graded ideals and Buchberger-Moller.

The kernel works on plain ``{monomial: Fraction}`` dicts; :class:`Poly`
is only used at the API boundary.
"""

from __future__ import annotations

import hashlib
import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .polynomials import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    Poly,
    Ring,
    as_fraction,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_quotient,
    to_text,
    top_form,
)

Terms = dict  # Monomial -> Fraction


class InfiniteQuotient(ValueError):
    """The quotient ring is not finite-dimensional over Q."""


class DuplicatePoint(ValueError):
    pass


# ---------------------------------------------------------------------------
# dict-level kernel
# ---------------------------------------------------------------------------

def _neg_key(order: MonomialOrder, m: Monomial) -> tuple[int, ...]:
    return tuple(-v for v in order.key(m))


def _leading(p: Terms, order: MonomialOrder) -> Monomial:
    return max(p, key=order.key)


def _reduce(p: Terms, basis: Sequence[tuple[Monomial, Terms]], order: MonomialOrder,
            full: bool = True) -> Terms:
    """Reduction of ``p`` by monic ``basis`` entries ``(lm, terms)``.

    With ``full=False`` only the leading term is reduced (top reduction).
    """
    p = dict(p)
    if not p or not basis:
        return p
    heap = [(_neg_key(order, m), m) for m in p]
    heapq.heapify(heap)
    rem: Terms = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for lm, g in basis:
            if mono_divides(lm, m):
                q = mono_quotient(m, lm)
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    t = mono_mul(gm, q)
                    v = p.get(t)
                    if v is None:
                        p[t] = -c * gc
                        heapq.heappush(heap, (_neg_key(order, t), t))
                    else:
                        v -= c * gc
                        if v:
                            p[t] = v
                        else:
                            del p[t]
                break
        else:
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
    return rem


def _monic(p: Terms, order: MonomialOrder) -> tuple[Monomial, Terms]:
    lm = _leading(p, order)
    c = p[lm]
    if c == 1:
        return lm, p
    inv = 1 / c
    return lm, {m: v * inv for m, v in p.items()}


def _spoly(f: tuple[Monomial, Terms], g: tuple[Monomial, Terms]) -> Terms:
    (lf, tf), (lg, tg) = f, g
    lcm = mono_lcm(lf, lg)
    qf, qg = mono_quotient(lcm, lf), mono_quotient(lcm, lg)
    out: Terms = {}
    for m, c in tf.items():
        out[mono_mul(m, qf)] = c
    for m, c in tg.items():
        t = mono_mul(m, qg)
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _buchberger(gens: Iterable[Terms], order: MonomialOrder) -> list[tuple[Monomial, Terms]]:
    """Reduced Groebner basis as monic ``(lm, terms)`` pairs, descending by lm.

    Pairs are selected by sugar degree (the normal strategy on homogeneous
    input), with Buchberger's coprime and chain criteria.
    """
    G: list[tuple[Monomial, Terms]] = []
    sugar: list[int] = []
    pending: dict[tuple[int, int], Monomial] = {}
    queue: list = []

    def add(p: Terms, sug: int):
        lm, p = _monic(p, order)
        if not any(lm):
            # unit ideal
            G.append((lm, p))
            return True
        j = len(G)
        G.append((lm, p))
        sugar.append(sug)
        for i in range(j):
            li = G[i][0]
            if _coprime(li, lm):
                continue
            lcm = mono_lcm(li, lm)
            d = sum(lcm)
            pair_sugar = max(sugar[i] + d - sum(li), sug + d - sum(lm))
            pending[(i, j)] = lcm
            heapq.heappush(queue, (pair_sugar, order.key(lcm), i, j))
        return False

    for g in gens:
        r = _reduce(g, G, order)
        if r and add(r, max(sum(m) for m in g)):
            return [G[-1]]

    while queue:
        sug, _, i, j = heapq.heappop(queue)
        lcm = pending.pop((i, j))
        if _chain_criterion(i, j, lcm, G, pending):
            continue
        r = _reduce(_spoly(G[i], G[j]), G, order)
        if r and add(r, sug):
            return [G[-1]]
    return _interreduce(G, order)


def _chain_criterion(i, j, lcm, G, pending) -> bool:
    for k, (lk, _) in enumerate(G):
        if k == i or k == j:
            continue
        if mono_divides(lk, lcm):
            a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
            if a not in pending and b not in pending:
                return True
    return False


def _interreduce(G: list[tuple[Monomial, Terms]], order: MonomialOrder) -> list[tuple[Monomial, Terms]]:
    lms = [lm for lm, _ in G]
    keep = []
    for idx, (lm, p) in enumerate(G):
        redundant = False
        for jdx, other in enumerate(lms):
            if jdx == idx or not mono_divides(other, lm):
                continue
            # equal leading monomials: keep the first occurrence only
            if other != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append((lm, p))
    out = []
    for idx, (lm, p) in enumerate(keep):
        others = [g for jdx, g in enumerate(keep) if jdx != idx]
        tail = {m: c for m, c in p.items() if m != lm}
        tail = _reduce(tail, others, order)
        tail[lm] = p[lm]
        out.append(_monic(tail, order))
    out.sort(key=lambda g: order.key(g[0]), reverse=True)
    return out


# ---------------------------------------------------------------------------
# Poly-level API
# ---------------------------------------------------------------------------

def _pairs(polys: Sequence[Poly], order: MonomialOrder) -> list[tuple[Monomial, Terms]]:
    out = []
    for p in polys:
        if not p:
            raise ValueError("basis elements must be nonzero")
        lm, terms = _monic(p.terms, order)
        out.append((lm, terms))
    return out


def normal_form(f: Poly, basis: Sequence[Poly], order: MonomialOrder = GREVLEX) -> Poly:
    """Remainder of ``f`` under full division by ``basis`` (taken in list order)."""
    return Poly(f.ring, _reduce(f.terms, _pairs(basis, order), order), _clean=True)


def buchberger(gens: Sequence[Poly], order: MonomialOrder = GREVLEX, ring: Ring | None = None) -> list[Poly]:
    """Reduced Groebner basis of ``gens``, monic and sorted by descending leading term."""
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
    gb = _buchberger((g.terms for g in gens if g), order)
    return [Poly(ring, t, _clean=True) for _, t in gb]


@dataclass(frozen=True, eq=False)
class Ideal:
    """Ideal given by generators; the reduced Groebner basis is computed lazily."""

    ring: Ring
    generators: tuple[Poly, ...]
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.ring != self.ring:
                raise ValueError("generator outside the ideal's ring")

    @classmethod
    def from_groebner(cls, ring: Ring, gb: Sequence[Poly], order: MonomialOrder = GREVLEX) -> "Ideal":
        ideal = cls(ring, tuple(gb), order)
        ideal.__dict__["groebner"] = tuple(gb)
        return ideal

    @cached_property
    def groebner(self) -> tuple[Poly, ...]:
        return tuple(buchberger(self.generators, self.order, self.ring))

    def with_order(self, order: MonomialOrder) -> "Ideal":
        return Ideal(self.ring, self.generators, order)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading(self.order)[0] for g in self.groebner]

    def contains(self, f: Poly) -> bool:
        return not normal_form(f, self.groebner, self.order)

    def reduce(self, f: Poly) -> Poly:
        return normal_form(f, self.groebner, self.order)

    def serialize(self) -> str:
        return "\n".join(to_text(g, self.order) for g in self.groebner)

    def digest(self) -> str:
        return hashlib.sha256(self.serialize().encode()).hexdigest()[:16]

    def is_unit(self) -> bool:
        return any(not any(lm) for lm in self.leading_monomials())


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.ring != b.ring or a.order != b.order:
        raise ValueError("ideals must share ring and monomial order")
    return a.groebner == b.groebner


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """A ∩ B as (t*A + (1-t)*B) ∩ Q[vars], eliminating a fresh variable t."""
    if a.ring != b.ring:
        raise ValueError("ideals must share a ring")
    ring = a.ring
    if not a.generators or not b.generators:
        return Ideal(ring, (), a.order)
    t_name = "t"
    while t_name in ring.names:
        t_name += "_"
    big = Ring((t_name,) + ring.names)
    elim = MonomialOrder("block", (1, ring.nvars))
    t = big.var(0)
    gens = [t * g.to_ring(big) for g in a.generators]
    gens += [(1 - t) * g.to_ring(big) for g in b.generators]
    gb = _buchberger((g.terms for g in gens if g), elim)
    kept = [Poly(ring, {m[1:]: c for m, c in terms.items()}, _clean=True)
            for lm, terms in gb if lm[0] == 0]
    if a.order == GREVLEX:
        # the t-free part of an elimination basis is already the reduced grevlex basis
        return Ideal.from_groebner(ring, _sorted(kept, GREVLEX), GREVLEX)
    return Ideal(ring, tuple(kept), a.order)


def _sorted(polys: list[Poly], order: MonomialOrder) -> list[Poly]:
    return sorted(polys, key=lambda p: order.key(p.leading(order)[0]), reverse=True)


def _quotient_is_finite(lms: Sequence[Monomial], nvars: int) -> bool:
    pure = set()
    for lm in lms:
        support = [i for i, e in enumerate(lm) if e]
        if not support:
            return True
        if len(support) == 1:
            pure.add(support[0])
    return len(pure) == nvars


def standard_monomials(ideal: Ideal, degree_bound: int | None = None) -> list[Monomial]:
    """Monomials outside the initial ideal, ascending in the ideal's order.

    Raises :class:`InfiniteQuotient` when the set is infinite and no bound is given.
    """
    if not ideal.order.degree_compatible and degree_bound is None:
        raise ValueError("standard monomials need a degree-compatible order or a degree bound")
    lms = ideal.leading_monomials()
    n = ideal.ring.nvars
    if degree_bound is None and not _quotient_is_finite(lms, n):
        raise InfiniteQuotient(f"quotient of {ideal.ring.names} is infinite-dimensional")
    one = (0,) * n
    if any(not any(lm) for lm in lms):
        return []
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                t = m[:i] + (m[i] + 1,) + m[i + 1:]
                if t in seen or (degree_bound is not None and sum(t) > degree_bound):
                    continue
                if any(mono_divides(lm, t) for lm in lms):
                    continue
                seen.add(t)
                nxt.append(t)
        frontier = nxt
    return sorted(seen, key=ideal.order.key)


def quotient_dimension(ideal: Ideal) -> int:
    return len(standard_monomials(ideal))


def hilbert_series(ideal: Ideal) -> list[int]:
    """Coefficients (by degree) of the Hilbert series of a finite quotient."""
    monos = standard_monomials(ideal)
    if not monos:
        return []
    out = [0] * (max(sum(m) for m in monos) + 1)
    for m in monos:
        out[sum(m)] += 1
    return out


def associated_graded(gens: Sequence[Poly] | Ideal, order: MonomialOrder = GREVLEX,
                      ring: Ring | None = None) -> Ideal:
    """gr I for the degree filtration: top forms of a graded-order Groebner basis."""
    if isinstance(gens, Ideal):
        ideal = gens if gens.order == order else gens.with_order(order)
    else:
        if ring is None:
            ring = gens[0].ring
        ideal = Ideal(ring, tuple(gens), order)
    if not order.degree_compatible:
        raise ValueError("associated graded needs a degree-compatible order")
    tops = [top_form(g) for g in ideal.groebner]
    # leading terms are unchanged by taking top forms, so only tails need reducing
    gb = [Poly(ideal.ring, t, _clean=True) for _, t in _interreduce(_pairs(tops, order), order)]
    return Ideal.from_groebner(ideal.ring, gb, order)


# ---------------------------------------------------------------------------
# Point loci and Buchberger-Moller
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointLocus:
    points: tuple[tuple[Fraction, ...], ...]
    dim: int

    def __post_init__(self):
        pts = tuple(tuple(as_fraction(c) for c in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} is not of dimension {self.dim}")
        if len(set(pts)) != len(pts):
            raise DuplicatePoint("point locus contains repeated points")

    def __len__(self):
        return len(self.points)

    def to_csv(self) -> str:
        from .polynomials import format_rational
        return "".join(",".join(format_rational(c) for c in p) + "\n" for p in self.points)


def vanishing_ideal_of_points(locus: PointLocus, order: MonomialOrder = GREVLEX,
                              ring: Ring | None = None) -> Ideal:
    """Reduced Groebner basis of I(locus) by the Buchberger-Moller algorithm."""
    if ring is None:
        ring = Ring.xu(locus.dim)
    if ring.nvars != locus.dim:
        raise ValueError("ring does not match the ambient dimension of the locus")
    if not locus.points:
        raise ValueError("empty point locus")
    if not order.degree_compatible:
        raise ValueError("Buchberger-Moller here enumerates monomials by a graded order")
    n, pts = locus.dim, locus.points
    npts = len(pts)
    # powers[i][k][e] = pts[k][i] ** e, grown lazily
    powers = [[[Fraction(1)] for _ in range(npts)] for _ in range(n)]

    def evaluate(m: Monomial) -> list[Fraction]:
        vec = []
        for k in range(npts):
            v = Fraction(1)
            for i, e in enumerate(m):
                if e:
                    col = powers[i][k]
                    while len(col) <= e:
                        col.append(col[-1] * pts[k][i])
                    v *= col[e]
            vec.append(v)
        return vec

    rows: list[tuple[int, list[Fraction], Terms]] = []
    gb: list[Terms] = []
    lms: list[Monomial] = []
    one = (0,) * n
    heap = [(order.key(one), one)]
    seen = {one}
    while heap:
        _, t = heapq.heappop(heap)
        if any(mono_divides(lm, t) for lm in lms):
            continue
        vec = evaluate(t)
        combo: Terms = {t: Fraction(1)}
        for piv, row, rcombo in rows:
            c = vec[piv]
            if c:
                vec = [a - c * b for a, b in zip(vec, row)]
                for m, v in rcombo.items():
                    w = combo.get(m, 0) - c * v
                    if w:
                        combo[m] = w
                    else:
                        combo.pop(m, None)
        piv = next((k for k, v in enumerate(vec) if v), None)
        if piv is None:
            gb.append(combo)
            lms.append(t)
            continue
        inv = 1 / vec[piv]
        rows.append((piv, [v * inv for v in vec], {m: v * inv for m, v in combo.items()}))
        for i in range(n):
            nxt = t[:i] + (t[i] + 1,) + t[i + 1:]
            if nxt not in seen:
                seen.add(nxt)
                heapq.heappush(heap, (order.key(nxt), nxt))
    polys = [Poly(ring, g, _clean=True) for g in gb]
    return Ideal.from_groebner(ring, _sorted(polys, order), order)


# ---------------------------------------------------------------------------
# Audits
# ---------------------------------------------------------------------------

def audit_groebner(gb: Sequence[Poly], order: MonomialOrder, generators: Sequence[Poly] = ()) -> str | None:
    """Return a description of the first defect of a claimed reduced GB, or None."""
    pairs = _pairs(gb, order)
    for (lm, p), g in zip(pairs, gb):
        if g.terms[lm] != 1:
            return f"not monic: {to_text(g, order)}"
    for i, (lm, p) in enumerate(pairs):
        for j, (other, _) in enumerate(pairs):
            if i == j:
                continue
            for m in p:
                if mono_divides(other, m):
                    return f"not reduced: term of element {i} divisible by leading term of element {j}"
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            r = _reduce(_spoly(pairs[i], pairs[j]), pairs, order)
            if r:
                return f"S-pair ({i},{j}) does not reduce to zero"
    for g in generators:
        if _reduce(g.terms, pairs, order):
            return f"generator not in ideal: {to_text(g, order)}"
    return None
