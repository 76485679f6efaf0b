from fractions import Fraction
from itertools import product

import pytest

from dsk.grobner import ideal_equal, standard_monomials, vanishing_ideal_of_points
from dsk.ideals import (
    BudgetExceeded,
    ParameterTriple,
    equivariant_ideal,
    family_two,
    finite_locus,
    griffin_ideal,
    locus_patterns,
    sample_universal_point,
    tanisaki_generators,
    universal_components,
    universal_vanishing_ideal,
)
from dsk.polynomials import Poly, Ring, elementary, evaluate, specialize
from dsk.shapes import ParameterError, substaircases
from dsk.verify import valid_triples


def T(n, lam, s):
    return ParameterTriple(n, tuple(lam), s)


def test_triple_validation():
    with pytest.raises(ParameterError):
        T(2, (3,), 1)
    with pytest.raises(ParameterError):
        T(3, (1, 1), 1)
    assert T(3, (2, 1), 2).label() == "3,(2,1),2"
    assert T(3, (), 2).label() == "3,(0),2"


# ---- Tanisaki and Griffin --------------------------------------------------

def test_tanisaki_examples():
    ring = Ring.xu(2)
    x1, x2 = ring.gens("x")
    assert tanisaki_generators((1,), 2, ring) == [x1 * x2]
    assert tanisaki_generators((), 3) == []
    r1 = Ring.xu(1)
    assert tanisaki_generators((1,), 1, r1) == [r1.var("x1")]


def test_tanisaki_single_column_is_coinvariant():
    ring = Ring.xu(3)
    xs = ring.gens("x")
    gens = set(tanisaki_generators((1, 1, 1), 3, ring))
    assert gens == {elementary(d, xs) for d in (1, 2, 3)}


def test_griffin_examples():
    t = T(2, (1,), 2)
    I = griffin_ideal(t)
    x1, x2 = t.x_ring.gens("x")
    assert set(I.groebner) == {x1 ** 2, x2 ** 2, x1 * x2}
    assert standard_monomials(I) == [(0, 0), (0, 1), (1, 0)]
    assert len(standard_monomials(griffin_ideal(T(3, (), 2)))) == 8
    assert len(standard_monomials(griffin_ideal(T(3, (2, 1), 2)))) == 3


# ---- equivariant ideal -----------------------------------------------------

def test_equivariant_example():
    t = T(2, (1,), 2)
    ring = t.xu_ring
    x1, x2 = ring.gens("x")
    u1, u2 = ring.gens("u")
    J = equivariant_ideal(t)
    assert set(J.generators) == {(x1 - u1) * (x1 - u2), (x2 - u1) * (x2 - u2), (x1 - u1) * (x2 - u1)}


@pytest.mark.parametrize("t", valid_triples(4, 3), ids=lambda t: t.label())
def test_u_zero_generators_are_griffin_generators(t):
    zeros = {f"u{j}": 0 for j in range(1, t.s + 1)}
    special = {specialize(g, zeros).to_ring(t.x_ring) for g in equivariant_ideal(t).generators}
    special.discard(t.x_ring.zero())
    assert special == set(griffin_ideal(t).generators)


def test_empty_partition_has_family_one_only():
    for n, s in [(1, 1), (2, 3), (3, 2)]:
        assert family_two(T(n, (), s)) == []


def _transpose(f: Poly, i: int, j: int) -> Poly:
    perm = list(range(f.ring.nvars))
    perm[i], perm[j] = perm[j], perm[i]
    return Poly(f.ring, {tuple(m[perm[k]] for k in range(len(m))): c for m, c in f.terms.items()})


@pytest.mark.parametrize("t", valid_triples(4, 2), ids=lambda t: t.label())
def test_equivariant_generators_are_symmetric(t):
    gens = set(equivariant_ideal(t).generators)
    for i in range(t.n):
        for j in range(i + 1, t.n):
            assert {_transpose(g, i, j) for g in gens} == gens


# ---- loci ------------------------------------------------------------------

def test_finite_locus_examples():
    assert finite_locus(T(2, (1,), 2), (0, 1)).points == ((0, 0), (0, 1), (1, 0))
    assert len(finite_locus(T(3, (), 3), (0, 1, 2))) == 27
    pts = finite_locus(T(3, (2, 1), 2), (0, 1)).points
    assert set(pts) == {(0, 0, 1), (0, 1, 0), (1, 0, 0)}


def test_finite_locus_rejects_repeats():
    with pytest.raises(ValueError):
        finite_locus(T(2, (1,), 2), (1, 1))
    with pytest.raises(ValueError):
        finite_locus(T(2, (1,), 2), (1,))


def _pattern_count(t):
    need = t.lam + (0,) * (t.s - len(t.lam))
    return sum(all(f.count(i) >= need[i] for i in range(t.s))
               for f in product(range(t.s), repeat=t.n))


@pytest.mark.parametrize("t", valid_triples(4, 3), ids=lambda t: t.label())
def test_locus_size_is_quotient_dimension(t):
    alpha = tuple(Fraction(2 * j - 3, j) for j in range(1, t.s + 1))
    locus = finite_locus(t, alpha)
    assert len(locus) == _pattern_count(t)
    assert len(standard_monomials(vanishing_ideal_of_points(locus))) == len(locus)


def test_universal_components():
    assert [c.assignment for c in universal_components(T(2, (1,), 2))] == [(1, 1), (1, 2), (2, 1)]
    assert len(universal_components(T(2, (2,), 1))) == 1
    for n, s in [(1, 1), (2, 2), (3, 2), (2, 3)]:
        assert len(universal_components(T(n, (), s))) == s ** n
    assert locus_patterns(T(3, (2, 1), 2)) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]


def test_universal_vanishing_examples():
    t = T(2, (1,), 2)
    assert ideal_equal(universal_vanishing_ideal(t), equivariant_ideal(t))
    one = T(1, (), 1)
    x1, u1 = one.xu_ring.var("x1"), one.xu_ring.var("u1")
    assert universal_vanishing_ideal(one).groebner == (x1 - u1,)
    two = T(2, (), 2)
    r = two.xu_ring
    us = r.gens("u")
    target = [(x - us[0]) * (x - us[1]) for x in r.gens("x")]
    assert ideal_equal(universal_vanishing_ideal(two), type(equivariant_ideal(two))(r, tuple(target)))


def test_universal_budget():
    with pytest.raises(BudgetExceeded, match="27"):
        universal_vanishing_ideal(T(3, (), 3), budget=10)


def test_sampled_points_lie_on_their_component():
    t = T(3, (1, 1), 2)
    for comp in universal_components(t):
        point = sample_universal_point(t, comp.assignment, [Fraction(1, 3), 5])
        assert all(evaluate(g, point) == 0 for g in comp.ideal.generators)
        assert all(evaluate(g, point) == 0 for g in equivariant_ideal(t).generators)


def test_rank_matches_substaircases_on_generic_fiber():
    t = T(3, (1,), 2)
    J = equivariant_ideal(t)
    fiber = [specialize(g, {"u1": 2, "u2": -1}).to_ring(t.x_ring) for g in J.groebner]
    locus = vanishing_ideal_of_points(finite_locus(t, (2, -1)))
    assert len(standard_monomials(locus)) == len(substaircases(t.n, t.lam, t.s))
    assert set(type(locus)(t.x_ring, tuple(fiber)).groebner) == set(locus.groebner)
