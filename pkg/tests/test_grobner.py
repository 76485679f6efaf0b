import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dsk.grobner import (
    DuplicatePoint,
    Ideal,
    InfiniteQuotient,
    PointLocus,
    associated_graded,
    audit_groebner,
    buchberger,
    hilbert_series,
    ideal_equal,
    intersect,
    normal_form,
    standard_monomials,
    vanishing_ideal_of_points,
)
from dsk.polynomials import GREVLEX, MonomialOrder, Poly, Ring, evaluate, mono_lcm, parse_poly

R2 = Ring.xu(2)
R3 = Ring.xu(3)
x1, x2 = R2.gens("x")


def P(text, ring=R2):
    return parse_poly(text, ring)


# ---- division and Buchberger -----------------------------------------------

def test_normal_form_examples():
    assert normal_form(x1 ** 2, [x1 ** 2 - x1]) == x1
    G = [x1 ** 2 - x1, x2 ** 2 - x2, x1 * x2]
    assert all(not normal_form(g, G) for g in G)
    assert normal_form(x1 * x2, [x1 ** 2, x2 ** 2]) == x1 * x2


def test_buchberger_examples():
    mono = [x1 ** 2, x1 * x2, x2 ** 2]
    assert set(buchberger(mono)) == set(mono)
    boolean = [x1 ** 2 - x1, x2 ** 2 - x2, x1 * x2]
    assert set(buchberger(boolean)) == set(boolean)
    r = Ring(("x", "u"))
    x, u = r.var("x"), r.var("u")
    assert buchberger([x - u, x + u]) == [x, u]


def test_buchberger_zero_ideal_and_unit():
    assert buchberger([R2.zero()], GREVLEX, R2) == []
    assert buchberger([x1 - 1, x1], GREVLEX) == [R2.one()]


def test_ideal_equal_examples():
    assert ideal_equal(Ideal(R2, (x1 ** 2 - x1,)), Ideal(R2, (x1 * (x1 - 1),)))
    assert not ideal_equal(Ideal(R2, (x1,)), Ideal(R2, (x1 ** 2,)))
    with pytest.raises(ValueError):
        ideal_equal(Ideal(R2, (x1,)), Ideal(R2, (x1,), MonomialOrder.named("grlex", R2)))


rand_polys = st.lists(
    st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
                    st.integers(-3, 3).filter(bool), min_size=1, max_size=3),
    min_size=1, max_size=3,
).map(lambda ts: [Poly(R3, t) for t in ts])


@settings(max_examples=40, deadline=None)
@given(rand_polys, st.sampled_from(["grevlex", "grlex", "block"]))
def test_random_bases_pass_audit(gens, name):
    order = MonomialOrder.named(name, R3)
    gb = buchberger(gens, order, R3)
    assert audit_groebner(gb, order, gens) is None


@settings(max_examples=30, deadline=None)
@given(rand_polys)
def test_basis_is_independent_of_generator_order(gens):
    a = buchberger(gens, GREVLEX, R3)
    b = buchberger(list(reversed(gens)) + [gens[0] * gens[-1]], GREVLEX, R3)
    assert a == b


def test_audit_catches_defects():
    assert audit_groebner([x1 ** 2 - x1, x1 * x2], GREVLEX) is None
    assert "monic" in audit_groebner([2 * x1], GREVLEX)
    assert "reduced" in audit_groebner([x1, x1 * x2 + x2], GREVLEX)
    assert "S-pair" in audit_groebner([x1 * x2 - 1, x1 ** 2 - x2], GREVLEX)
    assert "generator" in audit_groebner([x1], GREVLEX, [x2])


def test_serialization_is_deterministic():
    gens = [P("x1^2 - 3*x1*x2 + 1/2"), P("x2^3 - x1")]
    texts = {Ideal(R2, tuple(gens)).serialize() for _ in range(3)}
    assert len(texts) == 1
    assert Ideal(R2, tuple(gens)).digest() == Ideal(R2, tuple(gens)).digest()


# ---- intersection ----------------------------------------------------------

def test_intersect_examples():
    a, b = Ideal(R2, (x1,)), Ideal(R2, (x2,))
    assert intersect(a, b).groebner == (x1 * x2,)
    r = Ring.xu(1, 2)
    x, u1, u2 = r.var("x1"), r.var("u1"), r.var("u2")
    got = intersect(Ideal(r, (x - u1,)), Ideal(r, (x - u2,)))
    assert got.groebner == ((x - u1) * (x - u2),)


def _monomial_ideal(exps, ring):
    return Ideal(ring, tuple(Poly(ring, {e: 1}) for e in exps))


mono_gens = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)).filter(any),
                     min_size=1, max_size=4)


@settings(max_examples=40, deadline=None)
@given(mono_gens, mono_gens)
def test_intersect_of_monomial_ideals_is_lcm_ideal(ea, eb):
    a, b = _monomial_ideal(ea, R3), _monomial_ideal(eb, R3)
    lcms = _monomial_ideal([mono_lcm(p, q) for p in ea for q in eb], R3)
    assert ideal_equal(intersect(a, b), lcms)


@settings(max_examples=25, deadline=None)
@given(rand_polys, rand_polys)
def test_intersection_is_contained_and_contains_products(ga, gb):
    a, b = Ideal(R3, tuple(ga)), Ideal(R3, tuple(gb))
    c = intersect(a, b)
    assert audit_groebner(c.groebner, GREVLEX) is None
    for g in c.groebner:
        assert a.contains(g) and b.contains(g)
    for f in ga:
        for g in gb:
            assert c.contains(f * g)


def test_intersect_under_other_orders():
    order = MonomialOrder.named("grlex", R2)
    a, b = Ideal(R2, (x1 - 1,), order), Ideal(R2, (x2 + 2,), order)
    c = intersect(a, b)
    assert c.groebner == ((x1 - 1) * (x2 + 2),)


# ---- standard monomials and Hilbert series --------------------------------

def test_standard_monomials_examples():
    I = Ideal(R2, (x1 ** 2, x2 ** 2, x1 * x2))
    assert standard_monomials(I) == [(0, 0), (0, 1), (1, 0)]
    assert hilbert_series(I) == [1, 2]
    with pytest.raises(InfiniteQuotient):
        standard_monomials(Ideal(R2, (x1,)))
    assert len(standard_monomials(Ideal(R2, (x1,)), degree_bound=3)) == 4


@pytest.mark.parametrize("n,s", [(1, 1), (2, 3), (3, 2), (3, 3)])
def test_power_ideal_quotient(n, s):
    ring = Ring.xu(n)
    I = Ideal(ring, tuple(x ** s for x in ring.gens("x")))
    monos = standard_monomials(I)
    assert sorted(monos) == sorted(product(range(s), repeat=n))
    poly = [1]
    for _ in range(n):
        poly = [sum(poly[i - j] for j in range(s) if 0 <= i - j < len(poly)) for i in range(len(poly) + s - 1)]
    assert hilbert_series(I) == poly


def test_hilbert_series_in_no_variables():
    empty = Ring(())
    assert hilbert_series(Ideal(empty, ())) == [1]


# ---- associated graded ------------------------------------------------------

def test_associated_graded_examples():
    gr = associated_graded([x1 ** 2 - x1, x2 ** 2 - x2, x1 * x2])
    assert set(gr.groebner) == {x1 ** 2, x2 ** 2, x1 * x2}
    homog = [x1 ** 2 - x1 * x2, x2 ** 3]
    assert ideal_equal(associated_graded(homog), Ideal(R2, tuple(homog)))
    r1 = Ring.xu(1)
    x = r1.var("x1")
    assert associated_graded([x - 1]).groebner == (x,)


def test_associated_graded_needs_graded_order():
    with pytest.raises(ValueError):
        associated_graded([x1 - 1], MonomialOrder.named("block", Ring.xu(1, 1)), Ring.xu(1, 1))


# ---- Buchberger-Moller -----------------------------------------------------

def test_vanishing_ideal_examples():
    r1 = Ring.xu(1)
    x = r1.var("x1")
    assert vanishing_ideal_of_points(PointLocus(((0,), (1,)), 1)).groebner == (x ** 2 - x,)
    three = vanishing_ideal_of_points(PointLocus(((0, 0), (0, 1), (1, 0)), 2))
    assert set(three.groebner) == {x1 * x2, x1 ** 2 - x1, x2 ** 2 - x2}
    one = vanishing_ideal_of_points(PointLocus(((Fraction(1, 2), -3),), 2))
    assert set(one.groebner) == {x1 - Fraction(1, 2), x2 + 3}


def test_duplicate_points_rejected():
    with pytest.raises(DuplicatePoint):
        PointLocus(((0, 1), (0, 1)), 2)


def _random_locus(rng):
    n = rng.randint(1, 3)
    count = rng.randint(1, 20)
    pool = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(1, 5))]
    pts = {tuple(rng.choice(pool) for _ in range(n)) for _ in range(count)}
    return PointLocus(tuple(sorted(pts)), n)


@pytest.mark.parametrize("seed", range(100))
def test_vanishing_ideal_of_random_locus(seed):
    locus = _random_locus(random.Random(seed))
    I = vanishing_ideal_of_points(locus)
    names = I.ring.names
    # I is contained in I(L) and has |L| standard monomials, so it is I(L)
    for g in I.groebner:
        assert all(evaluate(g, dict(zip(names, p))) == 0 for p in locus.points)
    assert len(standard_monomials(I)) == len(locus)
    assert audit_groebner(I.groebner, GREVLEX) is None
    assert I.groebner == tuple(buchberger(list(I.groebner), GREVLEX, I.ring))
    gr = associated_graded(I)
    assert len(standard_monomials(gr)) == len(locus)


# ---- external oracle -------------------------------------------------------

def _to_sympy(f, symbols):
    import sympy

    return sum((sympy.Rational(c.numerator, c.denominator) *
                sympy.Mul(*[s ** e for s, e in zip(symbols, m)]) for m, c in f.terms.items()), sympy.Integer(0))


@pytest.mark.parametrize("order_name,sympy_order", [("grevlex", "grevlex"), ("grlex", "grlex")])
@pytest.mark.parametrize("seed", range(15))
def test_matches_sympy_reduced_basis(seed, order_name, sympy_order):
    sympy = pytest.importorskip("sympy")
    rng = random.Random(seed)
    gens = [Poly(R3, {tuple(rng.randint(0, 2) for _ in range(3)): rng.randint(-3, 3) or 1
                      for _ in range(rng.randint(1, 3))}) for _ in range(rng.randint(1, 3))]
    order = MonomialOrder.named(order_name, R3)
    ours = buchberger(gens, order, R3)
    symbols = sympy.symbols("x1 x2 x3")
    theirs = sympy.groebner([_to_sympy(g, symbols) for g in gens], *symbols, order=sympy_order)

    def monic(expr):
        poly = sympy.Poly(expr, *symbols)
        return sympy.expand(expr / poly.LC(order=sympy_order))

    assert {monic(_to_sympy(g, symbols)) for g in ours} == {monic(g) for g in theirs.exprs}
