"""Sparse multivariate polynomials over the rationals.

A :class:`Ring` fixes an ordered variable universe (``x1..xn`` followed by
``u1..us`` in the usual case). Monomials are exponent tuples of length
``ring.nvars``; a :class:`Poly` maps monomials to nonzero ``Fraction``
coefficients. Everything here is exact and immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


def as_fraction(c) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to Fraction."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c.strip())
    raise TypeError(f"not an exact rational: {c!r}")


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class Ring:
    """Polynomial ring Q[names] with a fixed variable order."""

    names: tuple[str, ...]

    @classmethod
    def xu(cls, n: int, s: int = 0) -> "Ring":
        return cls(tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"u{j}" for j in range(1, s + 1)))

    @property
    def nvars(self) -> int:
        return len(self.names)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in ring {self.names}") from None

    @property
    def x_indices(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.names) if v.startswith("x"))

    @property
    def u_indices(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.names) if v.startswith("u"))

    def one(self) -> "Poly":
        return Poly.constant(self, 1)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def var(self, name: str | int) -> "Poly":
        i = name if isinstance(name, int) else self.index(name)
        m = [0] * self.nvars
        m[i] = 1
        return Poly(self, {tuple(m): Fraction(1)})

    def gens(self, prefix: str) -> list["Poly"]:
        return [self.var(v) for v in self.names if v.startswith(prefix) and v[len(prefix):].isdigit()]

    def monomial(self, exps: Mapping[str, int]) -> Monomial:
        m = [0] * self.nvars
        for name, e in exps.items():
            m[self.index(name)] = e
        return tuple(m)

    def format_monomial(self, m: Monomial) -> str:
        """Human form used for basis listings, e.g. ``x1^2*x3`` or ``1``."""
        parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.names, m) if e]
        return "*".join(parts) if parts else "1"


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_quotient(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------

ORDER_ALIASES = {
    "grevlex": "grevlex",
    "graded-reverse-lexicographic": "grevlex",
    "grlex": "grlex",
    "graded-lexicographic": "grlex",
    "block": "block",
    "block-elimination": "block",
}


@dataclass(frozen=True)
class MonomialOrder:
    """Graded monomial order on exponent tuples.

    ``block`` orders compare the blocks left to right (sizes in ``blocks``),
    each by grevlex; the variable priority is the ring order.
    """

    kind: str = "grevlex"
    blocks: tuple[int, ...] = ()
    _keys: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.kind not in ("grevlex", "grlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and not self.blocks:
            raise ValueError("block order needs block sizes")

    @classmethod
    def named(cls, name: str, ring: Ring | None = None) -> "MonomialOrder":
        kind = ORDER_ALIASES.get(name)
        if kind is None:
            raise ValueError(f"unknown monomial order {name!r}")
        if kind == "block":
            if ring is None:
                raise ValueError("block order needs a ring to split x and u blocks")
            return cls.block_xu(ring)
        return cls(kind)

    @classmethod
    def block_xu(cls, ring: Ring) -> "MonomialOrder":
        nx, nu = len(ring.x_indices), len(ring.u_indices)
        if nx + nu != ring.nvars or ring.x_indices != tuple(range(nx)):
            raise ValueError("x/u block order needs the x-block before the u-block")
        return cls("block", tuple(b for b in (nx, nu) if b))

    @property
    def name(self) -> str:
        if self.kind == "block":
            return "block" + ":".join(map(str, self.blocks))
        return self.kind

    @property
    def degree_compatible(self) -> bool:
        return self.kind != "block" or len(self.blocks) <= 1

    def key(self, m: Monomial) -> tuple[int, ...]:
        """Sort key: larger key means larger monomial."""
        k = self._keys.get(m)
        if k is None:
            if self.kind == "grevlex":
                k = _grevlex_key(m)
            elif self.kind == "grlex":
                k = (sum(m),) + m
            else:
                k, start = (), 0
                for size in self.blocks:
                    k += _grevlex_key(m[start:start + size])
                    start += size
                if start != len(m):
                    raise ValueError("block sizes do not cover the monomial")
            self._keys[m] = k
        return k

    def sorted_desc(self, monos: Iterable[Monomial]) -> list[Monomial]:
        return sorted(monos, key=self.key, reverse=True)


def _grevlex_key(m: Monomial) -> tuple[int, ...]:
    return (sum(m),) + tuple(-e for e in reversed(m))


GREVLEX = MonomialOrder("grevlex")


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class MissingAssignment(KeyError):
    """Evaluation point does not assign a variable occurring in the polynomial."""


class Poly:
    """Immutable sparse polynomial; ``terms`` maps Monomial -> nonzero Fraction."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Scalar] | None = None, *, _clean=False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            clean = {}
            for m, c in (terms or {}).items():
                if len(m) != ring.nvars:
                    raise ValueError(f"monomial {m} does not match ring of {ring.nvars} variables")
                c = as_fraction(c)
                if c:
                    clean[tuple(m)] = c
            self.terms = clean
        self._hash = None

    @classmethod
    def constant(cls, ring: Ring, c: Scalar) -> "Poly":
        c = as_fraction(c)
        return cls(ring, {(0,) * ring.nvars: c} if c else {}, _clean=True)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring.names} vs {other.ring.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {m: v * c for m, v in self.terms.items()}, _clean=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Poly(self.ring, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = self.ring.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mul_term(self, mono: Monomial, c: Fraction) -> "Poly":
        return Poly(self.ring, {mono_mul(m, mono): v * c for m, v in self.terms.items()}, _clean=True)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.ring, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({to_text(self)})"

    # -- queries ------------------------------------------------------------

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(m) for m in self.terms)

    def partial_degree(self, indices: Sequence[int]) -> int:
        return max((sum(m[i] for i in indices) for m in self.terms), default=0)

    def x_degree(self) -> int:
        return self.partial_degree(self.ring.x_indices)

    def u_degree(self) -> int:
        return self.partial_degree(self.ring.u_indices)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def variables(self) -> set[str]:
        return {self.ring.names[i] for m in self.terms for i, e in enumerate(m) if e}

    def leading(self, order: MonomialOrder) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order: MonomialOrder) -> "Poly":
        _, c = self.leading(order)
        return self * (1 / c)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        return evaluate(self, point)

    def to_ring(self, ring: Ring) -> "Poly":
        """Re-express in ``ring``; every occurring variable must exist there."""
        if ring == self.ring:
            return self
        src = self.ring.names
        pos = []
        for i, name in enumerate(src):
            pos.append(ring._index.get(name))
        out = {}
        for m, c in self.terms.items():
            new = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    j = pos[i]
                    if j is None:
                        raise ValueError(f"variable {src[i]} does not exist in target ring")
                    new[j] = e
            out[tuple(new)] = c
        return Poly(ring, out, _clean=True)


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------

def evaluate(f: Poly, point: Mapping[str, Scalar]) -> Fraction:
    """Exact value of ``f`` at a point given as ``{variable name: rational}``."""
    vals = []
    for i, name in enumerate(f.ring.names):
        if name in point:
            vals.append(as_fraction(point[name]))
        else:
            vals.append(None)
    total = Fraction(0)
    for m, c in f.terms.items():
        t = c
        for i, e in enumerate(m):
            if e:
                v = vals[i]
                if v is None:
                    raise MissingAssignment(f"no value for variable {f.ring.names[i]}")
                t *= v ** e
        total += t
    return total


def specialize(f: Poly, assignments: Mapping[str, Scalar]) -> Poly:
    """Substitute constants for some variables; the ring is unchanged."""
    if not assignments:
        return f
    subs = {f.ring.index(name): as_fraction(v) for name, v in assignments.items()}
    out: dict[Monomial, Fraction] = {}
    for m, c in f.terms.items():
        new = list(m)
        for i, v in subs.items():
            e = new[i]
            if e:
                c = c * v ** e
                new[i] = 0
        if not c:
            continue
        key = tuple(new)
        val = out.get(key, 0) + c
        if val:
            out[key] = val
        else:
            out.pop(key, None)
    return Poly(f.ring, out, _clean=True)


def top_form(f: Poly) -> Poly:
    """Homogeneous component of maximal total degree."""
    if not f:
        raise ValueError("top form of the zero polynomial is undefined")
    d = f.degree()
    return Poly(f.ring, {m: c for m, c in f.terms.items() if sum(m) == d}, _clean=True)


def _as_polys(vs: Sequence, ring: Ring | None) -> tuple[list[Poly], Ring]:
    if ring is None:
        for v in vs:
            if isinstance(v, Poly):
                ring = v.ring
                break
        else:
            raise ValueError("cannot infer the ring: pass ring= explicitly")
    return [v if isinstance(v, Poly) else Poly.constant(ring, v) for v in vs], ring


def elementary(d: int, vs: Sequence, ring: Ring | None = None) -> Poly:
    polys, ring = _as_polys(vs, ring)
    if d < 0:
        return ring.zero()
    # e[j] of the prefix processed so far
    e = [ring.one()] + [ring.zero()] * d
    for v in polys:
        for j in range(d, 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return e[d]


def complete(d: int, vs: Sequence, ring: Ring | None = None) -> Poly:
    polys, ring = _as_polys(vs, ring)
    if d < 0:
        return ring.zero()
    # h_0 = 1 for every list, h_d(empty) = 0 for d > 0
    h = [ring.one()] + [ring.zero()] * d
    for v in polys:
        for j in range(1, d + 1):
            h[j] = h[j] + v * h[j - 1]
    return h[d]


def sym_poly(kind: str, d: int, vs: Sequence, ring: Ring | None = None) -> Poly:
    if kind in ("e", "elementary"):
        return elementary(d, vs, ring)
    if kind in ("h", "complete"):
        return complete(d, vs, ring)
    raise ValueError(f"unknown symmetric polynomial kind {kind!r}")


def double_tanisaki(d: int, xvars: Sequence, aparams: Sequence, ring: Ring | None = None) -> Poly:
    """Alternating sum  sum_r (-1)^(d-r) e_r(x) h_(d-r)(a_1..a_(m+1-d)).

    Only the first ``m + 1 - d`` parameters are read.
    """
    m = len(xvars)
    if d < 0 or d > m:
        raise ValueError(f"double Tanisaki degree d={d} out of range 0..{m}")
    need = m + 1 - d
    if len(aparams) < need:
        raise ValueError(f"need {need} parameters, got {len(aparams)}")
    xs, ring = _as_polys(xvars, ring)
    params, _ = _as_polys(list(aparams[:need]), ring)
    total = ring.zero()
    for r in range(d + 1):
        term = elementary(r, xs, ring) * complete(d - r, params, ring)
        total = total + term if (d - r) % 2 == 0 else total - term
    return total


def series_coeff_oracle(d: int, xvars: Sequence, aparams: Sequence, ring: Ring | None = None) -> Poly:
    """q^d coefficient of prod(1 + x_i q) / prod(1 + a_j q), by truncated series.

    Independent of :func:`double_tanisaki`: numerator factors are multiplied
    in directly and each denominator factor is expanded as the geometric
    series sum_k (-a_j)^k q^k.
    """
    m = len(xvars)
    if d < 0 or d > m:
        raise ValueError(f"degree d={d} out of range 0..{m}")
    xs, ring = _as_polys(xvars, ring)
    params, _ = _as_polys(list(aparams[:m + 1 - d]), ring)
    series = [ring.one()] + [ring.zero()] * d
    for x in xs:
        series = [series[k] + (x * series[k - 1] if k else ring.zero()) for k in range(d + 1)]
    for a in params:
        geo = [(-a) ** k for k in range(d + 1)]
        series = [
            sum((series[i] * geo[k - i] for i in range(k + 1)), ring.zero())
            for k in range(d + 1)
        ]
    return series[d]


def factorial_schur_column(d: int, xvars: Sequence, aparams: Sequence, ring: Ring | None = None) -> Poly:
    """Factorial Schur polynomial of the column shape (1^d) in x_1..x_m.

    Tableau sum over 1 <= i_1 < ... < i_d <= m of prod_j (x_{i_j} - a_{i_j - j + 1}).
    """
    m = len(xvars)
    if d < 0 or d > m:
        raise ValueError(f"column height d={d} out of range 0..{m}")
    xs, ring = _as_polys(xvars, ring)
    if d and len(aparams) < m - d + 1:
        raise ValueError(f"need {m - d + 1} parameters, got {len(aparams)}")
    params, _ = _as_polys(list(aparams), ring)
    total = ring.zero()
    for rows in combinations(range(m), d):
        term = ring.one()
        for j, i in enumerate(rows):
            # 0-based: a index (i+1) - (j+1) + 1 - 1 = i - j
            term = term * (xs[i] - params[i - j])
        total = total + term
    return total


# ---------------------------------------------------------------------------
# Text grammar
# ---------------------------------------------------------------------------

def to_text(f: Poly, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text: terms descending in ``order``, ``c*v^e*...`` with ring variable order."""
    if not f.terms:
        return "0"
    out = []
    for i, m in enumerate(order.sorted_desc(f.terms)):
        c = f.terms[m]
        body = format_rational(abs(c))
        factors = [f"{v}^{e}" for v, e in zip(f.ring.names, m) if e]
        if factors:
            body += "*" + "*".join(factors)
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TERM = re.compile(
    r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*"
    r"((?:\*\s*)?[A-Za-z]\w*(?:\^\d+)?(?:\s*\*\s*[A-Za-z]\w*(?:\^\d+)?)*)?\s*"
)
_FACTOR = re.compile(r"([A-Za-z]\w*)(?:\^(\d+))?")


def parse_poly(text: str, ring: Ring) -> Poly:
    """Inverse of :func:`to_text`; also accepts omitted ``^1`` and coefficients."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    pos, out = 0, {}
    first = True
    while pos < len(text):
        mt = _TERM.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:pos + 20]!r}")
        sign, coeff, factors = mt.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator near {text[pos:pos + 20]!r}")
        if coeff is None and not factors:
            raise ValueError(f"empty term near {text[pos:pos + 20]!r}")
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        m = [0] * ring.nvars
        for name, e in _FACTOR.findall(factors or ""):
            m[ring.index(name)] += int(e) if e else 1
        key = tuple(m)
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
        pos, first = mt.end(), False
    return Poly(ring, out, _clean=True)
