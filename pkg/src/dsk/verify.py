"""Named consistency checks C1-C10 and parameter sweeps.

Each check is a pure function of (check id, parameters, seed) apart from the
recorded wall time. Random choices (alpha tuples, sample points) come from a
``random.Random`` seeded with a string built from those three inputs.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .cache import GroebnerCache
from .grobner import (
    GREVLEX,
    Ideal,
    associated_graded,
    audit_groebner,
    hilbert_series,
    standard_monomials,
    vanishing_ideal_of_points,
)
from .ideals import (
    DEFAULT_COMPONENT_BUDGET,
    BudgetExceeded,
    ParameterTriple,
    equivariant_ideal,
    finite_locus,
    griffin_ideal,
    locus_patterns,
    sample_universal_point,
    universal_components,
    universal_vanishing_ideal,
)
from .polynomials import (
    Ring,
    as_fraction,
    double_tanisaki,
    evaluate,
    factorial_schur_column,
    format_rational,
    series_coeff_oracle,
    specialize,
    to_text,
)
from .shapes import (
    admissible_words,
    column_shape,
    frame_violation,
    grassmann_disjoint,
    mu_zero,
    p_value,
    partitions_up_to,
    row_overlaps,
    substaircases,
)

CHECK_IDS = tuple(f"C{i}" for i in range(1, 11))
CONTAINMENT_SAMPLES = 500
WITNESS_LIST_LIMIT = 24


class UnknownCheck(KeyError):
    pass


@dataclass
class Report:
    check: str
    n: int
    lam: tuple[int, ...]
    s: int
    alpha: list[str] | None
    seed: int
    verdict: str
    witness: dict
    millis: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "lambda": list(self.lam),
            "s": self.s,
            "alpha": self.alpha,
            "seed": self.seed,
            "verdict": self.verdict,
            "witness": self.witness,
            "millis": self.millis,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["check"], d["n"], tuple(d["lambda"]), d["s"], d["alpha"], d["seed"],
                   d["verdict"], d["witness"], d["millis"])

    def line(self) -> str:
        lam = ",".join(map(str, self.lam)) or "0"
        alpha = "" if self.alpha is None else " alpha=" + ",".join(self.alpha)
        return f"{self.check} n={self.n} lambda=({lam}) s={self.s}{alpha} {self.verdict} {self.millis}ms"


@dataclass
class _Context:
    triple: ParameterTriple
    seed: int
    budget: int = DEFAULT_COMPONENT_BUDGET
    audit: bool = False
    cache: GroebnerCache | None = None
    audits: int = 0
    audit_failure: str | None = None

    def rng(self, check: str, tag: str = "") -> random.Random:
        t = self.triple
        return random.Random(f"{self.seed}:{check}:{t.label()}:{tag}")

    def groebner(self, ideal: Ideal, task: str) -> tuple:
        if self.cache is not None:
            gb = self.cache.groebner(ideal, self.triple.label(), task)
        else:
            gb = ideal.groebner
        self.check_gb(gb, ideal.order, ideal.generators, task)
        return gb

    def check_gb(self, gb, order, generators, task: str):
        if not self.audit:
            return
        self.audits += 1
        problem = audit_groebner(gb, order, generators)
        if problem and self.audit_failure is None:
            self.audit_failure = f"{task}: {problem}"


def random_alpha(s: int, rng: random.Random, repeat: bool = False) -> tuple[Fraction, ...]:
    """``s`` pairwise distinct small rationals; with ``repeat`` the first two coincide."""
    vals: list[Fraction] = []
    while len(vals) < s:
        v = Fraction(rng.randint(-12, 12), rng.randint(1, 5))
        if v not in vals:
            vals.append(v)
    if repeat and s >= 2:
        vals[1] = vals[0]
    return tuple(vals)


def _fmt_alpha(alpha) -> list[str]:
    return [format_rational(as_fraction(a)) for a in alpha]


def _texts(gb, order=GREVLEX) -> list[str] | str:
    if len(gb) > WITNESS_LIST_LIMIT:
        return f"{len(gb)} elements"
    return [to_text(g, order) for g in gb]


def _first_difference(a: Sequence, b: Sequence, order=GREVLEX) -> str:
    sa, sb = set(a), set(b)
    for g in a:
        if g not in sb:
            return "left only: " + to_text(g, order)
    for g in b:
        if g not in sa:
            return "right only: " + to_text(g, order)
    return "bases differ in order only"


def _digest(gb, order=GREVLEX) -> str:
    import hashlib
    return hashlib.sha256("\n".join(to_text(g, order) for g in gb).encode()).hexdigest()[:16]


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


# ---------------------------------------------------------------------------
# Individual checks; each returns (verdict, witness, alpha or None)
# ---------------------------------------------------------------------------

def _alpha_for(ctx: _Context, check: str, alpha):
    if alpha is not None:
        return tuple(as_fraction(a) for a in alpha)
    return random_alpha(ctx.triple.s, ctx.rng(check, "alpha"))


def check_locus_dimension(ctx: _Context, alpha=None):
    t = ctx.triple
    alpha = _alpha_for(ctx, "C1", alpha)
    locus = finite_locus(t, alpha)
    ideal = vanishing_ideal_of_points(locus)
    ctx.check_gb(ideal.groebner, ideal.order, (), "I(X(alpha))")
    dim = len(standard_monomials(ideal))
    bad = next((p for p in locus.points for g in ideal.groebner
                if evaluate(g, dict(zip(t.x_ring.names, p)))), None)
    witness = {"points": len(locus), "dim": dim, "gb_digest": ideal.digest()}
    if bad is not None:
        witness["nonvanishing_at"] = _fmt_alpha(bad)
    return _verdict(dim == len(locus) and bad is None), witness, alpha


def check_orbit_harmonics(ctx: _Context, alpha=None):
    t = ctx.triple
    alpha = _alpha_for(ctx, "C2", alpha)
    vanishing = vanishing_ideal_of_points(finite_locus(t, alpha))
    ctx.check_gb(vanishing.groebner, vanishing.order, (), "I(X(alpha))")
    gr = associated_graded(vanishing)
    ctx.check_gb(gr.groebner, gr.order, (), "gr I(X(alpha))")
    griffin = ctx.groebner(griffin_ideal(t), "griffin")
    ok = gr.groebner == griffin
    witness = {"gr_gb": _texts(gr.groebner), "griffin_digest": _digest(griffin)}
    if not ok:
        witness["first_difference"] = _first_difference(gr.groebner, griffin)
    return _verdict(ok), witness, alpha


def staircase_series(subs: Iterable[Sequence[int]]) -> list[int]:
    subs = list(subs)
    out = [0] * (max((sum(a) for a in subs), default=0) + 1)
    for a in subs:
        out[sum(a)] += 1
    return out


def check_basis_counts(ctx: _Context, alpha=None):
    t = ctx.triple
    subs = substaircases(t.n, t.lam, t.s)
    words = admissible_words(t.n, t.lam, t.s)
    griffin = griffin_ideal(t)
    ctx.groebner(griffin, "griffin")
    hilb = hilbert_series(griffin)
    series = staircase_series(subs)
    dim = sum(hilb)
    witness = {"substaircases": len(subs), "dim": dim, "words": len(words),
               "hilbert": hilb, "staircase_series": series}
    ok = len(subs) == dim == len(words) and hilb == series
    return _verdict(ok), witness, None


def check_containment(ctx: _Context, alpha=None):
    t = ctx.triple
    rng = ctx.rng("C4", "points")
    gens = equivariant_ideal(t).generators
    patterns = locus_patterns(t)
    for i in range(CONTAINMENT_SAMPLES):
        f = rng.choice(patterns)
        if rng.random() < 0.4:
            pool = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, t.s))]
            u_vals = [rng.choice(pool) for _ in range(t.s)]
        else:
            u_vals = [Fraction(rng.randint(-30, 30), rng.randint(1, 7)) for _ in range(t.s)]
        point = sample_universal_point(t, f, u_vals)
        for g in gens:
            if evaluate(g, point):
                witness = {"generator": to_text(g), "pattern": list(f), "u": _fmt_alpha(u_vals),
                           "sample": i}
                return "fail", witness, None
    return "pass", {"samples": CONTAINMENT_SAMPLES, "generators": len(gens)}, None


def check_universal_equality(ctx: _Context, alpha=None):
    t = ctx.triple
    ncomp = len(universal_components(t))
    if ncomp > ctx.budget:
        raise BudgetExceeded(f"{ncomp} universal components exceed the budget of {ctx.budget}")
    J = ctx.groebner(equivariant_ideal(t), "equivariant")
    U = universal_vanishing_ideal(t, ctx.budget)
    ctx.check_gb(U.groebner, U.order, [], "I(universal locus)")
    comps = universal_components(t)
    # every element of the intersection must vanish on each component
    for g in U.groebner:
        for comp in comps:
            if comp.ideal.reduce(g):
                return "fail", {"not_vanishing": to_text(g), "pattern": list(comp.assignment)}, None
    ok = tuple(J) == tuple(U.groebner)
    witness = {"components": ncomp, "gb_size": len(J), "digest": _digest(J), "identical": ok}
    if not ok:
        witness["first_difference"] = _first_difference(J, U.groebner)
    return _verdict(ok), witness, None


def _fiber(ctx: _Context, J_gb, alpha) -> Ideal:
    t = ctx.triple
    subs = {f"u{j}": a for j, a in enumerate(alpha, start=1)}
    gens = tuple(p for p in (specialize(g, subs).to_ring(t.x_ring) for g in J_gb) if p)
    return Ideal(t.x_ring, gens, GREVLEX)


def check_fiber_dimensions(ctx: _Context, alpha=None):
    t = ctx.triple
    rank = len(substaircases(t.n, t.lam, t.s))
    J = ctx.groebner(equivariant_ideal(t), "equivariant")
    rng = ctx.rng("C6", "alphas")
    alphas = [tuple(Fraction(0) for _ in range(t.s))]
    alphas += [random_alpha(t.s, rng) for _ in range(3)]
    if t.s >= 2:
        alphas.append(random_alpha(t.s, rng, repeat=True))
    if alpha is not None:
        alphas.append(tuple(as_fraction(a) for a in alpha))
    fibers, ok = [], True
    for a in alphas:
        fib = _fiber(ctx, J, a)
        ctx.groebner(fib, "fiber")
        dim = len(standard_monomials(fib))
        entry = {"alpha": _fmt_alpha(a), "dim": dim, "matches_locus": None}
        if len(set(a)) == len(a):
            locus_ideal = vanishing_ideal_of_points(finite_locus(t, a))
            entry["matches_locus"] = fib.groebner == locus_ideal.groebner
            ok &= entry["matches_locus"]
        ok &= dim == rank
        fibers.append(entry)
    witness = {"rank": rank, "fibers": fibers,
               "note": "constant fiber dimension is consistent with freeness; it is not a proof"}
    return _verdict(ok), witness, None


def check_u_zero(ctx: _Context, alpha=None):
    t = ctx.triple
    J = ctx.groebner(equivariant_ideal(t), "equivariant")
    special = _fiber(ctx, J, [0] * t.s)
    gb = ctx.groebner(special, "u=0")
    griffin = ctx.groebner(griffin_ideal(t), "griffin")
    ok = gb == griffin
    witness = {"digest": _digest(gb), "gb_size": len(gb)}
    if not ok:
        witness["first_difference"] = _first_difference(gb, griffin)
    return _verdict(ok), witness, None


def check_schur_identity(ctx: _Context, alpha=None):
    n = ctx.triple.n
    ring = Ring(tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"a{i}" for i in range(1, n + 2)))
    xs = [ring.var(f"x{i}") for i in range(1, n + 1)]
    params = [ring.var(f"a{i}") for i in range(1, n + 2)]
    checked = 0
    for m in range(0, n + 1):
        for d in range(0, m + 1):
            a = params[:m + 1 - d]
            dt = double_tanisaki(d, xs[:m], a, ring)
            fs = factorial_schur_column(d, xs[:m], a, ring)
            series = series_coeff_oracle(d, xs[:m], a, ring)
            if not (dt == fs == series):
                return "fail", {"d": d, "m": m, "double_tanisaki": to_text(dt),
                                "factorial_schur": to_text(fs), "series": to_text(series)}, None
            checked += 1
    return "pass", {"pairs_checked": checked, "max_m": n}, None


def check_disjointness(ctx: _Context, alpha=None):
    t = ctx.triple
    K = t.frame.K
    checked = skipped = 0
    for m in range(1, t.n + 1):
        p = p_value(t.lam, t.n, m)
        mu0 = mu_zero(t.n, t.lam, t.s, m)
        for d in range(0, m + 1):
            if d and K == m:
                # (1^d) does not fit in an m x 0 rectangle
                skipped += 1
                continue
            disjoint = grassmann_disjoint(column_shape(d), mu0, m, K)
            if disjoint != (d > m - p):
                return "fail", {"m": m, "d": d, "p": p, "K": K, "mu0": list(mu0),
                                "disjoint": disjoint}, None
            checked += 1
    return "pass", {"pairs_checked": checked, "skipped_outside_rectangle": skipped}, None


def check_divisibility_and_frame(ctx: _Context, alpha=None):
    t = ctx.triple
    fr = t.frame
    problem = frame_violation(fr)
    if problem:
        return "fail", {"frame": problem}, None
    checked = 0
    for m in range(1, t.n + 1):
        p = p_value(t.lam, t.n, m)
        c = row_overlaps(t.lam, t.n, m, t.s)
        if sum(c) != p:
            return "fail", {"m": m, "row_overlaps": list(c), "p": p}, None
        budget = Counter({r: c[r - 1] for r in range(1, t.s + 1)})
        for d in range(max(0, m - p) + 1, m + 1):
            used = Counter(fr.phi[:m + 1 - d])
            if any(used[r] > budget[r] for r in used):
                return "fail", {"m": m, "d": d, "phi_prefix": list(fr.phi[:m + 1 - d]),
                                "row_overlaps": list(c)}, None
            checked += 1
    witness = {"divisibility_checked": checked, "K": fr.K, "Lambda": list(fr.Lambda),
               "flag_powers": max(fr.Lambda) + 1}
    return "pass", witness, None


CHECKS: dict[str, Callable] = {
    "C1": check_locus_dimension,
    "C2": check_orbit_harmonics,
    "C3": check_basis_counts,
    "C4": check_containment,
    "C5": check_universal_equality,
    "C6": check_fiber_dimensions,
    "C7": check_u_zero,
    "C8": check_schur_identity,
    "C9": check_disjointness,
    "C10": check_divisibility_and_frame,
}


def run_check(check: str, triple: ParameterTriple, *, alpha=None, seed: int = 0,
              budget: int = DEFAULT_COMPONENT_BUDGET, audit: bool = False,
              cache: GroebnerCache | None = None, timings: bool = True) -> Report:
    if check not in CHECKS:
        raise UnknownCheck(f"unknown check {check!r}; expected one of {', '.join(CHECK_IDS)}")
    ctx = _Context(triple, seed, budget, audit, cache)
    start = time.perf_counter()
    used_alpha = None
    try:
        verdict, witness, used_alpha = CHECKS[check](ctx, alpha)
    except BudgetExceeded as exc:
        verdict, witness = "skipped", {"reason": f"budget exceeded: {exc}"}
    if ctx.audit:
        witness["audits"] = ctx.audits
        if ctx.audit_failure:
            verdict = "fail"
            witness["audit_failure"] = ctx.audit_failure
    millis = round((time.perf_counter() - start) * 1000) if timings else 0
    return Report(check, triple.n, triple.lam, triple.s,
                  None if used_alpha is None else _fmt_alpha(used_alpha),
                  seed, verdict, witness, millis)


def valid_triples(max_n: int, max_s: int, min_n: int = 1) -> list[ParameterTriple]:
    out = []
    for n in range(min_n, max_n + 1):
        for s in range(1, max_s + 1):
            for lam in partitions_up_to(n, s):
                out.append(ParameterTriple(n, lam, s))
    return out


def _run_task(args) -> Report:
    check, triple, kwargs = args
    return run_check(check, triple, **kwargs)


def sweep(max_n: int, max_s: int, checks: Sequence[str] = CHECK_IDS, seed: int = 0, *,
          jobs: int = 1, **kwargs) -> list[Report]:
    """Run ``checks`` on every valid triple with n <= max_n and s <= max_s.

    Reports come back ordered by (check, n, s, lambda) regardless of ``jobs``.
    """
    for c in checks:
        if c not in CHECKS:
            raise UnknownCheck(f"unknown check {c!r}")
    tasks = [(c, t, dict(seed=seed, **kwargs))
             for c in sorted(checks, key=CHECK_IDS.index)
             for t in valid_triples(max_n, max_s)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_task, tasks, chunksize=4))
    return [_run_task(task) for task in tasks]
