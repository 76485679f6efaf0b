"""Young-diagram and word combinatorics for the (n, lambda, s) family.

Partitions are weakly decreasing tuples of positive ints; compositions are
tuples of nonnegative ints. Boxes are addressed 1-based as (row, column).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]


class ParameterError(ValueError):
    pass


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise (trailing zeros dropped)."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise ParameterError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ParameterError(f"partition must be weakly decreasing: {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    """``"2,2,1"`` -> (2, 2, 1); ``""`` or ``"0"`` -> ()."""
    text = text.strip()
    if text in ("", "0", "()", "[]"):
        return ()
    try:
        return partition(int(t) for t in text.replace(" ", "").strip("()[]").split(","))
    except ValueError as exc:
        raise ParameterError(f"bad partition {text!r}: {exc}") from None


def partitions_up_to(n: int, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of size <= n (and length <= max_len), by size then reverse-lex."""
    for k in range(n + 1):
        yield from partitions_of(k, max_len)


def partitions_of(k: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions_of(k - first, None if max_len is None else max_len - 1, first):
            yield (first,) + rest


def conjugate(lam: Sequence[int]) -> Partition:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def _check_nm(lam: Partition, n: int, m: int):
    if sum(lam) > n:
        raise ParameterError(f"|lambda| = {sum(lam)} exceeds n = {n}")
    if not 1 <= m <= n:
        raise ParameterError(f"m = {m} outside 1..{n}")


def p_value(lam: Sequence[int], n: int, m: int) -> int:
    """Boxes of lambda in the last m of n columns: lambda'_n + ... + lambda'_{n-m+1}."""
    lam = partition(lam)
    _check_nm(lam, n, m)
    conj = conjugate(lam) + (0,) * n
    return sum(conj[n - m:n])


def row_overlaps(lam: Sequence[int], n: int, m: int, s: int) -> tuple[int, ...]:
    """c_{r,m} = max(lambda_r - (n - m), 0) for r = 1..s."""
    lam = partition(lam)
    _check_nm(lam, n, m)
    padded = lam + (0,) * max(s - len(lam), 0)
    return tuple(max(padded[r] - (n - m), 0) for r in range(s))


# ---------------------------------------------------------------------------
# The frame of a parameter triple
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Frame:
    n: int
    k: int
    s: int
    lam: Partition
    Lambda: Partition
    K: int
    P: tuple[tuple[int, ...], ...]   # row-wise box numbers, left to right
    xi: tuple[int, ...]              # xi[i-1] = row of box i
    phi: tuple[int, ...]             # phi[r-1] = xi(w_U(r)), w_U = identity
    successor: dict                  # box -> box directly to its right

    def position(self, box: int) -> tuple[int, int]:
        for r, row in enumerate(self.P, start=1):
            if box in row:
                return r, row.index(box) + 1
        raise KeyError(box)

    def on_right_edge(self, box: int) -> bool:
        return box not in self.successor

    def image_dimension(self, j: int) -> int:
        """dim of the image of the j-th power of the nilpotent: sum_r max(Lambda_r - j, 0)."""
        return sum(max(L - j, 0) for L in self.Lambda)


def validate_triple(n: int, lam: Sequence[int], s: int) -> Partition:
    lam = partition(lam)
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if s < 1:
        raise ParameterError(f"s must be positive, got {s}")
    if sum(lam) > n:
        raise ParameterError(f"|lambda| = {sum(lam)} exceeds n = {n}")
    if len(lam) > s:
        raise ParameterError(f"lambda has {len(lam)} rows but s = {s}")
    return lam


@lru_cache(maxsize=None)
def frame(n: int, lam: Partition, s: int) -> Frame:
    lam = validate_triple(n, lam, s)
    k = sum(lam)
    padded = lam + (0,) * (s - len(lam))
    Lambda = tuple(n - k + p for p in padded)
    K = sum(Lambda)
    grid: dict[tuple[int, int], int] = {}
    label = 0
    # columns right to left, top to bottom within a column
    for col in range(max(Lambda, default=0), 0, -1):
        for row in range(1, s + 1):
            if Lambda[row - 1] >= col:
                label += 1
                grid[row, col] = label
    P = tuple(tuple(grid[r, c] for c in range(1, Lambda[r - 1] + 1)) for r in range(1, s + 1))
    xi = [0] * K
    successor = {}
    for (r, c), b in grid.items():
        xi[b - 1] = r
        if (r, c + 1) in grid:
            successor[b] = grid[r, c + 1]
    phi = tuple(xi[r] for r in range(n))
    fr = Frame(n, k, s, lam, Lambda, K, P, tuple(xi), phi, successor)
    problem = frame_violation(fr)
    if problem:
        raise AssertionError(f"frame invariant broken for {(n, lam, s)}: {problem}")
    return fr


def frame_violation(fr: Frame) -> str | None:
    """First broken frame invariant, or None."""
    if fr.K != fr.s * (fr.n - fr.k) + fr.k:
        return "K != s(n-k)+k"
    lam_boxes = set()
    for r, row in enumerate(fr.P):
        lr = fr.lam[r] if r < len(fr.lam) else 0
        lam_boxes.update(row[len(row) - lr:] if lr else ())
    if lam_boxes != set(range(1, fr.k + 1)):
        return "boxes 1..k are not the rightmost lambda_r boxes of each row"
    # flag refinement of the identity: {1..d_j} = boxes with >= j boxes to their left
    for j in range(max(fr.Lambda, default=0) + 1):
        d = fr.image_dimension(j)
        boxes = {row[c] for row in fr.P for c in range(j, len(row))}
        if boxes != set(range(1, d + 1)):
            return f"identity flag does not refine the image filtration at power {j}"
    return None


def flag_refinement_holds(fr: Frame) -> bool:
    return frame_violation(fr) is None


# ---------------------------------------------------------------------------
# Staircases and substaircases
# ---------------------------------------------------------------------------

def _shuffles(seqs: tuple[tuple[int, ...], ...]) -> frozenset[tuple[int, ...]]:
    return _shuffles_sorted(tuple(sorted(s for s in seqs if s)))


@lru_cache(maxsize=None)
def _shuffles_sorted(seqs: tuple[tuple[int, ...], ...]) -> frozenset[tuple[int, ...]]:
    if not seqs:
        return frozenset({()})
    out = set()
    for i, seq in enumerate(seqs):
        if i and seqs[i - 1] == seq:
            continue
        rest = seqs[:i] + ((seq[1:],) if len(seq) > 1 else ()) + seqs[i + 1:]
        for tail in _shuffles_sorted(tuple(sorted(rest))):
            out.add((seq[0],) + tail)
    return frozenset(out)


def staircases(n: int, lam: Sequence[int], s: int) -> list[Composition]:
    """Distinct shuffles of the column staircases (0..lambda'_j - 1) and (s-1)^(n-k)."""
    lam = validate_triple(n, lam, s)
    seqs = [tuple(range(c)) for c in conjugate(lam)]
    seqs.append((s - 1,) * (n - sum(lam)))
    return sorted(_shuffles(tuple(seqs)))


def substaircases(n: int, lam: Sequence[int], s: int) -> list[Composition]:
    """Compositions bounded entrywise by some staircase, sorted."""
    out = set()
    for gamma in staircases(n, lam, s):
        out.update(product(*(range(g + 1) for g in gamma)))
    return sorted(out)


# ---------------------------------------------------------------------------
# Admissible words
# ---------------------------------------------------------------------------

def is_admissible(word: Sequence[int], fr: Frame) -> bool:
    """Direct check of both admissibility conditions (used as a brute-force oracle)."""
    if len(set(word)) != len(word) or any(not 1 <= b <= fr.K for b in word):
        return False
    if not set(range(1, fr.k + 1)) <= set(word):
        return False
    for i, b in enumerate(word):
        if not fr.on_right_edge(b) and fr.successor[b] not in word[:i]:
            return False
    return True


def admissible_words(n: int, lam: Sequence[int], s: int) -> list[tuple[int, ...]]:
    """All admissible injective words [n] -> [K], lexicographic."""
    fr = frame(n, partition(lam), s)
    K, k = fr.K, fr.k
    out: list[tuple[int, ...]] = []
    word: list[int] = []
    used: set[int] = set()

    def extend(i: int):
        missing = k - sum(1 for b in used if b <= k)
        if missing > n - i:
            return
        if i == n:
            out.append(tuple(word))
            return
        for b in range(1, K + 1):
            if b in used:
                continue
            nxt = fr.successor.get(b)
            if nxt is not None and nxt not in used:
                continue
            word.append(b)
            used.add(b)
            extend(i + 1)
            used.discard(b)
            word.pop()

    extend(0)
    return out


# ---------------------------------------------------------------------------
# Grassmannian Schubert shapes
# ---------------------------------------------------------------------------

def _fit(mu: Sequence[int], k: int, width: int, name: str) -> tuple[int, ...]:
    mu = partition(mu)
    if len(mu) > k or (mu and mu[0] > width):
        raise ParameterError(f"{name} = {mu} does not fit in the {k} x {width} rectangle")
    return mu + (0,) * (k - len(mu))


def rectangle_complement(mu: Sequence[int], k: int, n: int) -> Partition:
    mu = _fit(mu, k, n - k, "mu")
    return partition(n - k - mu[k - 1 - i] for i in range(k))


def grassmann_disjoint(lam: Sequence[int], mu: Sequence[int], k: int, n: int) -> bool:
    """True iff lambda is not contained in the complement of mu in the k x (n-k) box."""
    if not 0 <= k <= n:
        raise ParameterError(f"need 0 <= k <= n, got k={k}, n={n}")
    lam = _fit(lam, k, n - k, "lambda")
    mu = _fit(mu, k, n - k, "mu")
    comp = tuple(n - k - mu[k - 1 - i] for i in range(k))
    return any(a > b for a, b in zip(lam, comp))


def mu_zero(n: int, lam: Sequence[int], s: int, m: int) -> Partition:
    """((K-m)^p) with p = p^n_m(lambda)."""
    fr = frame(n, partition(lam), s)
    p = p_value(lam, n, m)
    return partition((fr.K - m,) * p) if fr.K > m else ()


def column_shape(d: int) -> Partition:
    return (1,) * d
