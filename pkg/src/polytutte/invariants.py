"""
The polymatroid Tutte polynomial and the checks built on it.

``polymatroid_tutte`` sums ``x^oi * y^oe * (x+y-1)^ie`` over the bases;
the remaining functions compare it with the classical matroid Tutte
polynomial, with the lattice-distance series, under coordinate
permutations, and fiber by fiber along an adjacent transposition.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .activity import ActivityRecord, Fiber, activity_table, fiber_decomposition
from .core import (
    Permutation,
    Polymatroid,
    RankFunction,
    apply_permutation,
    coordinate_bounds,
    enumerate_bases,
    is_matroid_rank,
)
from .errors import DimensionMismatch, EmptyPolymatroid, NotAMatroidRank, PivotOutOfRange
from .poly import X, Y, BivariatePolynomial, TruncatedSeries, expand_transformed_tutte

ZERO = BivariatePolynomial()
ONE = BivariatePolynomial.constant(1)


@lru_cache(maxsize=None)
def summand(oi: int, oe: int, ie: int) -> BivariatePolynomial:
    """``x^oi * y^oe * (x + y - 1)^ie``."""
    return BivariatePolynomial.monomial(oi, oe) * (X + Y - 1) ** ie


def record_summand(r: ActivityRecord) -> BivariatePolynomial:
    return summand(r.oi, r.oe, r.ie)


def polymatroid_tutte(P: Polymatroid) -> BivariatePolynomial:
    """Sum of the activity summands over all bases; the zero polynomial for empty ``P``."""
    total = ZERO
    for r in activity_table(P).values():
        total = total + record_summand(r)
    return total


# ---------------------------------------------------------------------------
# classical Tutte polynomial of a matroid


def _require_matroid(f: RankFunction) -> None:
    if not is_matroid_rank(f):
        raise NotAMatroidRank("rank increments must all be 0 or 1")


def matroid_bases(f: RankFunction) -> list[int]:
    """Bases as masks: sets ``B`` with ``|B| = f(B) = f(E)``."""
    _require_matroid(f)
    r = f.total
    return [m for m in range(1 << f.n) if bin(m).count("1") == r and f(m) == r]


def classical_tutte_activity(f: RankFunction) -> BivariatePolynomial:
    """Tutte polynomial as a sum of ``x^i(B) y^j(B)`` over matroid bases.

    ``e in B`` is internally active when no smaller ``e'`` makes
    ``B - e + e'`` a basis; ``e not in B`` is externally active when no
    smaller ``e'`` makes ``B + e - e'`` a basis.
    """
    bases = matroid_bases(f)
    basis_set = set(bases)
    total = ZERO
    for B in bases:
        internal = external = 0
        for e in range(f.n):
            be = 1 << e
            smaller = [1 << k for k in range(e)]
            if B & be:
                if not any((B & ~be) | s in basis_set for s in smaller if not B & s):
                    internal += 1
            else:
                if not any((B | be) & ~s in basis_set for s in smaller if B & s):
                    external += 1
        total = total + BivariatePolynomial.monomial(internal, external)
    return total


def classical_tutte_corank_nullity(f: RankFunction) -> BivariatePolynomial:
    """``sum over A of (x-1)^(r(E)-r(A)) * (y-1)^(|A|-r(A))``."""
    _require_matroid(f)
    rE = f.total
    total = ZERO
    for A in range(1 << f.n):
        rA = f(A)
        total = total + (X - 1) ** (rE - rA) * (Y - 1) ** (bin(A).count("1") - rA)
    return total


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
           73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139)


def correspondence_sample_points(n: int) -> list[tuple[int, int]]:
    """Grid of primes ``V x V`` minus points where ``x + y - xy``, ``x`` or ``y`` vanish.

    ``|V| = max(6, 2n + 2)``, so every row still has more than ``2n``
    points after the one singular point ``(2, 2)`` is dropped.
    """
    k = max(6, 2 * n + 2)
    V = _PRIMES[:k]
    return [(x, y) for x in V for y in V if x + y - x * y != 0]


def correspondence_check(f: RankFunction, T: Optional[BivariatePolynomial] = None) -> bool:
    """Sampled check of ``T_M * x^(n-d) * y^d == s^n * T_P(x/s, y/s)``, ``s = x + y - xy``.

    ``T`` defaults to :func:`classical_tutte_activity`.
    """
    return correspondence_failure(f, T) is None


def correspondence_failure(f: RankFunction, T: Optional[BivariatePolynomial] = None):
    """First sample point ``(x, y, lhs, rhs)`` where the identity fails, or ``None``."""
    _require_matroid(f)
    if T is None:
        T = classical_tutte_activity(f)
    TP = polymatroid_tutte(enumerate_bases(f))
    n, d = f.n, f.total
    for x, y in correspondence_sample_points(n):
        s = Fraction(x + y - x * y)
        lhs = T.evaluate(x, y) * Fraction(x) ** (n - d) * Fraction(y) ** d
        rhs = s**n * TP.evaluate(Fraction(x) / s, Fraction(y) / s)
        if lhs != rhs:
            return x, y, lhs, rhs
    return None


# ---------------------------------------------------------------------------
# lattice distances and the tilde series


def _check_dims(a, c):
    if len(a) != len(c):
        raise DimensionMismatch(f"lengths {len(a)} and {len(c)} differ")


def d_gt(a: Sequence[int], c: Sequence[int]) -> int:
    """``sum over i with a_i > c_i of (a_i - c_i)``."""
    _check_dims(a, c)
    return sum(ai - ci for ai, ci in zip(a, c) if ai > ci)


def d_lt(a: Sequence[int], c: Sequence[int]) -> int:
    """``sum over i with c_i > a_i of (c_i - a_i)``."""
    _check_dims(a, c)
    return sum(ci - ai for ai, ci in zip(a, c) if ci > ai)


@dataclass(frozen=True)
class DistanceProfile:
    point: tuple
    d_gt: int
    d_lt: int


def polytope_distance(P: Polymatroid, c: Sequence[int]) -> DistanceProfile:
    """Both one-sided distances minimised independently over the bases."""
    if not P.bases:
        raise EmptyPolymatroid("distance to an empty polymatroid is undefined")
    c = tuple(int(x) for x in c)
    return DistanceProfile(c, min(d_gt(a, c) for a in P.bases), min(d_lt(a, c) for a in P.bases))


def truncated_tilde_series(P: Polymatroid, D: int, margin: int = 0, chunk: int = 8192) -> TruncatedSeries:
    """``sum of u^{d>(P,c)} v^{d<(P,c)}`` over lattice points ``c``, kept to total degree ``D``.

    Every ``c`` with a coordinate outside ``[L_i - D, U_i + D]`` is farther
    than ``D`` from all bases, so that box is scanned.  ``margin`` widens
    the box further (used to test the box argument).
    """
    if not P.bases:
        raise EmptyPolymatroid("the tilde series needs a nonempty polymatroid")
    if D < 0:
        raise ValueError(f"degree cap must be >= 0, got {D}")
    L, U = coordinate_bounds(P.rank)
    pad = D + margin
    axes = [np.arange(lo - pad, hi + pad + 1, dtype=np.int64) for lo, hi in zip(L, U)]
    bases = np.array(P.bases, dtype=np.int64)
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, P.n)
    counts: dict = {}
    for start in range(0, len(grid), chunk):
        pts = grid[start:start + chunk]
        diff = bases[None, :, :] - pts[:, None, :]
        gt = np.where(diff > 0, diff, 0).sum(axis=2).min(axis=1)
        lt = np.where(diff < 0, -diff, 0).sum(axis=2).min(axis=1)
        keep = gt + lt <= D
        pairs, mult = np.unique(np.stack([gt[keep], lt[keep]], axis=1), axis=0, return_counts=True)
        for (p, q), m in zip(pairs.tolist(), mult.tolist()):
            counts[(p, q)] = counts.get((p, q), 0) + m
    return TruncatedSeries(counts, D)


def transformed_tutte_series(P: Polymatroid, D: int) -> TruncatedSeries:
    """``T_P(1/(1-u), 1/(1-v))`` truncated at ``D``, from the activity records."""
    return expand_transformed_tutte(activity_table(P).values(), D)


def series_equivalence_check(P: Polymatroid, D: int = 4) -> bool:
    return series_mismatch(P, D) == {}


def series_mismatch(P: Polymatroid, D: int = 4) -> dict:
    """Coefficients where the lattice series and the transformed polynomial differ."""
    if not P.bases:
        raise EmptyPolymatroid("series check excludes the empty polymatroid")
    return truncated_tilde_series(P, D).difference(transformed_tutte_series(P, D))


# ---------------------------------------------------------------------------
# permutation invariance


def adjacent_transpositions(n: int) -> list[Permutation]:
    return [Permutation.transposition(n, h, h + 1) for h in range(1, n)]


def default_permutations(n: int, all_perms: bool = False) -> list[Permutation]:
    """Full ``S_n`` for ``n <= 5`` (or when forced); adjacent transpositions beyond."""
    if all_perms or n <= 5:
        return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    return adjacent_transpositions(n)


def sn_invariance_failure(P: Polymatroid, ws: Optional[Iterable[Permutation]] = None):
    """First ``(w, T_{w(P)})`` with a different polynomial from ``T_P``, or ``None``."""
    ref = polymatroid_tutte(P)
    for w in default_permutations(P.n) if ws is None else ws:
        Tw = polymatroid_tutte(apply_permutation(P, w))
        if Tw != ref:
            return w, Tw
    return None


def sn_invariance_check(P: Polymatroid, ws: Optional[Iterable[Permutation]] = None) -> bool:
    return sn_invariance_failure(P, ws) is None


# ---------------------------------------------------------------------------
# fiber identities along the transposition (h, h+1)


@dataclass(frozen=True)
class FiberIdentityReport:
    fiber: Fiber
    A: BivariatePolynomial
    B: BivariatePolynomial
    C: BivariatePolynomial
    D_term: BivariatePolynomial
    E_divisor_note: Optional[str]
    interior_ok: bool
    holds: bool


def _outside_pattern(r: ActivityRecord, skip: set, labels=None) -> str:
    # label of each position; identity unless the record lives in w(P)
    n = len(r.basis)
    cells = {}
    for pos in range(1, n + 1):
        lab = labels(pos) if labels else pos
        if lab in skip:
            continue
        i = bool(r.int_set >> (pos - 1) & 1)
        e = bool(r.ext_set >> (pos - 1) & 1)
        cells[lab] = ("I" if i else "_") + ("E" if e else "_")
    return " ".join(f"{k}:{cells[k]}" for k in sorted(cells))


def fiber_identity_check(P: Polymatroid, h: int) -> list[FiberIdentityReport]:
    """Compare each fiber's summands in ``P`` with those of its image in ``w(P)``, ``w = (h h+1)``.

    Singleton fibers need ``A == C``.  Longer fibers need equal summands at
    every interior member and ``A + B == C + D_term`` at the two ends.
    """
    if not 1 <= h <= P.n - 1:
        raise PivotOutOfRange(f"pivot h={h} needs 1 <= h <= n-1 = {P.n - 1}")
    w = Permutation.transposition(P.n, h, h + 1)
    Pw = apply_permutation(P, w)
    rec = activity_table(P)
    rec_w = activity_table(Pw)
    skip = {h, h + 1}
    reports = []
    for F in fiber_decomposition(P, h):
        ra, rb = rec[F.first], rec[F.last]
        rwa, rwb = rec_w[w.act(F.first)], rec_w[w.act(F.last)]
        A, C = record_summand(ra), record_summand(rwa)
        if len(F) == 1:
            B = D_term = ZERO
            interior_ok = True
            holds = A == C
        else:
            B, D_term = record_summand(rb), record_summand(rwb)
            interior_ok = all(record_summand(rec[b]) == record_summand(rec_w[w.act(b)])
                              for b in F.members[1:-1])
            holds = interior_ok and A + B == C + D_term
        patterns = {_outside_pattern(ra, skip), _outside_pattern(rb, skip),
                    _outside_pattern(rwa, skip, w), _outside_pattern(rwb, skip, w)}
        note = patterns.pop() if len(patterns) == 1 else None
        reports.append(FiberIdentityReport(F, A, B, C, D_term, note, interior_ok, holds))
    return reports
