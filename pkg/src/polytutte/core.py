"""
Integer submodular rank functions and the polymatroids they cut out.

Subsets of the ground set ``[n] = {1, ..., n}`` are encoded as bitmasks:
bit ``i - 1`` set means element ``i`` belongs to the subset.  A rank
function is stored as the dense table of its ``2**n`` values, indexed by
mask.  Integer vectors (bases, lattice points) are plain tuples of ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidRank,
    NonZeroEmpty,
    NotSubmodular,
    PolymatroidError,
    VertexOutOfRange,
    WrongTableSize,
)

MAX_N = 16

IntVector = tuple


# ---------------------------------------------------------------------------
# subset masks


def mask_of(elements: Iterable[int]) -> int:
    """Mask of a collection of 1-based elements."""
    mask = 0
    for i in elements:
        mask |= 1 << (i - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based elements of ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def format_subset(mask: int) -> str:
    return "{" + ",".join(str(i) for i in elements_of(mask)) + "}"


def min_element(mask: int) -> int:
    """Smallest element of a nonempty mask (1-based)."""
    return (mask & -mask).bit_length()


@lru_cache(maxsize=None)
def subset_matrix(n: int) -> np.ndarray:
    """0/1 matrix of shape ``(2**n, n)``; row ``mask`` is the indicator of ``mask``."""
    masks = np.arange(1 << n, dtype=np.int64)
    m = (masks[:, None] >> np.arange(n, dtype=np.int64)[None, :]) & 1
    m.setflags(write=False)
    return m


# ---------------------------------------------------------------------------
# rank functions


@dataclass(frozen=True)
class RankFunction:
    """A validated integer submodular set function with ``f(empty) = 0``.

    Build instances through :func:`validate_rank_function` (or one of the
    ``make_*`` constructors); the bare constructor does not validate.
    """

    n: int
    values: tuple

    def __call__(self, mask: int) -> int:
        return self.values[mask]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def total(self) -> int:
        """``f([n])``."""
        return self.values[-1]

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.values, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def is_matroid(self) -> bool:
        return is_matroid_rank(self)


def _check_local_submodularity(n: int, vals: np.ndarray) -> bool:
    # f(S+i) + f(S+j) >= f(S+i+j) + f(S) for all S and i, j outside S is
    # equivalent to the full pairwise inequality.
    masks = np.arange(1 << n, dtype=np.int64)
    for i in range(n):
        bi = 1 << i
        for j in range(i + 1, n):
            bj = 1 << j
            S = masks[(masks & (bi | bj)) == 0]
            if np.any(vals[S | bi] + vals[S | bj] < vals[S | bi | bj] + vals[S]):
                return False
    return True


def _first_submodular_violation(n: int, vals: np.ndarray) -> tuple[int, int]:
    masks = np.arange(1 << n, dtype=np.int64)
    for I in range(1 << n):
        gap = vals[I] + vals - vals[I | masks] - vals[I & masks]
        bad = np.flatnonzero(gap < 0)
        if bad.size:
            return I, int(bad[0])
    raise AssertionError("no violating pair found")  # pragma: no cover


def validate_rank_function(n: int, values: Sequence[int]) -> RankFunction:
    """Check ``f(empty) = 0`` and submodularity, returning a :class:`RankFunction`.

    Raises
    ------
    WrongTableSize
        ``values`` does not have exactly ``2**n`` entries (or ``n`` is out of range).
    NonZeroEmpty
        ``values[0] != 0``.
    NotSubmodular
        Some pair ``(I, J)`` has ``f(I) + f(J) < f(I | J) + f(I & J)``; the
        lexicographically first such pair is attached.
    """
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_N:
        raise WrongTableSize(f"ground-set size must be in 1..{MAX_N}, got {n!r}")
    values = tuple(int(v) for v in values)
    if len(values) != 1 << n:
        raise WrongTableSize(f"expected {1 << n} rank values for n={n}, got {len(values)}")
    if values[0] != 0:
        raise NonZeroEmpty(f"f(empty set) must be 0, got {values[0]}")
    vals = np.array(values, dtype=np.int64)
    if not _check_local_submodularity(n, vals):
        raise NotSubmodular(*_first_submodular_violation(n, vals))
    return RankFunction(int(n), values)


def is_matroid_rank(f: RankFunction) -> bool:
    """True iff every one-element increment ``f(I + i) - f(I)`` is 0 or 1."""
    vals = f.array
    masks = np.arange(1 << f.n, dtype=np.int64)
    for i in range(f.n):
        bit = 1 << i
        S = masks[(masks & bit) == 0]
        inc = vals[S | bit] - vals[S]
        if np.any((inc < 0) | (inc > 1)):
            return False
    return True


# ---------------------------------------------------------------------------
# polymatroids


@dataclass(frozen=True)
class Polymatroid:
    """A rank function together with its full, lexicographically sorted base list."""

    rank: RankFunction
    bases: tuple

    @property
    def n(self) -> int:
        return self.rank.n

    def __len__(self) -> int:
        return len(self.bases)

    def __iter__(self):
        return iter(self.bases)

    @cached_property
    def base_set(self) -> frozenset:
        return frozenset(self.bases)


def _rank_of(P: Union[Polymatroid, RankFunction]) -> RankFunction:
    return P.rank if isinstance(P, Polymatroid) else P


def contains(P: Union[Polymatroid, RankFunction], a: Sequence[int]) -> bool:
    """Membership test against the rank table (never the cached base list)."""
    f = _rank_of(P)
    if len(a) != f.n:
        raise DimensionMismatch(f"vector of length {len(a)} for ground set of size {f.n}")
    if sum(a) != f.total:
        return False
    sums = subset_matrix(f.n) @ np.asarray(a, dtype=np.int64)
    return bool(np.all(sums <= f.array))


def coordinate_bounds(f: RankFunction) -> tuple[IntVector, IntVector]:
    """Per-coordinate bounds ``L_i = f([n]) - f([n] - i)`` and ``U_i = f({i})``."""
    full = f.full_mask
    L = tuple(f.total - f(full & ~(1 << i)) for i in range(f.n))
    U = tuple(f(1 << i) for i in range(f.n))
    return L, U


def enumerate_bases(f: RankFunction) -> Polymatroid:
    """All integer points of the base polytope of ``f``, in lexicographic order.

    Depth-first over coordinates inside ``[L_i, U_i]``; a prefix is cut as
    soon as a constraint on a subset of the assigned coordinates fails, or
    the remaining bounds can no longer reach the total ``f([n])``.
    """
    n = f.n
    vals = f.array
    L, U = coordinate_bounds(f)
    total = f.total
    # suffix sums of the bounds for the reachability cut
    lo_tail = [0] * (n + 1)
    hi_tail = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        lo_tail[k] = lo_tail[k + 1] + L[k]
        hi_tail[k] = hi_tail[k + 1] + U[k]

    out = []
    prefix = [0] * n

    def extend(k: int, sums: np.ndarray, partial: int) -> None:
        # sums[m] = sum of prefix over mask m, for every m < 2**k
        if k == n:
            if partial == total:
                out.append(tuple(prefix))
            return
        bit = 1 << k
        if k == n - 1:
            candidates = [total - partial] if L[k] <= total - partial <= U[k] else []
        else:
            lo = max(L[k], total - partial - hi_tail[k + 1])
            hi = min(U[k], total - partial - lo_tail[k + 1])
            candidates = range(lo, hi + 1)
        upper = vals[bit:2 * bit]
        for v in candidates:
            new = sums + v
            if np.all(new <= upper):
                prefix[k] = v
                extend(k + 1, np.concatenate([sums, new]), partial + v)

    extend(0, np.zeros(1, dtype=np.int64), 0)
    return Polymatroid(f, tuple(out))


def polymatroid(f: RankFunction) -> Polymatroid:
    """Alias of :func:`enumerate_bases`."""
    return enumerate_bases(f)


# ---------------------------------------------------------------------------
# standard families


def make_uniform_matroid(d: int, n: int) -> RankFunction:
    """Rank function ``f(I) = min(|I|, d)`` of the uniform matroid ``U_{d,n}``."""
    if not 0 <= d <= n:
        raise InvalidRank(f"uniform matroid needs 0 <= d <= n, got d={d}, n={n}")
    return validate_rank_function(n, [min(bin(m).count("1"), d) for m in range(1 << n)])


def _components(vertex_count: int, edges) -> int:
    parent = list(range(vertex_count))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    count = vertex_count
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def make_graphic_matroid(vertex_count: int, edges: Sequence[Sequence[int]]) -> RankFunction:
    """Cycle-matroid rank ``f(A) = |V| - c(V, A)``; element ``i`` is the ``i``-th edge.

    Loops and parallel edges are allowed; vertices are 0-indexed.
    """
    edges = [tuple(int(x) for x in e) for e in edges]
    for e in edges:
        if len(e) != 2 or not all(0 <= x < vertex_count for x in e):
            raise VertexOutOfRange(f"edge {e} not within {vertex_count} vertices")
    n = len(edges)
    if n == 0:
        raise InvalidRank("a graph needs at least one edge to define a ground set")
    values = []
    for mask in range(1 << n):
        chosen = [edges[i - 1] for i in elements_of(mask)]
        values.append(vertex_count - _components(vertex_count, chosen))
    return validate_rank_function(n, values)


def make_coverage_polymatroid(n: int, parts: Iterable[tuple[Iterable[int], int]]) -> RankFunction:
    """Weighted coverage function ``f(I) = sum of w_k over parts S_k meeting I``.

    ``parts`` is a list of ``(elements, weight)`` with 1-based elements of ``[n]``.
    """
    parts = [(mask_of(S), int(w)) for S, w in parts]
    for S, _ in parts:
        if S >> n:
            raise DimensionMismatch(f"part {format_subset(S)} exceeds ground set [{n}]")
    values = [sum(w for S, w in parts if S & m) for m in range(1 << n)]
    return validate_rank_function(n, values)


def make_random_coverage_polymatroid(
    n: int, seed: int, ground: int, parts: int, max_weight: int
) -> RankFunction:
    """Seeded random coverage polymatroid.

    Draws a random map ``g: [ground] -> [n]`` and ``parts`` pairs
    ``(S_k, w_k)`` with ``S_k`` a nonempty random subset of ``[ground]`` and
    ``w_k`` uniform in ``[1, max_weight]``; then ``f(I)`` sums the weights of
    the ``S_k`` meeting ``g^{-1}(I)``.  Submodular by construction.
    """
    if parts < 1 or ground < 1 or max_weight < 1:
        raise PolymatroidError("coverage generator needs parts, ground, max_weight >= 1")
    rng = np.random.default_rng(seed)
    g = rng.integers(1, n + 1, size=ground)
    drawn = []
    for _ in range(parts):
        members = np.zeros(ground, dtype=bool)
        while not members.any():
            members = rng.random(ground) < 0.5
        w = int(rng.integers(1, max_weight + 1))
        drawn.append((sorted(set(int(x) for x in g[members])), w))
    return make_coverage_polymatroid(n, drawn)


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``[n]`` given by its images ``(w(1), ..., w(n))``."""

    images: tuple

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise PolymatroidError(f"not a permutation of [n]: {self.images}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[j - 1] = imgs[j - 1], imgs[i - 1]
        return cls(tuple(imgs))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, wi in enumerate(self.images, start=1):
            inv[wi - 1] = i
        return Permutation(tuple(inv))

    def act(self, a: Sequence[int]) -> IntVector:
        """``w(a) = (a_{w(1)}, ..., a_{w(n)})``."""
        if len(a) != self.n:
            raise DimensionMismatch(f"vector of length {len(a)} for permutation of [{self.n}]")
        return tuple(a[wi - 1] for wi in self.images)

    def image_of_mask(self, mask: int) -> int:
        """``w(I) = {w(i) : i in I}``."""
        return mask_of(self(i) for i in elements_of(mask))


def permute_rank_function(f: RankFunction, w: Permutation) -> RankFunction:
    """``f_w(I) = f(w(I))``, the rank function of ``w(P_f)``."""
    if w.n != f.n:
        raise DimensionMismatch(f"permutation of [{w.n}] applied to ground set [{f.n}]")
    return RankFunction(f.n, tuple(f(w.image_of_mask(m)) for m in range(1 << f.n)))


def apply_permutation(P: Polymatroid, w: Permutation) -> Polymatroid:
    """The polymatroid ``w(P) = {w(a) : a in P}`` with rank function ``f o w``."""
    fw = permute_rank_function(P.rank, w)
    return Polymatroid(fw, tuple(sorted(w.act(a) for a in P.bases)))
