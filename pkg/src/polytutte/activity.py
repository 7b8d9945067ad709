"""
Internal and external activities of polymatroid bases.

The exchange predicates are the primary route; the tight-set
characterization is kept separate so each can be checked against the
other.  Exchange membership always goes through :func:`~polytutte.core.contains`,
i.e. through the rank table.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from .core import Polymatroid, contains, format_subset, mask_of, min_element, subset_matrix
from .errors import GapInFiber, NotABasis, PivotOutOfRange, PolymatroidError


def unit(n: int, i: int) -> tuple:
    """The unit vector ``e_i`` in ``Z^n`` (1-based)."""
    return tuple(1 if k == i else 0 for k in range(1, n + 1))


def shifted(a, plus: int, minus: int) -> tuple:
    """``a + e_plus - e_minus``."""
    b = list(a)
    b[plus - 1] += 1
    b[minus - 1] -= 1
    return tuple(b)


def _require_basis(P: Polymatroid, a) -> tuple:
    a = tuple(int(x) for x in a)
    if not contains(P, a):
        raise NotABasis(f"{a} is not a basis of the polymatroid")
    return a


def _require_index(P: Polymatroid, i: int) -> None:
    if not 1 <= i <= P.n:
        raise PolymatroidError(f"index {i} outside [1, {P.n}]")


def is_internally_active(P: Polymatroid, a, i: int) -> bool:
    """``a - e_i + e_j`` leaves ``P`` for every ``j < i``."""
    a = _require_basis(P, a)
    _require_index(P, i)
    return not any(contains(P, shifted(a, j, i)) for j in range(1, i))


def is_externally_active(P: Polymatroid, a, i: int) -> bool:
    """``a + e_i - e_j`` leaves ``P`` for every ``j < i``."""
    a = _require_basis(P, a)
    _require_index(P, i)
    return not any(contains(P, shifted(a, i, j)) for j in range(1, i))


@dataclass(frozen=True)
class ActivityRecord:
    basis: tuple
    int_set: int
    ext_set: int
    oi: int
    oe: int
    ie: int

    @classmethod
    def from_sets(cls, basis, int_set: int, ext_set: int) -> "ActivityRecord":
        return cls(
            tuple(basis),
            int_set,
            ext_set,
            bin(int_set & ~ext_set).count("1"),
            bin(ext_set & ~int_set).count("1"),
            bin(int_set & ext_set).count("1"),
        )

    @property
    def exponents(self) -> tuple[int, int, int]:
        return self.oi, self.oe, self.ie

    def __str__(self):
        return (
            f"{self.basis} Int={format_subset(self.int_set)} Ext={format_subset(self.ext_set)} "
            f"(oi,oe,ie)=({self.oi},{self.oe},{self.ie})"
        )


def activity_record(P: Polymatroid, a) -> ActivityRecord:
    a = _require_basis(P, a)
    n = P.n
    int_set = mask_of(i for i in range(1, n + 1)
                      if not any(contains(P, shifted(a, j, i)) for j in range(1, i)))
    ext_set = mask_of(i for i in range(1, n + 1)
                      if not any(contains(P, shifted(a, i, j)) for j in range(1, i)))
    return ActivityRecord.from_sets(a, int_set, ext_set)


@lru_cache(maxsize=512)
def activity_table(P: Polymatroid) -> dict:
    """Map every basis of ``P`` to its :class:`ActivityRecord` (memoised per polymatroid)."""
    return {a: activity_record(P, a) for a in P.bases}


def activity_records(P: Polymatroid) -> list[ActivityRecord]:
    table = activity_table(P)
    return [table[a] for a in P.bases]


# ---------------------------------------------------------------------------
# tight sets


@dataclass(frozen=True)
class TightFamily:
    basis: tuple
    members: tuple

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)


def tight_sets(P: Polymatroid, a) -> TightFamily:
    """All masks ``I`` with ``sum_{i in I} a_i = f(I)``, sorted by mask."""
    a = _require_basis(P, a)
    sums = subset_matrix(P.n) @ np.asarray(a, dtype=np.int64)
    members = tuple(int(m) for m in np.flatnonzero(sums == P.rank.array))
    return TightFamily(a, members)


def active_via_tight_sets(
    P: Polymatroid, a, i: int, kind: Literal["internal", "external"]
) -> bool:
    """Activity read off the tight family.

    internal: some ``I`` with ``min(I) = i`` has ``[n] - I`` tight.
    external: some tight ``I`` has ``min(I) = i``.
    """
    fam = tight_sets(P, a)
    _require_index(P, i)
    full = P.rank.full_mask
    if kind == "internal":
        return any(T != full and min_element(full & ~T) == i for T in fam.members)
    if kind == "external":
        return any(T and min_element(T) == i for T in fam.members)
    raise PolymatroidError(f"kind must be 'internal' or 'external', got {kind!r}")


# ---------------------------------------------------------------------------
# fibers along an adjacent pair of coordinates


@dataclass(frozen=True)
class Fiber:
    """A maximal chain ``b^1, ..., b^l`` with ``b^{k+1} = b^k + e_h - e_{h+1}``."""

    h: int
    members: tuple

    def __len__(self):
        return len(self.members)

    @property
    def first(self):
        return self.members[0]

    @property
    def last(self):
        return self.members[-1]


def fiber_decomposition(P: Polymatroid, h: int) -> list[Fiber]:
    """Partition the bases of ``P`` into chains constant outside ``{h, h+1}``.

    Fibers are returned in order of their first member; each chain is sorted
    by increasing ``h``-coordinate.
    """
    if not 1 <= h <= P.n - 1:
        raise PivotOutOfRange(f"pivot h={h} needs 1 <= h <= n-1 = {P.n - 1}")
    groups = defaultdict(list)
    for b in P.bases:
        key = b[: h - 1] + b[h + 1:]
        groups[key].append(b)
    fibers = []
    for members in groups.values():
        members.sort(key=lambda b: b[h - 1])
        for prev, nxt in zip(members, members[1:]):
            if nxt != shifted(prev, h, h + 1):
                raise GapInFiber(f"{prev} -> {nxt} is not a unit step along e_{h} - e_{h + 1}")
        fibers.append(Fiber(h, tuple(members)))
    fibers.sort(key=lambda F: F.first)
    return fibers


__all__ = [
    "ActivityRecord",
    "Fiber",
    "TightFamily",
    "active_via_tight_sets",
    "activity_record",
    "activity_records",
    "activity_table",
    "fiber_decomposition",
    "is_externally_active",
    "is_internally_active",
    "shifted",
    "tight_sets",
    "unit",
]
