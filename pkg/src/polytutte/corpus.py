"""Standard small instances: uniform matroids, small multigraphs, seeded coverage functions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    RankFunction,
    make_graphic_matroid,
    make_random_coverage_polymatroid,
    make_uniform_matroid,
)


@dataclass(frozen=True)
class Instance:
    name: str
    rank: RankFunction
    matroid: bool


def _connected(vertex_count: int, edges) -> bool:
    seen = {0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == u and y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return len(seen) == vertex_count


def _canonical(vertex_count: int, edges) -> tuple:
    best = None
    for perm in itertools.permutations(range(vertex_count)):
        relabeled = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or relabeled < best:
            best = relabeled
    return best


@lru_cache(maxsize=None)
def connected_multigraphs(max_edges: int = 4) -> tuple:
    """Connected multigraphs with loops, ``1..max_edges`` edges, one per isomorphism class.

    Each entry is ``(vertex_count, edges)`` with the canonical (sorted) edge order.
    """
    found = []
    for m in range(1, max_edges + 1):
        for v in range(1, m + 2):
            pairs = [(a, b) for a in range(v) for b in range(a, v)]
            seen = set()
            for edges in itertools.combinations_with_replacement(pairs, m):
                if not _connected(v, edges):
                    continue
                key = _canonical(v, edges)
                if key in seen:
                    continue
                seen.add(key)
                found.append((v, key))
    return tuple(found)


def uniform_instances(max_n: int = 5) -> list[Instance]:
    return [Instance(f"U{d},{n}", make_uniform_matroid(d, n), True)
            for n in range(1, max_n + 1) for d in range(n + 1)]


def graphic_instances(max_edges: int = 4) -> list[Instance]:
    out = []
    for v, edges in connected_multigraphs(max_edges):
        label = ";".join(f"{a}-{b}" for a, b in edges)
        out.append(Instance(f"G[{v}|{label}]", make_graphic_matroid(v, edges), True))
    return out


def coverage_params(seed: int) -> dict:
    """Generator parameters for the ``seed``-th corpus coverage instance.

    ``n`` cycles through 2, 3, 4 and ``parts * max_weight <= 4`` keeps
    ``f([n]) <= 4``.
    """
    n = (2, 3, 4)[seed % 3]
    parts = 1 + (seed // 3) % 4
    max_weight = {1: 4, 2: 2, 3: 1, 4: 1}[parts]
    return {"n": n, "seed": seed, "ground": n + 1, "parts": parts, "max_weight": max_weight}


def coverage_instances(count: int = 50) -> list[Instance]:
    out = []
    for seed in range(count):
        p = coverage_params(seed)
        f = make_random_coverage_polymatroid(**p)
        out.append(Instance(f"C[seed={seed},n={p['n']}]", f, f.is_matroid()))
    return out


def full_corpus() -> list[Instance]:
    """Uniform matroids ``n <= 5``, connected multigraphs ``<= 4`` edges, 50 coverage instances."""
    return uniform_instances() + graphic_instances() + coverage_instances()
