"""Exit criteria over the full instance corpus.

Each criterion runs from cold caches against its own time limit and
reports one PASS/FAIL line (shown in the pytest terminal summary, or on
stdout when this file is run as a script).
"""
import itertools
import sys
import time

import pytest

from oracles import box_scan, corank_nullity_sympy, to_sympy
from polytutte import (
    Permutation,
    active_via_tight_sets,
    activity_records,
    apply_permutation,
    classical_tutte_activity,
    classical_tutte_corank_nullity,
    coordinate_bounds,
    enumerate_bases,
    expand_transformed_tutte,
    fiber_decomposition,
    fiber_identity_check,
    is_externally_active,
    is_internally_active,
    lemma_property_suite,
    make_graphic_matroid,
    make_uniform_matroid,
    polymatroid_tutte,
    truncated_tilde_series,
)
from polytutte.activity import activity_table
from polytutte.corpus import connected_multigraphs, full_corpus
from polytutte.invariants import adjacent_transpositions, correspondence_failure, correspondence_sample_points

pytestmark = pytest.mark.acceptance

RESULTS = {}


def _cold():
    activity_table.cache_clear()
    connected_multigraphs.cache_clear()


def _corpus_shape(corpus):
    kinds = [i.name[0] for i in corpus]
    return kinds.count("U"), kinds.count("G"), kinds.count("C")


def crit_definitions():
    corpus = full_corpus()
    assert _corpus_shape(corpus) == (20, 47, 50)
    triples = 0
    for inst in corpus:
        f = inst.rank
        L, U = coordinate_bounds(f)
        P = enumerate_bases(f)
        if tuple(box_scan(f.n, f.values, min(L) - 1, max(U) + 1)) != P.bases:
            return False, f"{inst.name}: enumeration differs from box filtering"
        for a in P.bases:
            for i in range(1, f.n + 1):
                for kind, pred in (("internal", is_internally_active), ("external", is_externally_active)):
                    triples += 1
                    if active_via_tight_sets(P, a, i, kind) != pred(P, a, i):
                        return False, f"{inst.name}: a={a} i={i} {kind}"
    return True, f"{len(corpus)} instances, {triples} (basis, index, kind) triples"


def crit_invariance():
    checked = 0
    for inst in full_corpus():
        P = enumerate_bases(inst.rank)
        T = polymatroid_tutte(P)
        if P.n <= 4:
            ws = [Permutation(p) for p in itertools.permutations(range(1, P.n + 1))]
        else:
            ws = adjacent_transpositions(P.n)
        for w in ws:
            checked += 1
            if polymatroid_tutte(apply_permutation(P, w)) != T:
                return False, f"{inst.name}: w={w.images}"
    return True, f"{checked} (instance, permutation) pairs"


def crit_fibers():
    fibers = 0
    for inst in full_corpus():
        P = enumerate_bases(inst.rank)
        for h in range(1, P.n):
            members = [b for F in fiber_decomposition(P, h) for b in F.members]
            if sorted(members) != list(P.bases):
                return False, f"{inst.name}: h={h} fibers do not partition P"
            for rep in fiber_identity_check(P, h):
                fibers += 1
                if len(rep.fiber) == 1 and rep.A != rep.C:
                    return False, f"{inst.name}: h={h} singleton {rep.fiber.first}"
                if len(rep.fiber) > 1 and not (rep.interior_ok and rep.A + rep.B == rep.C + rep.D_term):
                    return False, f"{inst.name}: h={h} chain {rep.fiber.members}"
    return True, f"{fibers} fibers"


def crit_series():
    count = 0
    for inst in full_corpus():
        P = enumerate_bases(inst.rank)
        lattice = truncated_tilde_series(P, 4)
        transformed = expand_transformed_tutte(activity_records(P), 4)
        if lattice != transformed:
            return False, f"{inst.name}: {lattice.difference(transformed)}"
        count += 1
    return True, f"{count} instances at degree 4"


def crit_correspondence():
    U12 = make_uniform_matroid(1, 2)
    K3 = make_graphic_matroid(3, [(0, 1), (1, 2), (0, 2)])
    for f, text in ((U12, "x + y"), (K3, "x^2 + x + y")):
        oracle = corank_nullity_sympy(f.n, f.values)
        if to_sympy(classical_tutte_activity(f)) != oracle or classical_tutte_corank_nullity(f).to_text() != text:
            return False, f"fixed value {text} not reproduced"
    matroids = [i for i in full_corpus() if i.matroid]
    min_points = min(len(correspondence_sample_points(i.rank.n)) for i in matroids)
    if min_points < 25:
        return False, f"only {min_points} sample points"
    for inst in matroids:
        f = inst.rank
        if classical_tutte_activity(f) != classical_tutte_corank_nullity(f):
            return False, f"{inst.name}: activity and corank-nullity disagree"
        fail = correspondence_failure(f)
        if fail is not None:
            return False, f"{inst.name}: identity fails at {fail[:2]}"
    return True, f"{len(matroids)} matroids, >= {min_points} points each"


def crit_lemmas():
    totals = {}
    realized = set()
    for inst in full_corpus():
        for name, res in lemma_property_suite(enumerate_bases(inst.rank)).items():
            if not res.passed:
                return False, f"{inst.name}: {name} {res.counterexample}"
            totals[name] = totals.get(name, 0) + res.instances
            realized.update(res.extra.get("realized", ()))
    vacuous = sorted(k for k, v in totals.items() if v == 0)
    return True, (f"{sum(totals.values())} instantiations, {len(realized)} table columns realized, "
                  f"vacuous: {', '.join(vacuous) or 'none'}")


def crit_evaluation():
    corpus = full_corpus()
    for inst in corpus:
        P = enumerate_bases(inst.rank)
        if polymatroid_tutte(P).evaluate(1, 1) != len(P):
            return False, inst.name
    return True, f"{len(corpus)} instances"


CRITERIA = [
    ("1-definition-consistency", crit_definitions, 60),
    ("2-sn-invariance", crit_invariance, 60),
    ("3-fiber-mechanism", crit_fibers, 60),
    ("4-series-truncated", crit_series, 120),
    ("5-correspondence", crit_correspondence, 30),
    ("6-lemma-suite", crit_lemmas, 120),
    ("7-evaluation-identity", crit_evaluation, 5),
]


def run_criterion(name, fn, limit):
    _cold()
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    passed = ok and elapsed < limit
    line = f"{name}: {'PASS' if passed else 'FAIL'} ({elapsed:.2f}s / {limit}s) {detail}"
    RESULTS[name] = line
    print(line)
    return passed, line


@pytest.mark.parametrize("name, fn, limit", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, fn, limit):
    passed, line = run_criterion(name, fn, limit)
    assert passed, line


if __name__ == "__main__":
    results = [run_criterion(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
