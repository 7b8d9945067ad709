"""The polymatroid Tutte polynomial does not depend on how the ground set is ordered.

Individual activity records change under a permutation; their sum does not.

Run: python demos/02_tutte_and_invariance.py
"""
import itertools

from polytutte import Permutation, activity_records, apply_permutation, enumerate_bases, polymatroid_tutte
from polytutte import make_random_coverage_polymatroid

P = enumerate_bases(make_random_coverage_polymatroid(3, seed=9, ground=4, parts=2, max_weight=2))
T = polymatroid_tutte(P)
print(f"{len(P)} bases, T_P = {T}")
print("T_P(1, 1) =", T.evaluate(1, 1))

for images in itertools.permutations((1, 2, 3)):
    Q = apply_permutation(P, Permutation(images))
    records = sorted(r.exponents for r in activity_records(Q))
    print(images, "records", records, "same polynomial:", polymatroid_tutte(Q) == T)
