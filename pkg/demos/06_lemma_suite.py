"""Exhaustively instantiate the exchange and transposition statements on one instance.

Every statement reports how many instantiations met its hypothesis and
the first counterexample, if any.

Run: python demos/06_lemma_suite.py
"""
from polytutte import enumerate_bases, lemma_property_suite, make_random_coverage_polymatroid

P = enumerate_bases(make_random_coverage_polymatroid(4, seed=1, ground=5, parts=3, max_weight=2))
print(f"{len(P)} bases in dimension {P.n}")
for name, res in lemma_property_suite(P).items():
    status = "PASS" if res.passed else f"FAIL {res.counterexample}"
    print(f"{name:28s} {res.instances:6d}  {status}")
