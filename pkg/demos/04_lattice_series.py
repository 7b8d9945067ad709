"""Counting lattice points by their one-sided distances to a polymatroid.

The generating series over all of Z^n equals T_P(1/(1-u), 1/(1-v));
here both sides are compared up to total degree 4.

Run: python demos/04_lattice_series.py
"""
from polytutte import enumerate_bases, make_uniform_matroid, polytope_distance, truncated_tilde_series
from polytutte.invariants import transformed_tutte_series

P = enumerate_bases(make_uniform_matroid(1, 2))
for c in [(0, 0), (1, 0), (1, -1), (2, 2)]:
    d = polytope_distance(P, c)
    print(c, "d> =", d.d_gt, "d< =", d.d_lt)

lattice = truncated_tilde_series(P, 4)
transformed = transformed_tutte_series(P, 4)
print("lattice scan :", lattice)
print("transformed  :", transformed)
print("equal:", lattice == transformed)
