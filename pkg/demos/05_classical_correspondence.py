"""Classical Tutte polynomials of graphs and their link to the polymatroid version.

T_M is computed from activities and, independently, from the corank-nullity
expansion.  The identity T_M x^(n-d) y^d = s^n T_P(x/s, y/s), s = x + y - xy,
is then checked exactly at rational sample points.

Run: python demos/05_classical_correspondence.py
"""
from polytutte import (
    classical_tutte_activity,
    classical_tutte_corank_nullity,
    correspondence_check,
    enumerate_bases,
    make_graphic_matroid,
    polymatroid_tutte,
)

graphs = {
    "triangle": (3, [(0, 1), (1, 2), (0, 2)]),
    "square with diagonal": (4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    "loop and bridge": (2, [(0, 0), (0, 1)]),
}
for name, (v, edges) in graphs.items():
    M = make_graphic_matroid(v, edges)
    T = classical_tutte_activity(M)
    print(f"{name}:")
    print("  T_M            =", T)
    print("  corank-nullity =", classical_tutte_corank_nullity(M))
    print("  T_P            =", polymatroid_tutte(enumerate_bases(M)))
    print("  identity holds:", correspondence_check(M))
