"""Fibers along e_h - e_{h+1} and the per-fiber identity behind invariance.

Swapping h and h+1 changes the summands only at the two ends of each
chain, and there A + B = C + D.

Run: python demos/03_fibers.py
"""
from polytutte import enumerate_bases, fiber_identity_check, make_random_coverage_polymatroid

P = enumerate_bases(make_random_coverage_polymatroid(3, seed=26, ground=5, parts=3, max_weight=2))
print(f"{len(P)} bases")
for h in (1, 2):
    print(f"pivot h={h}")
    for rep in fiber_identity_check(P, h):
        chain = " -> ".join(str(b) for b in rep.fiber.members)
        print(f"  {chain}")
        print(f"    A + B = {rep.A + rep.B}")
        print(f"    C + D = {rep.C + rep.D_term}   holds: {rep.holds}")
