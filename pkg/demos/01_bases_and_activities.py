"""Build a polymatroid from a rank table, list its bases and their activities.

Run: python demos/01_bases_and_activities.py
"""
from polytutte import activity_records, enumerate_bases, tight_sets, validate_rank_function
from polytutte.core import format_subset

# f on subsets of {1, 2}: f({1}) = 2, f({2}) = 1, f({1,2}) = 2
f = validate_rank_function(2, [0, 2, 1, 2])
P = enumerate_bases(f)
print("bases:", P.bases)

for r in activity_records(P):
    print(r)

# activity can be read off the tight sets
for a in P.bases:
    fam = tight_sets(P, a)
    print(a, "tight:", ", ".join(format_subset(m) for m in fam.members))
