"""
Which orbifold covers can carry an isomonodromic deformation?
==============================================================

A cover of degree d <= 4 of a hyperbolic orbifold qualifies when the cover
has no more moduli than the base.  Enumerating branching data under
Riemann-Hurwitz and these inequalities leaves a short list.
"""

from isocover import CoverCandidate, check_candidate, enumerate_candidates, is_realizable
from isocover.hurwitz import sigma4_obstruction

for e in enumerate_candidates(4):
    c = e.candidate
    print(f"d={c.degree} base={c.base}  cover genus={c.cover_genus} "
          f"points={c.cover_orbifold_count}  {e.label}")

# a degree-3 candidate that fails one of the inequalities
cand = CoverCandidate.build(3, 0, [(2, (2, 1)), (2, (2, 1)), (2, (2, 1)), (3, (2, 1))])
report = check_candidate(cand)
print("\ndegree 3 example admissible:", report.admissible,
      " failing:", [k for k, v in report.as_dict().items() if v is False])

# the quartic candidate that passes the counts but has no monodromy
sig = sigma4_obstruction()
print("\nproducts of three double transpositions have orders", sorted(sig.product_orders))
print("verdict:", sig.verdict, "/ permutation search:", is_realizable(4, 0, [(2, 2)] * 3 + [(3, 1)]))
