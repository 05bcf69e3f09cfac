"""
A bielliptic genus-two curve
============================

At theta = 1/2 a torus representation lifts along a second double cover to
genus two.  Composing with the elliptic descent gives a path from the
five-punctured sphere to genus two and back.
"""

import numpy as np

from isocover import five_to_genus2, genus2_to_five, is_conjugate, pi_descend, pi_pullback
from isocover import reparam_d_to_c, sample_five_rep, sample_torus_rep, validate
from isocover.reps import HALF

rng = np.random.default_rng(5)
torus = sample_torus_rep(HALF, rng)
c_rep = reparam_d_to_c(torus)
g2 = pi_pullback(c_rep)
print("genus two relations:", validate(g2) or "ok")

down = pi_descend(g2)
print("C1 recovered up to sign:", down.c1.allclose(c_rep.c1, 1e-9) or down.c1.allclose(-c_rep.c1, 1e-9))

five = sample_five_rep(HALF, rng)
there = five_to_genus2(five)
again = genus2_to_five(there)
print("sphere -> genus two -> sphere is conjugate up to sign:", is_conjugate(again, five, projective=True))
