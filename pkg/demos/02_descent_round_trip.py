"""
From the twice-punctured torus to the five-punctured sphere
============================================================

The elliptic double cover of the sphere pulls a five-punctured sphere
representation back to the twice-punctured torus.  Going the other way,
every torus representation with the right local data descends, and each
one has exactly two preimages that differ by signs.
"""

import numpy as np

from isocover import Theta, phi1_descend, phi1_fiber, phi1_pullback, sample_torus_rep, validate
from isocover.maps import descent_diagnostic

rng = np.random.default_rng(3)
torus = sample_torus_rep(Theta("1/3"), rng)
print("torus relations:", validate(torus) or "ok")

five = phi1_descend(torus)
print("descended relations:", validate(five) or "ok")
print("diagnostic trace:", abs(descent_diagnostic(torus)))

back = phi1_pullback(five)
print("round trip error:", back.max_abs_diff(torus))

fiber = phi1_fiber(torus)
print("fiber size:", len(fiber.points), " projectively equal:", fiber.projectively_equivalent)
p, q = (pt.as_dict() for pt in fiber.points)
for name in p:
    if p[name].allclose(q[name], 1e-9):
        print(f"  {name}: same")
    else:
        print(f"  {name}: {'negated' if p[name].allclose(-q[name], 1e-9) else 'different'}")
