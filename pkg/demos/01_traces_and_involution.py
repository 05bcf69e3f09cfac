"""
Traces of a two-generator group and the inverting involution
=============================================================

A pair (A, B) in SL2(C) is determined, up to conjugacy, by three traces.
The commutator trace is a polynomial in them, and an irreducible pair is
conjugated to its inverse pair by a matrix M with M^2 = -I.
"""

import numpy as np

from isocover import GaussianRational, Mat2, commutator, fricke_trace, inverting_involution
from isocover.reps import random_irreducible_pair
from isocover.sl2 import inv

rng = np.random.default_rng(1)

# a random pair with float entries
A, B = random_irreducible_pair(rng)
a, b, c = A.trace(), B.trace(), (A @ B).trace()
print("tr[A,B]          =", commutator(A, B).trace())
print("a^2+b^2+c^2-abc-2 =", fricke_trace(a, b, c))

# the same identity holds exactly over Q(i)
X = Mat2(GaussianRational(1, 1), GaussianRational(1), GaussianRational(0, 1), GaussianRational(1))
Y = Mat2(GaussianRational(1), GaussianRational(3), GaussianRational(0), GaussianRational(1))
print("det X, det Y:", X.det(), Y.det())
print("exact:", commutator(X, Y).trace() == fricke_trace(X.trace(), Y.trace(), (X @ Y).trace()))

# M swaps every generator with its inverse
M = inverting_involution(A, B)
print("M^2 + I     :", (M @ M).max_abs_diff(-Mat2.identity()))
print("M A M^-1 - A^-1:", (M @ A @ inv(M)).max_abs_diff(inv(A)))
print("M B M^-1 - B^-1:", (M @ B @ inv(M)).max_abs_diff(inv(B)))
