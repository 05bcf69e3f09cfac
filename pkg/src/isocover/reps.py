"""Representation spaces of the punctured sphere, the twice-punctured torus and genus two.

Each representation is a frozen dataclass of unimodular :class:`Mat2` values.
Construction rejects non-unimodular matrices; the defining relations are
checked separately by :func:`validate`, so invalid tuples can still be built
and inspected.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Union

import numpy as np

from .errors import DegenerateError, NotUnimodularError, ReducibleError, SamplerError
from .scalar import GaussianRational, close, get_epsilon
from .sl2 import Mat2, check_unimodular, commutator, conjugator, inv, is_reducible_pair

MAX_ATTEMPTS = 100
DET_MARGIN = 1e-3
IRREDUCIBILITY_MARGIN = 1e-3
# samplers redraw anything with a larger entry; keeps long products well conditioned
MAX_ENTRY = 100.0

_EXACT_TRACES = {
    Fraction(0): 2, Fraction(1, 3): 1, Fraction(1, 2): 0, Fraction(2, 3): -1, Fraction(1): -2,
}


@dataclass(frozen=True)
class Theta:
    """Local exponent; the local monodromy has trace 2 cos(pi * theta)."""

    value: Union[Fraction, float]

    def __post_init__(self):
        v = self.value
        if isinstance(v, (int, str)):
            v = Fraction(v)
        if not isinstance(v, Fraction):
            v = float(v)
            if not math.isfinite(v):
                raise ValueError(f"theta must be finite, got {v}")
        object.__setattr__(self, "value", v)

    @property
    def trace(self):
        """2 cos(pi theta); exact for theta in {0, 1/3, 1/2, 2/3, 1}."""
        v = self.value
        if isinstance(v, float):
            v = Fraction(v)
        if isinstance(v, Fraction) and (v % 2) in _EXACT_TRACES:
            return GaussianRational(_EXACT_TRACES[v % 2])
        if isinstance(v, Fraction) and (2 - v % 2) in _EXACT_TRACES:
            return GaussianRational(_EXACT_TRACES[2 - v % 2])
        return complex(2 * math.cos(math.pi * float(v)))

    @property
    def is_half(self) -> bool:
        return self.value == Fraction(1, 2) or self.value == 0.5

    def __str__(self) -> str:
        return str(self.value)


def as_theta(theta) -> Theta:
    return theta if isinstance(theta, Theta) else Theta(theta)


HALF = Theta(Fraction(1, 2))


class _Rep:
    """Shared behaviour of the representation dataclasses."""

    kind: str = ""
    matrix_names: tuple[str, ...] = ()
    pair: tuple[str, str] = ("", "")

    def __post_init__(self):
        for name in self.matrix_names:
            check_unimodular(getattr(self, name))
        if hasattr(self, "theta"):
            object.__setattr__(self, "theta", as_theta(self.theta))

    def matrices(self) -> tuple[Mat2, ...]:
        return tuple(getattr(self, name) for name in self.matrix_names)

    def as_dict(self) -> dict[str, Mat2]:
        return {name: getattr(self, name) for name in self.matrix_names}

    def generating_pair(self) -> tuple[Mat2, Mat2]:
        return getattr(self, self.pair[0]), getattr(self, self.pair[1])

    def map_matrices(self, f: Callable[[Mat2], Mat2]):
        return replace(self, **{name: f(getattr(self, name)) for name in self.matrix_names})

    def conjugate_by(self, C: Mat2):
        """The representation C X C^-1, matrix by matrix."""
        Ci = inv(C)
        return self.map_matrices(lambda X: C @ X @ Ci)

    def to_float(self):
        return self.map_matrices(Mat2.to_float)

    def allclose(self, other, eps: float | None = None) -> bool:
        return type(self) is type(other) and all(
            x.allclose(y, eps) for x, y in zip(self.matrices(), other.matrices())
        )

    def max_abs_diff(self, other) -> float:
        return max(x.max_abs_diff(y) for x, y in zip(self.matrices(), other.matrices()))


@dataclass(frozen=True, repr=False)
class FivePuncturedRep(_Rep):
    """(M0, M1, Mt, Mlambda, Minf) with product one, four trace-0 and one trace-2cos(pi theta) matrix."""

    m0: Mat2
    m1: Mat2
    mt: Mat2
    mlambda: Mat2
    minf: Mat2
    theta: Theta = HALF

    kind = "five"
    matrix_names = ("m0", "m1", "mt", "mlambda", "minf")
    pair = ("m0", "m1")

    def __repr__(self):
        return f"FivePuncturedRep(theta={self.theta})"


@dataclass(frozen=True, repr=False)
class TorusTwoRep(_Rep):
    """(A, B, D1, D2) with AB = D1 B A D2 and tr D1 = tr D2 = 2cos(pi theta)."""

    a: Mat2
    b: Mat2
    d1: Mat2
    d2: Mat2
    theta: Theta = HALF

    kind = "torus"
    matrix_names = ("a", "b", "d1", "d2")
    pair = ("a", "b")

    def __repr__(self):
        return f"TorusTwoRep(theta={self.theta})"


@dataclass(frozen=True, repr=False)
class TorusTwoRepC(_Rep):
    """(A, B, C1, C2) with [A, B] = C1 C2 and tr C1 = tr C2 = 0."""

    a: Mat2
    b: Mat2
    c1: Mat2
    c2: Mat2

    kind = "torusC"
    matrix_names = ("a", "b", "c1", "c2")
    pair = ("a", "b")

    def __repr__(self):
        return "TorusTwoRepC()"


@dataclass(frozen=True, repr=False)
class GenusTwoRep(_Rep):
    """(A1, B1, A2, B2) with [A1, B1][A2, B2] = I."""

    a1: Mat2
    b1: Mat2
    a2: Mat2
    b2: Mat2

    kind = "genus2"
    matrix_names = ("a1", "b1", "a2", "b2")
    pair = ("a1", "b1")

    def __repr__(self):
        return "GenusTwoRep()"


Rep = Union[FivePuncturedRep, TorusTwoRep, TorusTwoRepC, GenusTwoRep]
REP_TYPES = {cls.kind: cls for cls in (FivePuncturedRep, TorusTwoRep, TorusTwoRepC, GenusTwoRep)}


# -- validation -------------------------------------------------------------


def _scale(relative: bool, *factors: Mat2) -> float:
    # rounding error in a product grows like the product of the factor norms
    if not relative:
        return 1.0
    out = 1.0
    for X in factors:
        out *= X.norm()
    return max(out, 1.0)


def _check_trace(out: list[str], label: str, X: Mat2, expected, eps, scale=1.0) -> None:
    t = X.trace()
    eps = (get_epsilon() if eps is None else eps) * scale
    if not close(t, expected, eps):
        out.append(f"trace({label}) should be {expected} but is {t}")


def _check_identity(out: list[str], label: str, X: Mat2, eps, scale=1.0) -> None:
    eps = (get_epsilon() if eps is None else eps) * scale
    if not X.is_identity(eps):
        out.append(f"{label} should be I (max deviation {X.max_abs_diff(Mat2.identity()):.3g})")


def validate(rep: Rep, eps: float | None = None, relative: bool = False) -> list[str]:
    """Human-readable list of the defining relations that fail; empty if valid.

    Checks are absolute at ``eps`` by default.  With ``relative=True`` each
    tolerance is multiplied by the product of the norms of the matrices the
    relation multiplies, which is the size of the rounding error a correct
    floating-point representation can carry.
    """
    out: list[str] = []
    r = relative
    if isinstance(rep, FivePuncturedRep):
        mats = rep.matrices()
        _check_identity(out, "m0*m1*mt*mlambda*minf", rep.m0 @ rep.m1 @ rep.mt @ rep.mlambda @ rep.minf,
                        eps, _scale(r, *mats))
        for name in ("m0", "m1", "mlambda", "minf"):
            X = getattr(rep, name)
            _check_trace(out, name, X, 0, eps, _scale(r, X))
        _check_trace(out, "mt", rep.mt, rep.theta.trace, eps, _scale(r, rep.mt))
    elif isinstance(rep, TorusTwoRep):
        lhs = rep.a @ rep.b
        rhs = rep.d1 @ rep.b @ rep.a @ rep.d2
        _check_identity(out, "(a*b)^-1 * d1*b*a*d2", inv(lhs) @ rhs, eps,
                        _scale(r, rep.a, rep.b, rep.a, rep.b, rep.d1, rep.d2))
        _check_trace(out, "d1", rep.d1, rep.theta.trace, eps, _scale(r, rep.d1))
        _check_trace(out, "d2", rep.d2, rep.theta.trace, eps, _scale(r, rep.d2))
    elif isinstance(rep, TorusTwoRepC):
        _check_identity(out, "[a,b]^-1 * c1*c2", inv(commutator(rep.a, rep.b)) @ rep.c1 @ rep.c2, eps,
                        _scale(r, rep.a, rep.b, rep.a, rep.b, rep.c1, rep.c2))
        _check_trace(out, "c1", rep.c1, 0, eps, _scale(r, rep.c1))
        _check_trace(out, "c2", rep.c2, 0, eps, _scale(r, rep.c2))
    elif isinstance(rep, GenusTwoRep):
        mats = rep.matrices()
        _check_identity(out, "[a1,b1]*[a2,b2]", commutator(rep.a1, rep.b1) @ commutator(rep.a2, rep.b2), eps,
                        _scale(r, *mats, *mats))
    else:
        raise TypeError(f"not a representation: {type(rep).__name__}")
    return out


def is_valid(rep: Rep, eps: float | None = None, relative: bool = False) -> bool:
    return not validate(rep, eps, relative)


# -- sampling ---------------------------------------------------------------


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _uniform_complex(rng: np.random.Generator, size=None):
    return rng.uniform(-1, 1, size) + 1j * rng.uniform(-1, 1, size)


def _bounded(*mats: Mat2) -> bool:
    return all(abs(complex(x)) <= MAX_ENTRY for M in mats for x in M.entries())


def random_sl2(rng, backend: str = "float") -> Mat2:
    """Random unimodular matrix.

    Float: entries uniform on the square [-1, 1]^2, rescaled to determinant one.
    Exact: three Gaussian-rational entries with small numerators and
    denominators, the fourth solved from det = 1.
    """
    rng = _rng(rng)
    if backend == "exact":
        def q():
            return GaussianRational(Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 8))),
                                    Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 8))))
        for _ in range(MAX_ATTEMPTS):
            a, b, c = q(), q(), q()
            if a:
                return Mat2(a, b, c, (1 + b * c) / a)
        raise SamplerError("could not draw an exact unimodular matrix")
    for _ in range(MAX_ATTEMPTS):
        e = _uniform_complex(rng, 4)
        det = e[0] * e[3] - e[1] * e[2]
        if abs(det) > DET_MARGIN:
            s = complex(np.sqrt(det))
            return Mat2(*(complex(x) / s for x in e))
    raise SamplerError("could not draw a nondegenerate matrix")


def random_with_trace(rng, trace) -> Mat2:
    """Random unimodular matrix with prescribed trace."""
    rng = _rng(rng)
    trace = complex(trace)
    for _ in range(MAX_ATTEMPTS):
        x11, x12 = _uniform_complex(rng, 2)
        if abs(x12) > DET_MARGIN:
            x22 = trace - x11
            x21 = (x11 * x22 - 1) / x12
            return Mat2(complex(x11), complex(x12), complex(x21), complex(x22))
    raise SamplerError("could not draw a matrix with the requested trace")


def random_irreducible_pair(rng, backend: str = "float") -> tuple[Mat2, Mat2]:
    rng = _rng(rng)
    for _ in range(MAX_ATTEMPTS):
        A, B = random_sl2(rng, backend), random_sl2(rng, backend)
        if abs(complex(commutator(A, B).trace()) - 2) > IRREDUCIBILITY_MARGIN:
            return A, B
    raise SamplerError("could not draw an irreducible pair")


def _trace_compatible_d1(rng, tau: complex, K: Mat2) -> Mat2 | None:
    """D1 with tr D1 = tau, det D1 = 1 and tr(D1^-1 K) = tau, or None.

    With D1^-1 = tau I - D1 the last condition is linear:
    tr(D1 K) = tau (tr K - 1).  Writing D1 = [[x, y], [z, tau - x]] and fixing
    x leaves a quadratic for y (or z).
    """
    x = complex(_uniform_complex(rng))
    lin = tau * (K.trace() - 1) - x * K.m11 - (tau - x) * K.m22  # = y K21 + z K12
    q = x * (tau - x) - 1  # = y z
    k21, k12 = complex(K.m21), complex(K.m12)
    solve_y = abs(k21) >= abs(k12)
    lead, other = (k21, k12) if solve_y else (k12, k21)
    if abs(lead) <= DET_MARGIN:
        return None
    # lead * u^2 - lin * u + q * other = 0, u the entry paired with `lead`
    disc = np.sqrt(complex(lin * lin - 4 * lead * q * other))
    u = (lin + disc) / (2 * lead) if rng.integers(2) else (lin - disc) / (2 * lead)
    if abs(u) <= DET_MARGIN:
        return None
    w = q / u
    y, z = (u, w) if solve_y else (w, u)
    return Mat2(x, complex(y), complex(z), tau - x)


def sample_torus_rep(theta, rng_seed) -> TorusTwoRep:
    """Random point of the twice-punctured-torus space.

    Draws an irreducible pair (A, B), then D1 with the prescribed trace chosen
    so that D2 = (D1 B A)^-1 A B has the same trace, which closes the relation.
    """
    theta = as_theta(theta)
    rng = _rng(rng_seed)
    tau = complex(theta.trace)
    for _ in range(MAX_ATTEMPTS):
        A, B = random_irreducible_pair(rng)
        D1 = _trace_compatible_d1(rng, tau, commutator(A, B))
        if D1 is None or D1.is_plus_minus_identity(DET_MARGIN):
            continue
        D2 = inv(A) @ inv(B) @ inv(D1) @ A @ B
        if D2.is_plus_minus_identity(DET_MARGIN) or not _bounded(D1, D2):
            continue
        try:
            return TorusTwoRep(A, B, D1, D2, theta)
        except NotUnimodularError:
            continue
    raise SamplerError("could not sample a torus representation")


def sample_five_rep(theta, rng_seed) -> FivePuncturedRep:
    """Random point of the five-punctured-sphere space.

    M0, M1 are random trace-0 matrices and Mt has trace 2cos(pi theta).
    Mlambda = [[x, y], [z, -x]] is trace-0 with tr(M0 M1 Mt Mlambda) = 0,
    which makes Minf = (M0 M1 Mt Mlambda)^-1 trace-0 as well.
    """
    theta = as_theta(theta)
    rng = _rng(rng_seed)
    tau = theta.trace
    for _ in range(MAX_ATTEMPTS):
        M0 = random_with_trace(rng, 0)
        M1 = random_with_trace(rng, 0)
        if abs(complex(commutator(M0, M1).trace()) - 2) <= IRREDUCIBILITY_MARGIN:
            continue
        Mt = random_with_trace(rng, tau)
        P = M0 @ M1 @ Mt
        x, y, z = (complex(v) for v in _uniform_complex(rng, 3))
        # tr(P Ml) = (p11 - p22) x + p12 z + p21 y
        if abs(P.m12) > DET_MARGIN:
            z = -((P.m11 - P.m22) * x + P.m21 * y) / P.m12
        elif abs(P.m21) > DET_MARGIN:
            y = -((P.m11 - P.m22) * x + P.m12 * z) / P.m21
        elif abs(P.m11 - P.m22) > DET_MARGIN:
            x = -(P.m12 * z + P.m21 * y) / (P.m11 - P.m22)
        else:
            continue
        det = -x * x - y * z
        if abs(det) <= DET_MARGIN:
            continue
        s = complex(np.sqrt(det))
        Ml = Mat2(x / s, y / s, z / s, -x / s)
        Minf = inv(P @ Ml)
        # the torus pullback multiplies these; keep its matrices in range too
        if not _bounded(Ml, Minf, M1 @ Mt @ Ml, Ml @ Minf, Minf @ Mt @ inv(Minf)):
            continue
        try:
            return FivePuncturedRep(M0, M1, Mt, Ml, Minf, theta)
        except NotUnimodularError:
            continue
    raise SamplerError("could not sample a five-punctured representation")


# -- conjugacy --------------------------------------------------------------


def _same_up_to_sign(X: Mat2, Y: Mat2, eps) -> bool:
    return X.allclose(Y, eps) or X.allclose(-Y, eps)


def find_conjugator(rep1: Rep, rep2: Rep, projective: bool = False, eps: float | None = None) -> Mat2 | None:
    """A unimodular M with M rep1 M^-1 = rep2 (up to per-matrix signs if projective)."""
    if type(rep1) is not type(rep2):
        raise TypeError("representations of different types are never conjugate")
    A, B = rep1.generating_pair()
    if is_reducible_pair(A, B):
        raise ReducibleError("generating pair of the first representation is reducible")
    A2, B2 = rep2.generating_pair()
    signs = itertools.product((1, -1), repeat=2) if projective else [(1, 1)]
    for sa, sb in signs:
        M = conjugator(A, B, A2 if sa > 0 else -A2, B2 if sb > 0 else -B2)
        if M is None:
            continue
        Mi = inv(M)
        ok = True
        for X, Y in zip(rep1.matrices(), rep2.matrices()):
            Z = M @ X @ Mi
            if not (_same_up_to_sign(Z, Y, eps) if projective else Z.allclose(Y, eps)):
                ok = False
                break
        if ok:
            return M
    return None


def is_conjugate(rep1: Rep, rep2: Rep, projective: bool = False, eps: float | None = None) -> bool:
    """Simultaneous conjugacy of two representations of the same type."""
    return find_conjugator(rep1, rep2, projective, eps) is not None


# -- reparametrisation at theta = 1/2 -----------------------------------------


def reparam_d_to_c(rep: TorusTwoRep) -> TorusTwoRepC:
    """(A, B, D1, D2) -> (A, B, D1, (BA) D2 (BA)^-1), so that [A, B] = C1 C2."""
    if not rep.theta.is_half:
        raise DegenerateError(f"reparametrisation needs theta = 1/2, got {rep.theta}")
    BA = rep.b @ rep.a
    return TorusTwoRepC(rep.a, rep.b, rep.d1, BA @ rep.d2 @ inv(BA))


def reparam_c_to_d(rep: TorusTwoRepC) -> TorusTwoRep:
    BA = rep.b @ rep.a
    return TorusTwoRep(rep.a, rep.b, rep.c1, inv(BA) @ rep.c2 @ BA, HALF)


def trace_coordinates(rep: Rep) -> tuple[complex, ...]:
    """Traces of every matrix and of every product of two distinct matrices."""
    mats = rep.matrices()
    out = [complex(X.trace()) for X in mats]
    out += [complex((X @ Y).trace()) for X, Y in itertools.combinations(mats, 2)]
    return tuple(out)


def genus_two_trace_relation(rep: GenusTwoRep):
    """(c1 - c2)(c1 + c2 - a b) for a genus-two representation.

    Vanishes whenever tr A1 = tr A2 = a and tr B1 = tr B2 = b.
    """
    a = rep.a1.trace()
    b = rep.b1.trace()
    c1 = (rep.a1 @ rep.b1).trace()
    c2 = (rep.a2 @ rep.b2).trace()
    return (c1 - c2) * (c1 + c2 - a * b)


__all__ = [
    "Theta", "HALF", "FivePuncturedRep", "TorusTwoRep", "TorusTwoRepC", "GenusTwoRep", "REP_TYPES",
    "validate", "is_valid", "random_sl2", "random_with_trace", "random_irreducible_pair",
    "sample_torus_rep", "sample_five_rep", "find_conjugator", "is_conjugate",
    "reparam_d_to_c", "reparam_c_to_d", "trace_coordinates", "genus_two_trace_relation",
]
