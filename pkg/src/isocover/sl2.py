"""2x2 matrices over either scalar backend, and the trace identities of SL2(C)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateError, NotUnimodularError, ReducibleError, SingularMatrixError
from .scalar import GaussianRational, Scalar, close, exact, get_epsilon, is_exact, is_zero, sqrt


@dataclass(frozen=True, slots=True)
class Mat2:
    m11: Scalar
    m12: Scalar
    m21: Scalar
    m22: Scalar

    @classmethod
    def identity(cls, exact_backend: bool = False) -> Mat2:
        one, zero = (GaussianRational(1), GaussianRational(0)) if exact_backend else (1 + 0j, 0j)
        return cls(one, zero, zero, one)

    @classmethod
    def from_rows(cls, rows) -> Mat2:
        """Build from nested rows; ints, Fractions and "p/q" strings give an exact matrix."""
        (a, b), (c, d) = rows
        entries = (a, b, c, d)
        if all(isinstance(x, (int, str)) or is_exact(x) for x in entries):
            return cls(*(exact(x) for x in entries))
        return cls(*(complex(x) for x in entries))

    @classmethod
    def sl2(cls, m11, m12, m21, m22) -> Mat2:
        """Construct and reject anything whose determinant is not one."""
        m = cls(m11, m12, m21, m22)
        check_unimodular(m)
        return m

    # -- basic algebra ----------------------------------------------------

    def entries(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.m11, self.m12, self.m21, self.m22)

    def det(self) -> Scalar:
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self) -> Scalar:
        return self.m11 + self.m22

    def __matmul__(self, other: Mat2) -> Mat2:
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __neg__(self) -> Mat2:
        return Mat2(-self.m11, -self.m12, -self.m21, -self.m22)

    def __add__(self, other: Mat2) -> Mat2:
        return Mat2(*(x + y for x, y in zip(self.entries(), other.entries())))

    def __sub__(self, other: Mat2) -> Mat2:
        return Mat2(*(x - y for x, y in zip(self.entries(), other.entries())))

    def scale(self, k: Scalar) -> Mat2:
        return Mat2(*(k * x for x in self.entries()))

    def adjugate(self) -> Mat2:
        return Mat2(self.m22, -self.m12, -self.m21, self.m11)

    def inv(self) -> Mat2:
        return inv(self)

    def norm(self) -> float:
        """Operator infinity-norm (largest absolute row sum); submultiplicative."""
        return max(abs(complex(self.m11)) + abs(complex(self.m12)),
                   abs(complex(self.m21)) + abs(complex(self.m22)))

    # -- backend ----------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return all(isinstance(x, GaussianRational) for x in self.entries())

    def to_float(self) -> Mat2:
        return Mat2(*(complex(x) for x in self.entries()))

    def as_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=complex)

    # -- comparisons ------------------------------------------------------

    def allclose(self, other: Mat2, eps: float | None = None) -> bool:
        return all(close(x, y, eps) for x, y in zip(self.entries(), other.entries()))

    def max_abs_diff(self, other: Mat2) -> float:
        return max(abs(complex(x - y)) for x, y in zip(self.entries(), other.entries()))

    def is_identity(self, eps: float | None = None) -> bool:
        return self.allclose(Mat2.identity(), eps)

    def is_plus_minus_identity(self, eps: float | None = None) -> bool:
        return self.is_identity(eps) or (-self).is_identity(eps)

    def __repr__(self) -> str:
        return f"Mat2([[{self.m11}, {self.m12}], [{self.m21}, {self.m22}]])"


def mul(X: Mat2, Y: Mat2) -> Mat2:
    return X @ Y


def identity_like(X: Mat2) -> Mat2:
    return Mat2.identity(exact_backend=X.is_exact)


def promote(*mats: Mat2) -> tuple[Mat2, ...]:
    """Bring a group of matrices onto one backend (float wins)."""
    if all(m.is_exact for m in mats):
        return mats
    return tuple(m.to_float() for m in mats)


def check_unimodular(X: Mat2, eps: float | None = None) -> None:
    if not close(X.det(), 1, eps):
        raise NotUnimodularError(f"determinant is {X.det()}, not 1")


def is_unimodular(X: Mat2, eps: float | None = None) -> bool:
    return close(X.det(), 1, eps)


def inv(X: Mat2) -> Mat2:
    d = X.det()
    if is_zero(d):
        raise SingularMatrixError(f"matrix is singular (det = {d})")
    if d == 1:
        return X.adjugate()
    k = 1 / d
    return X.adjugate().scale(k)


def commutator(A: Mat2, B: Mat2) -> Mat2:
    """[A, B] = A B A^-1 B^-1."""
    return A @ B @ inv(A) @ inv(B)


def fricke_trace(a: Scalar, b: Scalar, c: Scalar) -> Scalar:
    """Trace of [A, B] in terms of a = tr A, b = tr B, c = tr AB."""
    return a * a + b * b + c * c - a * b * c - 2


def is_reducible_pair(A: Mat2, B: Mat2, eps: float | None = None) -> bool:
    return close(commutator(A, B).trace(), 2, eps)


def trace_product_identity_check(X: Mat2, Y: Mat2, eps: float | None = None) -> bool:
    """tr(XY) + tr(XY^-1) == tr(X) tr(Y), valid for all X, Y in SL2."""
    lhs = (X @ Y).trace() + (X @ inv(Y)).trace()
    return close(lhs, X.trace() * Y.trace(), eps)


def canonical_sign(M: Mat2, eps: float | None = None) -> Mat2:
    """Choose between M and -M: first nonzero entry must have argument in (-pi/2, pi/2]."""
    for x in M.entries():
        if is_zero(x, eps):
            continue
        re, im = (x.re, x.im) if isinstance(x, GaussianRational) else (x.real, x.imag)
        if re > 0 or (re == 0 and im > 0):
            return M
        return -M
    return M


# -- normal form ----------------------------------------------------------


class NormalForm(NamedTuple):
    a: Scalar
    b: Scalar
    gamma: Scalar
    P: Mat2
    promoted: bool


def normal_form_templates(a: Scalar, b: Scalar, gamma: Scalar) -> tuple[Mat2, Mat2]:
    """The pair [[a, -1], [1, 0]], [[0, 1/gamma], [-gamma, b]]."""
    one = GaussianRational(1) if isinstance(gamma, GaussianRational) else 1 + 0j
    A = Mat2(a, -one, one, 0 * one)
    B = Mat2(0 * one, one / gamma, -gamma, b)
    return A, B


def _pick_gamma(r1: Scalar, r2: Scalar, hint: Scalar | None) -> Scalar:
    if hint is not None:
        return r1 if abs(complex(r1 - hint)) <= abs(complex(r2 - hint)) else r2
    if isinstance(r1, GaussianRational):
        key = lambda g: (g.norm(), g.im >= 0, g.re >= 0)  # noqa: E731
        return max((r1, r2), key=key)
    eps = get_epsilon()
    n1, n2 = abs(r1), abs(r2)
    if abs(n1 - n2) > eps:
        return r1 if n1 > n2 else r2
    for part in ("imag", "real"):
        p1, p2 = getattr(r1, part), getattr(r2, part)
        if abs(p1 - p2) > eps:
            return r1 if p1 > p2 else r2
    return r1


def _eigenvector(X: Mat2, gamma: Scalar) -> tuple[Scalar, Scalar]:
    p, q = X.m11 - gamma, X.m12
    r, s = X.m21, X.m22 - gamma
    if isinstance(p, GaussianRational):
        row = (p, q) if (p or q) else (r, s)
    else:
        row = (p, q) if abs(p) + abs(q) >= abs(r) + abs(s) else (r, s)
    v1, v2 = row[1], -row[0]
    lead = v1 if not is_zero(v1) else v2
    return v1 / lead, v2 / lead


def normal_form_pair(A: Mat2, B: Mat2, gamma: Scalar | None = None) -> NormalForm:
    """Conjugate an irreducible pair into its trace normal form.

    Returns ``(a, b, gamma, P, promoted)`` with ``P^-1 A P = [[a, -1], [1, 0]]``
    and ``P^-1 B P = [[0, 1/gamma], [-gamma, b]]``; gamma is an eigenvalue of
    ``AB`` and the first column of ``P`` its eigenvector.  Without a ``gamma``
    hint the root with ``|gamma| >= 1`` is taken (ties: nonnegative imaginary
    part, then nonnegative real part); with a hint, the root nearest to it.
    """
    if is_reducible_pair(A, B):
        raise ReducibleError("pair generates a reducible group; no normal form")
    A, B = promote(A, B)
    X = A @ B
    if X.is_plus_minus_identity():
        raise DegenerateError("AB = +-I has no eigenbasis of the required kind")
    c = X.trace()
    root, promoted = sqrt(c * c - 4)
    if promoted:
        A, B, X = A.to_float(), B.to_float(), X.to_float()
        c = complex(c)
    g = _pick_gamma((c + root) / 2, (c - root) / 2, gamma)
    v1, v2 = _eigenvector(X, g)
    Bv1 = B.m11 * v1 + B.m12 * v2
    Bv2 = B.m21 * v1 + B.m22 * v2
    P = Mat2(v1, -Bv1 / g, v2, -Bv2 / g)
    return NormalForm(A.trace(), B.trace(), g, P, promoted)


def conjugator(A: Mat2, B: Mat2, A2: Mat2, B2: Mat2) -> Mat2 | None:
    """Unimodular M with M A M^-1 = A2 and M B M^-1 = B2, or None if no such M.

    Such M exists iff the traces of A, B, AB agree with those of A2, B2, A2B2;
    it is then unique up to sign and the canonical sign is returned.
    """
    if is_reducible_pair(A, B):
        raise ReducibleError("first pair is reducible; conjugator not unique")
    if not (close(A.trace(), A2.trace()) and close(B.trace(), B2.trace())
            and close((A @ B).trace(), (A2 @ B2).trace())):
        return None
    nf1 = normal_form_pair(A, B)
    nf2 = normal_form_pair(A2, B2, gamma=nf1.gamma)
    P1, P2 = promote(nf1.P, nf2.P)
    M = P2 @ inv(P1)
    root, _ = sqrt(M.det())
    return canonical_sign(M.scale(1 / root))


def involution_matrix_printed(a: Scalar, b: Scalar, gamma: Scalar) -> Mat2:
    """The (projective) involution of a normal-form pair, before rescaling.

    Its determinant is (2 - tr[A, B]) / 4, so it is not unimodular.
    """
    d = (gamma * gamma - 1) / (2 * gamma)
    return Mat2(d, (a - b * gamma) / (2 * gamma), (a * gamma - b) / 2, -d)


def inverting_involution(A: Mat2, B: Mat2, return_info: bool = False):
    """Unimodular M with M A M^-1 = A^-1, M B M^-1 = B^-1 and M^2 = -I.

    With ``return_info=True`` returns ``(M, promoted)`` where ``promoted`` says
    an exact input had to leave the Gaussian rationals.
    """
    nf = normal_form_pair(A, B)
    a, b, g = nf.a, nf.b, nf.gamma
    t = fricke_trace(a, b, g + 1 / g)
    root, promoted = sqrt(2 - t)
    M0 = involution_matrix_printed(a, b, g)
    if promoted:
        M0 = M0.to_float()
    M_nf = M0.scale(2 / root)
    P = nf.P.to_float() if promoted else nf.P
    M = canonical_sign(P @ M_nf @ inv(P))
    promoted = promoted or nf.promoted
    return (M, promoted) if return_info else M
