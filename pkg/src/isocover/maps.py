"""Maps between representation spaces induced by the elliptic and bielliptic covers.

``phi1_pullback`` / ``phi1_descend`` go between the five-punctured sphere and
the twice-punctured torus; ``pi_pullback`` / ``pi_descend`` between the torus
(at theta = 1/2) and genus two.  Descents are defined only on irreducible
data, and return the canonical sign choice of the involution they build.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DegenerateError, InvariantViolation, NoConjugatorError, ReducibleError
from .reps import (
    FivePuncturedRep,
    GenusTwoRep,
    TorusTwoRep,
    TorusTwoRepC,
    reparam_c_to_d,
    reparam_d_to_c,
    validate,
)
from .scalar import get_epsilon, is_zero
from .sl2 import Mat2, canonical_sign, commutator, conjugator, inv, inverting_involution, is_reducible_pair

# runtime checks of guaranteed identities get this much slack over epsilon
ASSERT_SLACK = 10.0


def _guard_tol(*mats: Mat2) -> float:
    """Slack for a guaranteed identity among products of ``mats``."""
    scale = 1.0
    for X in mats:
        scale *= X.norm()
    return ASSERT_SLACK * get_epsilon() * max(1.0, scale)


def _require_valid(rep, what: str) -> None:
    # an input guard: accept anything correct to working precision
    problems = validate(rep, relative=True)
    if problems:
        raise ValueError(f"invalid {what}: " + "; ".join(problems))


def phi1_pullback(rep: FivePuncturedRep) -> TorusTwoRep:
    """Pull a five-punctured-sphere representation back to the twice-punctured torus.

    A = M1 Mt Mlambda, B = Mlambda Minf, D1 = Mt, D2 = Minf Mt Minf^-1.
    """
    _require_valid(rep, "five-punctured representation")
    Mi = rep.minf
    return TorusTwoRep(
        a=rep.m1 @ rep.mt @ rep.mlambda,
        b=rep.mlambda @ Mi,
        d1=rep.mt,
        d2=Mi @ rep.mt @ inv(Mi),
        theta=rep.theta,
    )


def descent_involution(rep: TorusTwoRep) -> Mat2:
    A, B = rep.a, rep.b
    if is_reducible_pair(A, B):
        raise ReducibleError("(A, B) generates a reducible group; descent undefined")
    if rep.d1.is_plus_minus_identity() or rep.d2.is_plus_minus_identity():
        raise DegenerateError("D1 or D2 is +-I; descent undefined")
    M = inverting_involution(A, B)
    Mi = inv(M)
    if not (M @ rep.d1 @ Mi).allclose(rep.d2, _guard_tol(M, rep.d1, Mi)):
        raise InvariantViolation(
            "involution does not carry D1 to D2 "
            f"(deviation {(M @ rep.d1 @ Mi).max_abs_diff(rep.d2):.3g})"
        )
    return M


def descent_diagnostic(rep: TorusTwoRep) -> complex:
    """tr(B A M D1), which vanishes for every admissible torus representation."""
    M = descent_involution(rep)
    return complex((rep.b @ rep.a @ M @ rep.d1).trace())


def _five_from_involution(rep: TorusTwoRep, M: Mat2) -> FivePuncturedRep:
    A, B = rep.a, rep.b
    return FivePuncturedRep(
        m0=-(A @ M),
        m1=A @ B @ inv(rep.d2) @ M,
        mt=rep.d1,
        mlambda=-(B @ M),
        minf=M,
        theta=rep.theta,
    )


def phi1_descend(rep: TorusTwoRep) -> FivePuncturedRep:
    """Recover a five-punctured-sphere representation pulling back to ``rep``.

    Uses the involution M of the irreducible pair (A, B):
    M0 = -AM, M1 = A B D2^-1 M, Mt = D1, Mlambda = -BM, Minf = M.
    """
    _require_valid(rep, "torus representation")
    return _five_from_involution(rep, descent_involution(rep))


class Fiber(NamedTuple):
    points: list[FivePuncturedRep]
    projectively_equivalent: bool


def phi1_fiber(rep: TorusTwoRep) -> Fiber:
    """Both preimages of ``rep``, from M and -M.

    They differ by the sign of M0, M1, Mlambda and Minf, so they always define
    the same projective representation.
    """
    _require_valid(rep, "torus representation")
    M = descent_involution(rep)
    first = _five_from_involution(rep, M)
    second = _five_from_involution(rep, -M)
    same_projectively = all(
        x.allclose(y) or x.allclose(-y) for x, y in zip(first.matrices(), second.matrices())
    )
    return Fiber([first, second], same_projectively)


def pi_pullback(rep: TorusTwoRepC) -> GenusTwoRep:
    """(A, B, C1, C2) -> (A, B, C1^-1 A C1, C1^-1 B C1)."""
    _require_valid(rep, "torus representation (C form)")
    Ci = inv(rep.c1)
    return GenusTwoRep(rep.a, rep.b, Ci @ rep.a @ rep.c1, Ci @ rep.b @ rep.c1)


def bielliptic_involution(rep: GenusTwoRep) -> Mat2:
    """M with M A1 M^-1 = A2, M B1 M^-1 = B2 and M^2 = -I (canonical sign)."""
    A1, B1 = rep.a1, rep.b1
    if is_reducible_pair(A1, B1):
        raise ReducibleError("(A1, B1) generates a reducible group")
    M = conjugator(A1, B1, rep.a2, rep.b2)
    if M is None:
        raise NoConjugatorError("(A1, B1) and (A2, B2) are not conjugate")
    # M and -M have the same square, so one test settles both signs
    if (M @ M).allclose(-Mat2.identity(), _guard_tol(M, M)):
        return canonical_sign(M)
    raise NoConjugatorError("the conjugating matrix does not square to -I")


def pi_descend(rep: GenusTwoRep) -> TorusTwoRepC:
    """Recover (A, B, C1, C2) = (A1, B1, M, M^-1 [A1, B1]) from a genus-two representation."""
    _require_valid(rep, "genus-two representation")
    M = bielliptic_involution(rep)
    C2 = inv(M) @ commutator(rep.a1, rep.b1)
    if not is_zero(complex(C2.trace()), _guard_tol(M, rep.a1, rep.b1, rep.a1, rep.b1)):
        raise InvariantViolation(f"trace(C2) = {C2.trace()} should vanish")
    return TorusTwoRepC(rep.a1, rep.b1, M, C2)


def pi_fiber(rep: GenusTwoRep) -> list[TorusTwoRepC]:
    """The two torus representations (C1 = M and C1 = -M) over a genus-two point."""
    first = pi_descend(rep)
    return [first, TorusTwoRepC(first.a, first.b, -first.c1, -first.c2)]


def five_to_genus2(rep: FivePuncturedRep) -> GenusTwoRep:
    """Composite sphere -> torus -> genus two, defined for theta = 1/2."""
    if not rep.theta.is_half:
        raise DegenerateError(f"five_to_genus2 needs theta = 1/2, got {rep.theta}")
    return pi_pullback(reparam_d_to_c(phi1_pullback(rep)))


def genus2_to_five(rep: GenusTwoRep) -> FivePuncturedRep:
    """Descend a genus-two representation to the five-punctured sphere, when possible."""
    return phi1_descend(reparam_c_to_d(pi_descend(rep)))
