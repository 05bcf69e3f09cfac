from fractions import Fraction

import pytest
from hypothesis import assume, given

from isocover.errors import NotUnimodularError, ReducibleError, SingularMatrixError
from isocover.scalar import GaussianRational as G
from isocover.sl2 import (
    Mat2,
    canonical_sign,
    commutator,
    conjugator,
    fricke_trace,
    inv,
    inverting_involution,
    involution_matrix_printed,
    is_reducible_pair,
    normal_form_pair,
    normal_form_templates,
    trace_product_identity_check,
)
from strategies import exact_sl2, float_sl2, gaussian, nonzero_gaussian

I = Mat2.identity()
EXACT_I = Mat2.identity(exact_backend=True)


def test_unipotent_commutator_by_hand():
    A = Mat2.from_rows([[1, 1], [0, 1]])
    B = Mat2.from_rows([[1, 0], [1, 1]])
    assert commutator(A, B) == Mat2.from_rows([[3, -1], [1, 0]])
    assert fricke_trace(2, 2, 3) == 3


def test_from_rows_backend():
    assert Mat2.from_rows([["1/2", 0], [0, 2]]).is_exact
    assert not Mat2.from_rows([[0.5, 0], [0, 2]]).is_exact


def test_sl2_constructor_rejects_bad_determinant():
    with pytest.raises(NotUnimodularError):
        Mat2.sl2(1, 1, 1, 1 + 0.5)
    with pytest.raises(SingularMatrixError):
        inv(Mat2(1, 1, 1, 1))


@given(exact_sl2(), exact_sl2())
def test_fricke_exact(A, B):
    assert commutator(A, B).trace() == fricke_trace(A.trace(), B.trace(), (A @ B).trace())


@given(float_sl2(), float_sl2())
def test_fricke_float(A, B):
    lhs = commutator(A, B).trace()
    rhs = fricke_trace(A.trace(), B.trace(), (A @ B).trace())
    assert abs(lhs - rhs) < 1e-9 * max(1.0, abs(lhs))


@given(exact_sl2(), exact_sl2())
def test_trace_product_identity(X, Y):
    assert trace_product_identity_check(X, Y)


@given(exact_sl2())
def test_inverse_is_exact(X):
    assert X @ inv(X) == EXACT_I


def test_normal_form_by_hand():
    A = Mat2.from_rows([[0, -1], [1, 0]])
    B = Mat2.from_rows([[0, "1/2"], [-2, 0]])
    nf = normal_form_pair(A, B)
    assert (nf.a, nf.b, nf.gamma) == (0, 0, 2)
    assert nf.P == EXACT_I and not nf.promoted
    M = inverting_involution(A, B)
    assert M == Mat2(G(0, 1), G(0), G(0), G(0, -1))


@given(exact_sl2(), exact_sl2())
def test_normal_form_conjugates_to_templates(A, B):
    assume(not is_reducible_pair(A, B))
    assume(not (A @ B).is_plus_minus_identity())
    nf = normal_form_pair(A, B)
    TA, TB = normal_form_templates(nf.a, nf.b, nf.gamma)
    P, Pi = nf.P, inv(nf.P)
    if nf.promoted:
        assert (Pi @ A @ P).allclose(TA, 1e-7) and (Pi @ B @ P).allclose(TB, 1e-7)
    else:
        assert Pi @ A @ P == TA and Pi @ B @ P == TB
    assert abs(complex(nf.gamma)) >= 1 - 1e-12


def test_reducible_pair_has_no_normal_form():
    A = Mat2.from_rows([[2, 1], [0, "1/2"]])
    B = Mat2.from_rows([[3, 5], [0, "1/3"]])
    assert is_reducible_pair(A, B)
    with pytest.raises(ReducibleError):
        normal_form_pair(A, B)
    with pytest.raises(ReducibleError):
        inverting_involution(A, B)


def test_product_minus_identity_is_reducible():
    # B = -A^-1 commutes with A
    A = Mat2.from_rows([[2, 1], [1, 1]])
    with pytest.raises(ReducibleError):
        normal_form_pair(A, inv(A).scale(G(-1)))


@given(gaussian, gaussian, nonzero_gaussian)
def test_printed_involution_determinant_law(a, b, g):
    assume(g * g != 1)
    t = fricke_trace(a, b, g + 1 / g)
    assert involution_matrix_printed(a, b, g).det() == (2 - t) / 4


@given(gaussian, gaussian, nonzero_gaussian)
def test_printed_involution_inverts_the_templates(a, b, g):
    assume(g * g != 1)
    M0 = involution_matrix_printed(a, b, g)
    assume(M0.det() != 0)
    A, B = normal_form_templates(a, b, g)
    assert M0 @ A == inv(A) @ M0
    assert M0 @ B == inv(B) @ M0


@given(float_sl2(), float_sl2())
def test_inverting_involution(A, B):
    assume(abs(commutator(A, B).trace() - 2) > 1e-2)
    M = inverting_involution(A, B)
    assert M.det() == pytest.approx(1, abs=1e-8)
    assert (M @ M).allclose(-I, 1e-7)
    assert (M @ A @ inv(M)).allclose(inv(A), 1e-7)
    assert (M @ B @ inv(M)).allclose(inv(B), 1e-7)
    assert canonical_sign(M) == M


@given(exact_sl2(), exact_sl2(), exact_sl2())
def test_conjugator_recovers_the_conjugating_matrix(A, B, C):
    assume(not is_reducible_pair(A, B))
    assume(not (A @ B).is_plus_minus_identity())
    Ci = inv(C)
    M = conjugator(A, B, C @ A @ Ci, C @ B @ Ci)
    assert M.allclose(C, 1e-7) or M.allclose(-C, 1e-7)


def test_conjugator_none_on_trace_mismatch():
    A = Mat2.from_rows([[0, -1], [1, 0]])
    B = Mat2.from_rows([[0, "1/2"], [-2, 0]])
    assert conjugator(A, B, A, inv(B).scale(G(-1)) @ A) is None


@pytest.mark.parametrize("entries, flips", [
    ((0, -1, 1, 0), True), ((0, 1, -1, 0), False), ((1j, 0, 0, -1j), False),
    ((-1j, 0, 0, 1j), True), ((-1e-12, -2, 0.5, 0), True), ((1 - 1j, 0, 0, 0), False),
])
def test_canonical_sign(entries, flips):
    M = Mat2(*(complex(x) for x in entries))
    assert canonical_sign(M) == (-M if flips else M)


def test_canonical_sign_exact_axis():
    M = Mat2(G(0, Fraction(-1, 2)), G(1), G(0), G(0, 2))
    assert canonical_sign(M) == -M
