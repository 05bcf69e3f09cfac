import pytest
from hypothesis import given

from isocover.errors import DegenerateError, NoConjugatorError, ReducibleError
from isocover.maps import (
    bielliptic_involution,
    descent_diagnostic,
    five_to_genus2,
    genus2_to_five,
    phi1_descend,
    phi1_fiber,
    phi1_pullback,
    pi_descend,
    pi_fiber,
    pi_pullback,
)
from isocover.reps import HALF, GenusTwoRep, TorusTwoRep, is_conjugate, reparam_d_to_c, sample_torus_rep, validate
from isocover.sl2 import Mat2, inv
from strategies import five_reps, torus_reps

TOL = 1e-8
I = Mat2.identity()


@given(five_reps())
def test_pullback_lands_in_torus_space(five):
    torus = phi1_pullback(five)
    assert validate(torus, TOL) == []
    assert torus.d1 == five.mt


@given(torus_reps())
def test_descent_and_round_trip(rep):
    five = phi1_descend(rep)
    assert validate(five, TOL) == []
    assert phi1_pullback(five).allclose(rep, TOL)
    assert abs(descent_diagnostic(rep)) < TOL


@given(five_reps())
def test_original_lies_in_its_own_fiber(five):
    fiber = phi1_fiber(phi1_pullback(five))
    assert any(p.allclose(five, 1e-7) for p in fiber.points)


@given(torus_reps())
def test_fiber_points_differ_by_four_signs(rep):
    p, q = phi1_fiber(rep).points
    assert q.mt == p.mt
    for name in ("m0", "m1", "mlambda", "minf"):
        assert getattr(q, name).allclose(-getattr(p, name), TOL)
    assert not p.allclose(q, TOL)


def test_reducible_torus_rep_cannot_descend():
    D = sample_torus_rep(HALF, 3).d1
    rep = TorusTwoRep(I, I, D, inv(D), HALF)
    assert validate(rep) == []
    with pytest.raises(ReducibleError):
        phi1_descend(rep)


def test_invalid_input_is_rejected():
    rep = sample_torus_rep("1/3", 3)
    with pytest.raises(ValueError):
        phi1_descend(TorusTwoRep(rep.b, rep.a, rep.d1, rep.d2, rep.theta))


@given(torus_reps(theta=HALF))
def test_bielliptic_pullback_and_descent(rep):
    c = reparam_d_to_c(rep)
    g2 = pi_pullback(c)
    assert validate(g2, TOL) == []
    M = bielliptic_involution(g2)
    assert (M @ M).allclose(-I, TOL)
    assert (M @ g2.a1 @ inv(M)).allclose(g2.a2, 1e-7)
    back = pi_descend(g2)
    assert validate(back, TOL) == []
    assert back.c1.allclose(c.c1, 1e-7) or back.c1.allclose(-c.c1, 1e-7)
    assert all(pi_pullback(x).allclose(g2, 1e-7) for x in pi_fiber(g2))


@given(torus_reps(theta=HALF))
def test_chain_back_to_the_sphere(rep):
    five = genus2_to_five(pi_pullback(reparam_d_to_c(rep)))
    assert is_conjugate(five, phi1_descend(rep), projective=True, eps=1e-7)


@given(five_reps(theta=HALF))
def test_composite_map(five):
    assert validate(five_to_genus2(five), TOL) == []


def test_composite_needs_half():
    from isocover.reps import sample_five_rep
    with pytest.raises(DegenerateError):
        five_to_genus2(sample_five_rep("1/3", 0))


def test_swapped_handles_have_no_conjugator():
    g = pi_pullback(reparam_d_to_c(sample_torus_rep(HALF, 5)))
    swapped = GenusTwoRep(g.a1, g.b1, g.b1, g.a1)
    assert validate(swapped) == []
    with pytest.raises(NoConjugatorError):
        pi_descend(swapped)
