import numpy as np
import pytest
from hypothesis import given

from isocover import maps
from isocover.words import (
    GAMMA_TILDE,
    PHI_STAR_IMAGES,
    SPHERE_RELATION,
    TORUS_RELATION,
    Word,
    eval_word,
    five_assignment,
    involution,
    involutive_letter_count,
    lift_normal_form,
    lift_reduce,
    phi_star,
    random_word,
    reduce,
    torus_assignment,
)
from isocover.sl2 import Mat2
from strategies import five_reps, gamma_words, torus_reps, torus_words

I = Mat2.identity()


@pytest.mark.parametrize("text", ["g0 g1^-1 gt", "alpha beta^-1 delta2", "", "glambda ginf^-1"])
def test_text_round_trip(text):
    assert str(Word.parse(text)) == text


@pytest.mark.parametrize("bad", ["g9", "alpha^2", "g0^-2", "beta^"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Word.parse(bad)


def test_mixed_alphabets_rejected():
    with pytest.raises(ValueError):
        Word.parse("g0 alpha")


def test_free_reduction_on_construction():
    assert Word.parse("alpha beta beta^-1 alpha^-1") == Word()
    assert len(Word.parse("g0 g0")) == 2


def test_projective_and_lifted_reduction():
    w = Word.parse("g0 g0 g1^-1 gt")
    assert reduce(w) == Word.parse("g1 gt")
    # g0 g0 -> -1, g1^-1 -> -g1
    assert lift_reduce(w) == (1, Word.parse("g1 gt"))
    assert lift_reduce(Word.parse("g0 g0")) == (-1, Word())
    assert lift_reduce(Word.parse("ginf^-1")) == (-1, Word.parse("ginf"))


def test_relation_pulls_back_to_minus_one_to_the_ten():
    pulled = phi_star(TORUS_RELATION)
    assert involutive_letter_count(pulled) == 10
    assert lift_normal_form(pulled) == (1, Word())


def test_sphere_relation_is_trivial():
    sign, rest = lift_normal_form(SPHERE_RELATION)
    assert rest == Word() and sign == 1


@given(torus_words)
def test_involution_is_an_involution(w):
    assert involution(involution(w)) == w


@given(torus_words, torus_words)
def test_substitutions_are_homomorphisms(u, v):
    assert involution(u * v) == involution(u) * involution(v)
    assert phi_star(u * v) == phi_star(u) * phi_star(v)
    assert phi_star(u.inverse()) == phi_star(u).inverse()


@given(five_reps())
def test_phi_star_matches_the_pullback(five):
    torus = maps.phi1_pullback(five)
    assign = five_assignment(five)
    for name, attr in zip(GAMMA_TILDE, ("a", "b", "d1", "d2")):
        assert eval_word(PHI_STAR_IMAGES[name], assign).allclose(getattr(torus, attr), 1e-9)
    assert eval_word(phi_star(TORUS_RELATION), assign).allclose(I, 1e-8)


@given(gamma_words, five_reps())
def test_lift_sign_is_what_evaluation_sees(w, five):
    assign = five_assignment(five)
    sign, red = lift_reduce(w)
    lhs, rhs = eval_word(w, assign), eval_word(red, assign).scale(sign)
    bound = 1.0
    for x in w:
        bound *= eval_word(Word([x]), assign).norm()
    assert lhs.max_abs_diff(rhs) <= 1e-9 * max(1.0, bound)


@given(torus_reps())
def test_involution_is_conjugation_by_m(rep):
    M = maps.descent_involution(rep)
    assign = torus_assignment(rep)
    for name in GAMMA_TILDE:
        w = Word.gen(name)
        assert eval_word(involution(w), assign).allclose(M @ eval_word(w, assign) @ M.inv(), 1e-7)


def test_empty_word_evaluates_to_identity_on_the_right_backend():
    exact = {"alpha": Mat2.from_rows([[1, 1], [0, 1]])}
    assert eval_word(Word(), exact).is_exact
    assert eval_word(Word(), {}) == I


def test_random_word_respects_alphabet():
    w = random_word(np.random.default_rng(0), GAMMA_TILDE, 30)
    assert w.group in (None, "GammaTilde") and len(w) <= 30
