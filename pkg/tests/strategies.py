"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

import numpy as np
from hypothesis import assume
from hypothesis import strategies as st

from isocover.reps import random_sl2, sample_five_rep, sample_torus_rep
from isocover.scalar import GaussianRational
from isocover.sl2 import Mat2
from isocover.words import GAMMA, GAMMA_TILDE, Generator, Word

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussian = st.builds(GaussianRational, small_fractions, small_fractions)
nonzero_gaussian = gaussian.filter(bool)

bounded_float = st.floats(min_value=-2, max_value=2, allow_nan=False, allow_infinity=False)
complex_entry = st.builds(complex, bounded_float, bounded_float)


@st.composite
def exact_sl2(draw):
    a = draw(nonzero_gaussian)
    b, c = draw(gaussian), draw(gaussian)
    return Mat2(a, b, c, (1 + b * c) / a)


@st.composite
def float_sl2(draw):
    entries = [draw(complex_entry) for _ in range(4)]
    det = entries[0] * entries[3] - entries[1] * entries[2]
    assume(abs(det) > 1e-2)
    s = complex(np.sqrt(det))
    return Mat2(*(x / s for x in entries))


seeds = st.integers(min_value=0, max_value=2**32 - 1)
thetas = st.sampled_from([Fraction(1, 2), Fraction(1, 3), 0.137, Fraction(2, 5)])


@st.composite
def torus_reps(draw, theta=None):
    th = draw(thetas) if theta is None else theta
    return sample_torus_rep(th, draw(seeds))


@st.composite
def five_reps(draw, theta=None):
    th = draw(thetas) if theta is None else theta
    return sample_five_rep(th, draw(seeds))


def words_over(alphabet, max_size=14):
    letter = st.builds(Generator, st.sampled_from(alphabet), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_size).map(Word)


gamma_words = words_over(GAMMA)
torus_words = words_over(GAMMA_TILDE)


def random_exact(seed):
    return random_sl2(np.random.default_rng(seed), "exact")
