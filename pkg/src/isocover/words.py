"""Words in the orbifold group of the five-punctured sphere and the twice-punctured torus group.

Two regimes are kept apart.  :func:`reduce` rewrites projectively, using
g_i^2 = 1 for the four involutive generators.  Evaluation in a unimodular
representation is linear, and there M_i^2 = -I; :func:`lift_reduce` performs
the same rewriting while tracking the resulting sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .sl2 import Mat2, inv

GAMMA = ("g0", "g1", "gt", "glambda", "ginf")
GAMMA_TILDE = ("alpha", "beta", "delta1", "delta2")
INVOLUTIVE = frozenset({"g0", "g1", "glambda", "ginf"})


@dataclass(frozen=True, slots=True)
class Generator:
    name: str
    exponent: int = 1

    def __post_init__(self):
        if self.name not in GAMMA and self.name not in GAMMA_TILDE:
            raise ValueError(f"unknown generator {self.name!r}")
        if self.exponent not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {self.exponent}")

    @property
    def group(self) -> str:
        return "Gamma" if self.name in GAMMA else "GammaTilde"

    def inverse(self) -> Generator:
        return Generator(self.name, -self.exponent)

    def __str__(self) -> str:
        return self.name if self.exponent == 1 else f"{self.name}^-1"


def _free_reduce(letters: Iterable[Generator]) -> tuple[Generator, ...]:
    stack: list[Generator] = []
    for x in letters:
        if stack and stack[-1].name == x.name and stack[-1].exponent == -x.exponent:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


class Word:
    """Freely reduced word over one of the two alphabets.

    Free reduction is exact in every linear representation, so it is applied
    on construction; the order-two rewriting of :func:`reduce` is not.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Generator] = ()):
        letters = _free_reduce(letters)
        groups = {x.group for x in letters}
        if len(groups) > 1:
            raise ValueError("word mixes letters of both groups")
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse whitespace-separated tokens such as ``"g0 g1^-1 gt"``."""
        letters = []
        for token in text.split():
            m = re.fullmatch(r"([A-Za-z]+[0-9]*)(?:\^(-?1))?", token)
            if not m:
                raise ValueError(f"bad token {token!r}")
            letters.append(Generator(m.group(1), int(m.group(2) or 1)))
        return cls(letters)

    @classmethod
    def gen(cls, name: str, exponent: int = 1) -> Word:
        return cls([Generator(name, exponent)])

    @property
    def group(self) -> str | None:
        return self.letters[0].group if self.letters else None

    def inverse(self) -> Word:
        return Word(x.inverse() for x in reversed(self.letters))

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> Word:
        base = self if k >= 0 else self.inverse()
        out = Word()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def _signed_reduce(letters: Iterable[Generator]) -> tuple[int, tuple[Generator, ...]]:
    # involutive letters: g^-1 -> -g, g g -> -1 ; everything else freely
    sign = 1
    stack: list[Generator] = []
    for x in letters:
        if x.name in INVOLUTIVE:
            if x.exponent == -1:
                sign = -sign
                x = Generator(x.name)
            if stack and stack[-1].name == x.name:
                stack.pop()
                sign = -sign
                continue
        elif stack and stack[-1].name == x.name and stack[-1].exponent == -x.exponent:
            stack.pop()
            continue
        stack.append(x)
    return sign, tuple(stack)


def reduce(w: Word) -> Word:
    """Projective normal form: free reduction plus g_i^2 = 1 for involutive generators."""
    return Word(_signed_reduce(w.letters)[1])


def lift_reduce(w: Word) -> tuple[int, Word]:
    """Same rewriting as :func:`reduce`, with the sign it costs at the lift level.

    For any unimodular five-punctured representation,
    ``eval_word(w) == sign * eval_word(word)``.
    """
    sign, letters = _signed_reduce(w.letters)
    return sign, Word(letters)


# from g0 g1 gt glambda ginf = 1
_GT_SUBSTITUTE = Word.parse("g1^-1 g0^-1 ginf^-1 glambda^-1")


def lift_normal_form(w: Word) -> tuple[int, Word]:
    """Signed normal form in the free product of four groups of order two.

    Eliminates gt through the product relation (exact at the lift level), then
    applies :func:`lift_reduce`.  A word is trivial in the orbifold group iff
    the returned word is empty; the sign is then the scalar it evaluates to.
    """
    gt = _GT_SUBSTITUTE
    letters: list[Generator] = []
    for x in w.letters:
        if x.name == "gt":
            letters.extend((gt if x.exponent == 1 else gt.inverse()).letters)
        else:
            letters.append(x)
    return lift_reduce(Word(letters))


PHI_STAR_IMAGES = {
    "alpha": Word.parse("g1 gt glambda"),
    "beta": Word.parse("glambda ginf"),
    "delta1": Word.parse("gt"),
    "delta2": Word.parse("ginf gt ginf^-1"),
}

INVOLUTION_IMAGES = {
    "alpha": Word.parse("alpha^-1"),
    "beta": Word.parse("beta^-1"),
    "delta1": Word.parse("delta2"),
    "delta2": Word.parse("delta1"),
}


def _substitute(w: Word, images: Mapping[str, Word]) -> Word:
    out = Word()
    for x in w.letters:
        img = images[x.name]
        out = out * (img if x.exponent == 1 else img.inverse())
    return out


def phi_star(w: Word) -> Word:
    """Image of a torus-group word in the orbifold group of the sphere."""
    if w.group == "Gamma":
        raise ValueError("phi_star takes a word in the torus group")
    return _substitute(w, PHI_STAR_IMAGES)


def involution(w: Word) -> Word:
    """Action of the elliptic involution swapping the two punctures."""
    if w.group == "Gamma":
        raise ValueError("the involution acts on the torus group")
    return _substitute(w, INVOLUTION_IMAGES)


def involutive_letter_count(w: Word) -> int:
    """Number of letters among g0, g1, glambda, ginf."""
    return sum(1 for x in w.letters if x.name in INVOLUTIVE)


def eval_word(w: Word, assignment: Mapping[str, Mat2]) -> Mat2:
    """Product of the assigned matrices; the empty word evaluates to I."""
    out = None
    cache: dict[str, Mat2] = {}
    for x in w.letters:
        if x.name not in assignment:
            raise KeyError(f"no matrix assigned to generator {x.name!r}")
        M = assignment[x.name]
        if x.exponent == -1:
            if x.name not in cache:
                cache[x.name] = inv(M)
            M = cache[x.name]
        out = M if out is None else out @ M
    if out is None:
        exact = bool(assignment) and all(M.is_exact for M in assignment.values())
        return Mat2.identity(exact_backend=exact)
    return out


def five_assignment(rep) -> dict[str, Mat2]:
    return {"g0": rep.m0, "g1": rep.m1, "gt": rep.mt, "glambda": rep.mlambda, "ginf": rep.minf}


def torus_assignment(rep) -> dict[str, Mat2]:
    return {"alpha": rep.a, "beta": rep.b, "delta1": rep.d1, "delta2": rep.d2}


# alpha beta (delta1 beta alpha delta2)^-1
TORUS_RELATION = Word.parse("alpha beta") * Word.parse("delta1 beta alpha delta2").inverse()
SPHERE_RELATION = Word.parse("g0 g1 gt glambda ginf")


def random_word(rng, alphabet: tuple[str, ...] = GAMMA_TILDE, length: int = 10) -> Word:
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    names = rng.integers(len(alphabet), size=length)
    exps = rng.choice((1, -1), size=length)
    return Word(Generator(alphabet[i], int(e)) for i, e in zip(names, exps))
