"""Scalar backends: double-precision ``complex`` and exact Gaussian rationals.

Matrix code in :mod:`isocover.sl2` is written against the arithmetic
operators only, so entries can be either Python ``complex`` numbers or
:class:`GaussianRational` instances.  Mixing the two promotes to ``complex``.
"""

from __future__ import annotations

import cmath
import contextlib
from fractions import Fraction
from math import isqrt
from numbers import Rational
from typing import Iterator, Union

DEFAULT_EPSILON = 1e-9

_epsilon = DEFAULT_EPSILON


def get_epsilon() -> float:
    """Tolerance used by every floating equality check in the package."""
    return _epsilon


def set_epsilon(value: float) -> None:
    global _epsilon
    if not value > 0:
        raise ValueError(f"epsilon must be positive, got {value!r}")
    _epsilon = float(value)


@contextlib.contextmanager
def tolerance(value: float) -> Iterator[float]:
    """Temporarily override the global tolerance."""
    old = get_epsilon()
    set_epsilon(value)
    try:
        yield value
    finally:
        set_epsilon(old)


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def _fraction_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class GaussianRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _to_fraction(re))
        object.__setattr__(self, "im", _to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) + other if isinstance(other, (float, complex)) else NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) - other if isinstance(other, (float, complex)) else NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return other - complex(self) if isinstance(other, (float, complex)) else NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) * other if isinstance(other, (float, complex)) else NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) / other if isinstance(other, (float, complex)) else NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return other / complex(self) if isinstance(other, (float, complex)) else NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** (-k))
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- helpers ----------------------------------------------------------

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def sqrt(self) -> GaussianRational | None:
        """Principal square root if it is again a Gaussian rational."""
        modulus = _fraction_sqrt(self.norm())
        if modulus is None:
            return None
        x = _fraction_sqrt((modulus + self.re) / 2)
        y = _fraction_sqrt((modulus - self.re) / 2)
        if x is None or y is None:
            return None
        if self.im < 0:
            y = -y
        return GaussianRational(x, y)


Scalar = Union[complex, GaussianRational]


def is_exact(x) -> bool:
    return isinstance(x, (GaussianRational, int, Fraction))


def exact(x) -> GaussianRational:
    """Coerce ints, fractions, "p/q" strings and pairs into a Gaussian rational."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, tuple):
        return GaussianRational(*x)
    return GaussianRational(_to_fraction(x))


def to_complex(x) -> complex:
    return complex(x)


def is_zero(x, eps: float | None = None) -> bool:
    """Exact test for exact scalars, ``|x| < eps`` otherwise."""
    if isinstance(x, (GaussianRational, int, Fraction)):
        return x == 0
    return abs(x) < (get_epsilon() if eps is None else eps)


def close(x, y, eps: float | None = None) -> bool:
    return is_zero(x - y, eps)


def sqrt(x) -> tuple[Scalar, bool]:
    """Principal square root.

    Returns ``(root, promoted)``; ``promoted`` is True when ``x`` was exact but
    its root is not a Gaussian rational, in which case ``root`` is ``complex``.
    """
    if isinstance(x, (int, Fraction)):
        x = GaussianRational(x)
    if isinstance(x, GaussianRational):
        r = x.sqrt()
        if r is not None:
            return r, False
        return cmath.sqrt(complex(x)), True
    return cmath.sqrt(x), False


def argument(x) -> float:
    return cmath.phase(complex(x))
