"""Orbifold signatures, ramified covers between them, and their classification.

Everything here is exact: orders are integers or the sentinel :data:`INF`
(with 1/INF = 0), areas are :class:`~fractions.Fraction` multiples of 2*pi.

A cover candidate of degree d over a base orbifold of genus g records, for
every base orbifold point of order nu, the local degrees k_j of the cover at
the points above it, plus the profiles over additional branch values that are
not orbifold points ("free" branch values).  A point above nu with local
degree k is

* an orbifold point of the cover when nu does not divide k (or nu = INF),
* a regular point when k = nu,
* a "branching" point when k = m*nu with m >= 2,

and free branch values contribute a branching point for every k >= 2.  The
counts of these are ñ and b.
"""

from __future__ import annotations

import builtins
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import Iterator, Sequence, Union

from .errors import MalformedCandidateError
from .hurwitz import is_realizable


@total_ordering
class _Infinity:
    """Order of a puncture.  Compares above every integer; 1/INF == 0."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("isocover.INF")

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
Order = Union[int, _Infinity]


def reciprocal(nu: Order) -> Fraction:
    return Fraction(0) if nu is INF else Fraction(1, nu)


def parse_order(x) -> Order:
    if x is INF or (isinstance(x, str) and x.strip().lower() in ("inf", "infinity", "∞")):
        return INF
    if isinstance(x, float) and math.isinf(x):
        return INF
    if isinstance(x, bool) or int(x) != x or int(x) < 2:
        raise MalformedCandidateError(f"orbifold order must be an integer >= 2 or inf, got {x!r}")
    return int(x)


def divides(nu: Order, k: int) -> bool:
    return nu is not INF and k % nu == 0


# -- signatures ----------------------------------------------------------------


@dataclass(frozen=True)
class OrbifoldSignature:
    genus: int
    orders: tuple[Order, ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise MalformedCandidateError(f"genus must be nonnegative, got {self.genus}")
        object.__setattr__(self, "orders", tuple(sorted(parse_order(x) for x in self.orders)))

    @property
    def n(self) -> int:
        return len(self.orders)

    @property
    def normalized_area(self) -> Fraction:
        """Area divided by 2*pi: 2g - 2 + sum(1 - 1/nu)."""
        return 2 * self.genus - 2 + sum((1 - reciprocal(nu) for nu in self.orders), Fraction(0))

    def __str__(self) -> str:
        return f"({self.genus}; {', '.join(map(str, self.orders))})"


def area(sig: OrbifoldSignature) -> float:
    """Orbifold area 2*pi*(2g - 2 + sum(1 - 1/nu)); see ``normalized_area`` for the exact value."""
    return 2 * math.pi * float(sig.normalized_area)


def is_hyperbolic(sig: OrbifoldSignature) -> bool:
    return sig.normalized_area > 0


def teich_dim(sig: OrbifoldSignature) -> int:
    return 3 * sig.genus - 3 + sig.n


# -- cover candidates ----------------------------------------------------------


def _partition(parts: Sequence[int], d: int, where: str) -> tuple[int, ...]:
    parts = tuple(sorted((int(k) for k in parts), reverse=True))
    if not parts or min(parts) < 1 or sum(parts) != d:
        raise MalformedCandidateError(f"profile {parts} over {where} is not a partition of {d}")
    return parts


@dataclass(frozen=True)
class CoverCandidate:
    """Degree, base signature and branching data of a ramified cover.

    ``profiles[i]`` lists the local degrees over the i-th orbifold point of
    ``base`` (in the sorted order of ``base.orders``); ``free_profiles`` lists
    the profiles over branch values that are not orbifold points.
    """

    degree: int
    base: OrbifoldSignature
    profiles: tuple[tuple[int, ...], ...]
    free_profiles: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        d = self.degree
        if d < 1:
            raise MalformedCandidateError(f"degree must be positive, got {d}")
        if len(self.profiles) != self.base.n:
            raise MalformedCandidateError(
                f"{len(self.profiles)} profiles for {self.base.n} orbifold points"
            )
        profiles = tuple(_partition(p, d, f"orbifold point {i}") for i, p in builtins.enumerate(self.profiles))
        free = tuple(_partition(p, d, "a free branch value") for p in self.free_profiles)
        if any(p == (1,) * d for p in free):
            raise MalformedCandidateError("a free branch value must actually branch")
        # keep points of equal order in a canonical order
        pairs = sorted(zip(self.base.orders, profiles))
        object.__setattr__(self, "profiles", tuple(p for _, p in pairs))
        object.__setattr__(self, "free_profiles", tuple(sorted(free)))
        self.cover_genus  # Riemann-Hurwitz consistency

    @classmethod
    def build(cls, degree: int, genus: int, points: Sequence[tuple[Order, Sequence[int]]],
              free_profiles: Sequence[Sequence[int]] = ()) -> CoverCandidate:
        """From (order, profile) pairs, e.g. ``build(2, 0, [(2, [2]), (INF, [1, 1])])``."""
        points = [(parse_order(nu), tuple(p)) for nu, p in points]
        points.sort(key=lambda t: t[0])
        base = OrbifoldSignature(genus, tuple(nu for nu, _ in points))
        return cls(degree, base, tuple(p for _, p in points), tuple(tuple(p) for p in free_profiles))

    def points(self) -> Iterator[tuple[Order, tuple[int, ...]]]:
        return zip(self.base.orders, self.profiles)

    @property
    def ramification(self) -> int:
        return sum(self.degree - len(p) for p in self.profiles + self.free_profiles)

    @property
    def cover_genus(self) -> int:
        """g̃ from 2g̃ - 2 = d(2g - 2) + sum(d - #profile)."""
        twice = self.degree * (2 * self.base.genus - 2) + self.ramification + 2
        if twice % 2 or twice < 0:
            raise MalformedCandidateError(
                f"Riemann-Hurwitz gives cover genus {Fraction(twice, 2)}, not a nonnegative integer"
            )
        return twice // 2

    @property
    def cover_orbifold_count(self) -> int:
        """ñ: points above orbifold points whose local degree nu does not divide."""
        return sum(1 for nu, p in self.points() for k in p if not divides(nu, k))

    @property
    def branch_count(self) -> int:
        """b: points with k = m*nu, m >= 2, plus ramification points over free values."""
        over_orbifold = sum(1 for nu, p in self.points() for k in p if divides(nu, k) and k > nu)
        return over_orbifold + sum(1 for p in self.free_profiles for k in p if k >= 2)

    @property
    def cover_signature(self) -> OrbifoldSignature:
        orders = []
        for nu, p in self.points():
            for k in p:
                if nu is INF:
                    orders.append(INF)
                elif k % nu:
                    orders.append(nu // math.gcd(nu, k))
        return OrbifoldSignature(self.cover_genus, tuple(orders))

    def key(self) -> tuple:
        """(d, g, orders, g̃, ñ, b): the numeric data a classification entry is labelled by."""
        return (self.degree, self.base.genus, self.base.orders,
                self.cover_genus, self.cover_orbifold_count, self.branch_count)

    def normalized(self) -> CoverCandidate:
        """Replace every finite order dividing none of its local degrees by INF.

        Such points lift to orbifold points only, so the counts the
        inequalities see are unchanged and the area only grows.
        """
        points = [(INF if nu is not INF and not any(k % nu == 0 for k in p) else nu, p)
                  for nu, p in self.points()]
        return CoverCandidate.build(self.degree, self.base.genus, points, self.free_profiles)

    @property
    def has_simple_branching(self) -> bool:
        """Every point above an orbifold point is orbifold, regular or of multiplicity exactly 2."""
        return all(not divides(nu, k) or k in (nu, 2 * nu) for nu, p in self.points() for k in p)

    def __str__(self) -> str:
        pts = " ".join(f"{nu}:{'+'.join(map(str, p))}" for nu, p in self.points())
        free = " ".join("free:" + "+".join(map(str, p)) for p in self.free_profiles)
        return f"d={self.degree} g={self.base.genus} [{' '.join(x for x in (pts, free) if x)}]"


# -- constraints ---------------------------------------------------------------


@dataclass(frozen=True)
class CandidateReport:
    degree_ok: bool
    hyperbolic: bool
    area_inequality: bool
    area_equality: bool
    branching_inequality: bool
    positive_dimension: bool
    dimension_inequality: bool
    rough_inequality: bool

    @property
    def admissible(self) -> bool:
        return all((self.degree_ok, self.hyperbolic, self.area_inequality, self.branching_inequality,
                    self.positive_dimension, self.dimension_inequality))

    def as_dict(self) -> dict[str, bool]:
        out = {k: getattr(self, k) for k in self.__dataclass_fields__}
        out["admissible"] = self.admissible
        return out


def cover_area_side(c: CoverCandidate) -> Fraction:
    """2g̃ - 2 + sum over points above orbifold points of (1 - k/nu), minus b."""
    s = Fraction(2 * c.cover_genus - 2)
    for nu, p in c.points():
        for k in p:
            if not divides(nu, k):
                s += 1 - k * reciprocal(nu)
    return s - c.branch_count


def check_candidate(c: CoverCandidate) -> CandidateReport:
    d, g, n = c.degree, c.base.genus, c.base.n
    gt, nt, b = c.cover_genus, c.cover_orbifold_count, c.branch_count
    base_dim = teich_dim(c.base)
    cover_dim = 3 * gt - 3 + nt
    lhs = d * c.base.normalized_area
    rhs = cover_area_side(c)
    if n:
        nu = max(c.base.orders)
        rough = (2 * d - 3) * g + Fraction((d - 2) * n, 2) + gt + nt * reciprocal(nu) \
            <= d * (Fraction(3, 2) + reciprocal(nu)) - 2
    else:
        rough = (2 * d - 3) * g + gt <= 2 * d - 2
    return CandidateReport(
        degree_ok=d >= 2,
        hyperbolic=is_hyperbolic(c.base),
        area_inequality=lhs <= rhs,
        area_equality=lhs == rhs,
        branching_inequality=base_dim + b >= cover_dim,
        positive_dimension=0 < base_dim,
        dimension_inequality=base_dim <= cover_dim,
        rough_inequality=rough,
    )


# -- classification ------------------------------------------------------------

LABELS = {
    (2, 0, (2, 2, INF, INF), 0, 4, 0): "Quadratic",
    (4, 0, (2, 2, 2, INF), 0, 4, 0): "Quartic",
    (2, 0, (2, 2, 2, INF), 1, 1, 0): "Lamé",
    (2, 0, (2, 2, 2, 2, 2), 2, 0, 1): "Genus2",
    (2, 0, (2, 2, 2, INF), 1, 2, 1): "UncompleteTwicePuncturedTorus",
    (2, 0, (2, 2, 2, 2, 2, 2), 2, 0, 0): "UncompleteGenus2",
    (2, 0, (2, 2, 2, 2, INF), 1, 2, 0): "Bielliptic1",
}
ELIMINATED = {
    (4, 0, (2, 2, 2, 3), 1, 1, 0): "Eliminated-Σ₄",
}
UNEXPECTED = "UNEXPECTED"

PICARD = OrbifoldSignature(0, (2, 2, 2, 2))


def label_for(key: tuple, realizable: bool) -> str:
    table = LABELS if realizable else ELIMINATED
    return table.get(key, UNEXPECTED)


@dataclass(frozen=True)
class ClassificationEntry:
    candidate: CoverCandidate
    label: str
    report: CandidateReport
    realizable: bool

    @property
    def eliminated(self) -> bool:
        return not self.realizable

    def key(self) -> tuple:
        return self.candidate.key()


@dataclass(frozen=True)
class InformationalEntry:
    signature: OrbifoldSignature
    note: str


INFORMATIONAL = (InformationalEntry(PICARD, "Picard: not hyperbolic, known construction"),)


@dataclass(frozen=True)
class SearchBounds:
    """Ranges swept by :func:`enumerate_candidates`."""

    genera: tuple[int, ...]
    orders: tuple[Order, ...]
    max_points: int
    max_cover_genus: int
    require_dividing: bool

    @classmethod
    def pruned(cls, d: int) -> SearchBounds:
        # base genus 0, orders in 2..d or INF, each finite order divides a local degree
        return cls((0,), tuple(range(2, d + 1)) + (INF,), 12, 2, True)

    @classmethod
    def brute_force(cls) -> SearchBounds:
        return cls((0, 1, 2, 3), tuple(range(2, 13)) + (INF,), 12, 4, False)


def partitions(d: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = d if largest is None else largest
    if d == 0:
        yield ()
        return
    for k in range(min(d, largest), 0, -1):
        for rest in partitions(d - k, k):
            yield (k,) + rest


@dataclass(frozen=True)
class _PointType:
    nu: Order | None  # None for a free branch value
    profile: tuple[int, ...]
    slack2: int  # twice the contribution to the branching slack
    ram: int

    @classmethod
    def make(cls, nu, profile, d) -> _PointType:
        ram = d - len(profile)
        if nu is None:
            b = sum(1 for k in profile if k >= 2)
            return cls(nu, profile, 2 * b - 3 * ram, ram)
        nt = sum(1 for k in profile if not divides(nu, k))
        b = sum(1 for k in profile if divides(nu, k) and k > nu)
        return cls(nu, profile, 2 * (1 + b - nt) - 3 * ram, ram)


def candidate_space(d: int, genus: int, bounds: SearchBounds) -> Iterator[CoverCandidate]:
    """Every candidate within ``bounds`` that can satisfy the branching inequality.

    The inequality 3g-3+n+b >= 3g̃-3+ñ rewrites, through Riemann-Hurwitz, as
    a sum of one term per point (orbifold or free branch value) being at least
    3(d-1)(g-1).  Each term is at most -1/2, so partial sums only decrease and
    a branch of the search can be cut as soon as its sum is too small.
    """
    orbi = [_PointType.make(nu, p, d) for nu in bounds.orders for p in partitions(d)
            if not bounds.require_dividing or nu is INF or any(k % nu == 0 for k in p)]
    free = [_PointType.make(None, p, d) for p in partitions(d) if p != (1,) * d]
    need2 = 6 * (d - 1) * (genus - 1)
    base_ram = d * (2 * genus - 2) + 2  # 2g̃ = base_ram + R

    def too_big(ram: int) -> bool:
        return base_ram + ram > 2 * bounds.max_cover_genus

    def extend_free(points, chosen, start, slack2, ram):
        if (base_ram + ram) % 2 == 0 and base_ram + ram >= 0:
            yield CoverCandidate.build(d, genus, [(t.nu, t.profile) for t in points],
                                       [t.profile for t in chosen])
        for i in range(start, len(free)):
            t = free[i]
            if slack2 + t.slack2 < need2 or too_big(ram + t.ram):
                continue
            yield from extend_free(points, chosen + [t], i, slack2 + t.slack2, ram + t.ram)

    def extend(points, start, slack2, ram):
        yield from extend_free(points, [], 0, slack2, ram)
        if len(points) == bounds.max_points:
            return
        for i in range(start, len(orbi)):
            t = orbi[i]
            if slack2 + t.slack2 < need2 or too_big(ram + t.ram):
                continue
            yield from extend(points + [t], i, slack2 + t.slack2, ram + t.ram)

    if need2 > 0:
        return  # no points at all still cannot satisfy the inequality
    yield from extend([], 0, 0, 0)


def _sort_key(entry: ClassificationEntry):
    c = entry.candidate
    return (c.degree, c.base.n, c.cover_genus, c.cover_orbifold_count,
            c.base.genus, [(x is INF, 0 if x is INF else x) for x in c.base.orders],
            c.branch_count, entry.label)


def enumerate_candidates(d_max: int, pruning: bool = True, d_min: int = 2) -> list[ClassificationEntry]:
    """Admissible covers of degree d_min..d_max, plus those that fail only for lack of monodromy.

    With ``pruning`` the search is confined to base genus 0 and orders in
    2..d or INF, each finite order dividing some local degree above it.
    Without it, base genera 0..3, orders 2..12 or INF, up to 12 orbifold
    points and cover genus up to 4 are swept and every hit is normalized
    afterwards.  Entries are deduplicated on their numeric key.
    """
    if d_max < 2:
        raise ValueError(f"d_max must be at least 2, got {d_max}")
    groups: dict[tuple, list[tuple[CoverCandidate, CandidateReport]]] = {}
    for d in range(max(d_min, 2), d_max + 1):
        bounds = SearchBounds.pruned(d) if pruning else SearchBounds.brute_force()
        for genus in bounds.genera:
            for raw in candidate_space(d, genus, bounds):
                report = check_candidate(raw)
                if not report.admissible:
                    continue
                c = raw.normalized()
                groups.setdefault(c.key(), []).append((c, check_candidate(c)))
    entries = []
    for key, members in groups.items():
        members.sort(key=lambda m: str(m[0]))
        hit = next((m for m in members if _realizable(m[0])), None)
        c, report = hit if hit else members[0]
        entries.append(ClassificationEntry(c, label_for(key, hit is not None), report, hit is not None))
    entries.sort(key=_sort_key)
    return entries


def _realizable(c: CoverCandidate) -> bool:
    nontrivial = [p for p in c.profiles + c.free_profiles if p != (1,) * c.degree]
    return is_realizable(c.degree, c.base.genus, nontrivial)


enumerate = enumerate_candidates


def admissible_keys(entries: Sequence[ClassificationEntry]) -> set[tuple]:
    return {e.key() for e in entries if e.realizable}


@dataclass
class Classification:
    entries: list[ClassificationEntry]
    informational: tuple[InformationalEntry, ...] = field(default=INFORMATIONAL)

    @property
    def admissible(self) -> list[ClassificationEntry]:
        return [e for e in self.entries if e.realizable]

    @property
    def eliminated(self) -> list[ClassificationEntry]:
        return [e for e in self.entries if not e.realizable]


def classify(d_max: int, pruning: bool = True) -> Classification:
    return Classification(enumerate_candidates(d_max, pruning))
