import math
import time
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from isocover.errors import MalformedCandidateError
from isocover.orbifold import (
    INF,
    INFORMATIONAL,
    LABELS,
    PICARD,
    SearchBounds,
    UNEXPECTED,
    CoverCandidate,
    OrbifoldSignature,
    admissible_keys,
    candidate_space,
    area,
    check_candidate,
    classify,
    enumerate_candidates,
    is_hyperbolic,
    partitions,
    reciprocal,
    teich_dim,
)

GOLDEN_ADMISSIBLE = {
    (2, 0, (2, 2, INF, INF), 0, 4, 0): "Quadratic",
    (4, 0, (2, 2, 2, INF), 0, 4, 0): "Quartic",
    (2, 0, (2, 2, 2, INF), 1, 1, 0): "Lamé",
    (2, 0, (2, 2, 2, 2, 2), 2, 0, 1): "Genus2",
    (2, 0, (2, 2, 2, INF), 1, 2, 1): "UncompleteTwicePuncturedTorus",
    (2, 0, (2, 2, 2, 2, 2, 2), 2, 0, 0): "UncompleteGenus2",
    (2, 0, (2, 2, 2, 2, INF), 1, 2, 0): "Bielliptic1",
}
GOLDEN_ELIMINATED = {(4, 0, (2, 2, 2, 3), 1, 1, 0): "Eliminated-Σ₄"}


@pytest.mark.parametrize("genus, orders, expected", [
    (0, (2, 2, 2, 2), 0), (0, (2, 2, 2, 2, 2), math.pi), (2, (), 4 * math.pi),
])
def test_area_examples(genus, orders, expected):
    sig = OrbifoldSignature(genus, orders)
    assert area(sig) == pytest.approx(expected)
    assert is_hyperbolic(sig) is (expected > 0)


@pytest.mark.parametrize("genus, n, dim", [(0, 4, 1), (0, 5, 2), (1, 2, 2)])
def test_teichmuller_dimension(genus, n, dim):
    assert teich_dim(OrbifoldSignature(genus, (2,) * n)) == dim


def test_infinity_is_exact_and_sorts_last():
    sig = OrbifoldSignature(0, ("inf", 3, 2, INF))
    assert sig.orders == (2, 3, INF, INF)
    assert reciprocal(INF) == 0
    assert sig.normalized_area == Fraction(-2) + Fraction(1, 2) + Fraction(2, 3) + 2
    with pytest.raises(MalformedCandidateError):
        OrbifoldSignature(0, (1,))


def test_candidate_counts_by_hand():
    lame = CoverCandidate.build(2, 0, [(2, [2])] * 3 + [(INF, [2])])
    assert (lame.cover_genus, lame.cover_orbifold_count, lame.branch_count) == (1, 1, 0)
    assert lame.cover_signature == OrbifoldSignature(1, (INF,))
    # a point of order 2 with local degree 4 is a branching point upstairs
    c = CoverCandidate.build(4, 0, [(2, [4]), (2, [2, 2]), (3, [3, 1]), (INF, [2, 1, 1])])
    assert c.cover_genus == 1
    assert c.branch_count == 1 and c.cover_orbifold_count == 4


@pytest.mark.parametrize("points, free", [
    ([(2, [2]), (2, [1])], ()),           # profile does not sum to the degree
    ([(2, [2])] * 3, ()),                 # half-integral cover genus
    ([(2, [2])] * 2, ([1, 1],)),          # free value that does not branch
])
def test_malformed_candidates(points, free):
    with pytest.raises(MalformedCandidateError):
        CoverCandidate.build(2, 0, points, free)


def test_quadratic_satisfies_everything():
    c = CoverCandidate.build(2, 0, [(2, [2]), (2, [2]), (INF, [1, 1]), (INF, [1, 1])])
    r = check_candidate(c)
    assert c.key() == (2, 0, (2, 2, INF, INF), 0, 4, 0)
    assert r.admissible and r.area_equality and r.rough_inequality


def test_degree_three_sphere_cover_with_four_points_is_rejected():
    # g~ = 0, n = 4, no punctures: the cover carries too many orbifold points
    c = CoverCandidate.build(3, 0, [(2, [2, 1])] * 3 + [(3, [2, 1])])
    r = check_candidate(c)
    assert c.cover_genus == 0 and c.base.n == 4
    assert not r.branching_inequality and not r.admissible


def test_degree_one_is_rejected():
    c = CoverCandidate.build(1, 0, [(2, [1])] * 5)
    r = check_candidate(c)
    assert not r.degree_ok and not r.admissible


def _golden_ok(entries):
    got_ok = {e.key(): e.label for e in entries if e.realizable}
    got_bad = {e.key(): e.label for e in entries if not e.realizable}
    return got_ok == GOLDEN_ADMISSIBLE and got_bad == GOLDEN_ELIMINATED


def test_golden_list_degree_four():
    entries = enumerate_candidates(4)
    assert _golden_ok(entries)
    assert all(e.label != UNEXPECTED for e in entries)
    assert LABELS == GOLDEN_ADMISSIBLE


def test_degree_two_alone():
    entries = enumerate_candidates(2)
    assert len(entries) == 6 and all(e.realizable for e in entries)


def test_degree_three_stratum_is_empty():
    assert enumerate_candidates(3, d_min=3) == []


def test_pruning_is_sound():
    start = time.perf_counter()
    brute = enumerate_candidates(4, pruning=False)
    assert time.perf_counter() - start < 10
    assert _golden_ok(brute)
    assert admissible_keys(brute) == admissible_keys(enumerate_candidates(4))


def test_output_order():
    entries = enumerate_candidates(4)
    keys = [(e.candidate.degree, e.candidate.base.n, e.candidate.cover_genus,
             e.candidate.cover_orbifold_count) for e in entries]
    assert keys == sorted(keys)


def test_simple_branching_gives_area_equality():
    for e in enumerate_candidates(4):
        if e.candidate.has_simple_branching:
            assert e.report.area_equality


def test_picard_reported_separately():
    c = classify(4)
    assert [x.signature for x in c.informational] == [PICARD] == [x.signature for x in INFORMATIONAL]
    assert not is_hyperbolic(PICARD)
    assert len(c.admissible) == 7 and len(c.eliminated) == 1


orders_st = st.one_of(st.integers(2, 7), st.just(INF))


@st.composite
def candidates(draw):
    d = draw(st.integers(1, 4))
    g = draw(st.integers(0, 2))
    parts = list(partitions(d))
    pts = draw(st.lists(st.tuples(orders_st, st.sampled_from(parts)), max_size=7))
    nontrivial = [p for p in parts if p != (1,) * d]
    free = draw(st.lists(st.sampled_from(nontrivial), max_size=2)) if nontrivial else []
    try:
        return CoverCandidate.build(d, g, pts, free)
    except MalformedCandidateError:
        assume(False)


@given(candidates())
def test_area_inequality_follows_from_riemann_hurwitz(c):
    assert check_candidate(c).area_inequality


def test_admissible_implies_rough_inequality():
    # exhaustive over the brute-force search space rather than sampled
    bounds = SearchBounds.brute_force()
    seen = 0
    for d in range(2, 5):
        for genus in bounds.genera:
            for c in candidate_space(d, genus, bounds):
                r = check_candidate(c)
                if r.admissible:
                    seen += 1
                    assert r.rough_inequality, str(c)
    assert seen > 0


@given(candidates())
def test_normalization_keeps_the_counts(c):
    n = c.normalized()
    assert (n.cover_genus, n.cover_orbifold_count, n.branch_count) == \
        (c.cover_genus, c.cover_orbifold_count, c.branch_count)
    assert n.base.normalized_area >= c.base.normalized_area
