import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isocover.hurwitz import (
    DOUBLE_TRANSPOSITIONS,
    compose,
    cycle_string,
    cycle_type,
    elements_of_type,
    from_cycles,
    generated_subgroup,
    identity,
    inverse,
    is_realizable,
    is_transitive,
    order,
    sigma4_obstruction,
    symmetric_group,
)


def test_double_transposition_product_by_hand():
    x = from_cycles([(1, 2), (3, 4)], 4)
    y = from_cycles([(1, 3), (2, 4)], 4)
    assert compose(x, y) == from_cycles([(1, 4), (2, 3)], 4)
    assert cycle_string(compose(x, y)) == "(14)(23)"
    assert order(compose(x, y)) == 2


def test_composition_applies_right_factor_first():
    a = from_cycles([(1, 2)], 3)
    b = from_cycles([(2, 3)], 3)
    # b sends 1 -> 1, then a sends 1 -> 2
    assert compose(a, b)[0] == 1
    assert cycle_string(compose(a, b)) == "(123)"


@given(st.permutations(range(5)), st.permutations(range(5)), st.permutations(range(5)))
def test_group_axioms(p, q, r):
    p, q, r = tuple(p), tuple(q), tuple(r)
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, inverse(p)) == identity(5)
    assert order(p) == order(inverse(p))
    assert sorted(cycle_type(p)) == sorted(cycle_type(compose(compose(q, p), inverse(q))))


def test_class_sizes_in_s4():
    sizes = {lam: len(elements_of_type(4, lam)) for lam in [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]}
    assert sizes == {(1, 1, 1, 1): 1, (2, 1, 1): 6, (2, 2): 3, (3, 1): 8, (4,): 6}
    assert sum(sizes.values()) == len(symmetric_group(4))


def test_klein_four_group_is_not_transitive_on_its_own_generators_only():
    V = generated_subgroup(DOUBLE_TRANSPOSITIONS, 4)
    assert len(V) == 4 and is_transitive(V, 4)
    assert not is_transitive(generated_subgroup([from_cycles([(1, 2)], 4)], 4), 4)


@pytest.mark.parametrize("d, g, profiles, expected", [
    (2, 0, [(2,)] * 2, True),            # z -> z^2
    (2, 0, [(2,)] * 3, False),           # odd number of branch points
    (2, 0, [(2,)] * 6, True),            # hyperelliptic genus two
    (3, 0, [(3,), (3,), (3,)], True),
    (3, 0, [(3,), (2, 1)], False),       # sign of the product
    (4, 0, [(2, 2)] * 3, True),
    (4, 0, [(2, 2)] * 3 + [(3, 1)], False),
    (4, 0, [(2, 2), (4,), (4,)], True),
    (4, 0, [(2, 2), (2, 2), (4,)], False),   # odd total ramification
    (4, 0, [(2, 2), (2, 2)], False),     # not transitive
    (2, 1, [], True),                    # unramified double cover of a torus
    (3, 1, [(2, 1), (2, 1)], True),
])
def test_realizability_oracles(d, g, profiles, expected):
    assert is_realizable(d, g, profiles) is expected


def test_sigma4_obstruction_table():
    report = sigma4_obstruction()
    assert len(report.table) == 27
    assert report.product_orders == frozenset({1, 2})
    assert report.obstruction_confirmed and report.verdict == "cover nonexistent"
    assert (("(12)(34)", "(13)(24)", "(12)(34)"), "(13)(24)", 2) in report.table


def test_sigma4_obstruction_is_fast():
    start = time.perf_counter()
    sigma4_obstruction()
    assert time.perf_counter() - start < 0.01
