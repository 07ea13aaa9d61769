import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hypercert.errors import InputError, SizeLimitError
from hypercert.lattice import (
    Classification, Kind, classify, collapse_conclusion, has_property, hermite_normal_form, same_subgroup,
    tuple_rank, verify_classification,
)

Z1 = lambda *xs: [(x,) for x in xs]  # noqa: E731

tuples = st.integers(1, 3).flatmap(
    lambda t: st.lists(st.tuples(*[st.integers(-4, 4)] * t), min_size=1, max_size=7))


def test_rank_examples():
    assert tuple_rank([(1, 0), (0, 1), (1, 1)]) == 2
    assert tuple_rank([(2, 4), (1, 2)]) == 1
    assert tuple_rank([(0, 0)]) == 0


def test_property_examples():
    assert has_property(Z1(0, 0, 1, -1), 4, 2)
    assert not has_property(Z1(0, 0, 1, 1), 4, 2)
    assert has_property(Z1(0, 0, 0, 0, 0), 4, 3)
    with pytest.raises(InputError):
        has_property(Z1(0, 1, 2), 2, 2)
    with pytest.raises(SizeLimitError):
        has_property([(0,)] * 13, 4, 2)


def test_collapse_examples():
    assert collapse_conclusion(Z1(0, 0, 0, 0), 3, 2)
    assert collapse_conclusion(Z1(0, 0, 0, 5), 3, 2)
    assert not collapse_conclusion(Z1(0, 1, 2, 3), 4, 2)


def test_classify_examples():
    c = classify(Z1(0, 0, 1, -1), 2)
    assert (c.kind, c.k, c.breakpoints, c.basis) == (Kind.TYPE_B, 1, (1,), ((1,),))
    a = classify([(0, 0), (0, 0), (1, 0), (1, 0), (0, 1), (0, 1)], 3)
    assert a.kind is Kind.TYPE_A and set(a.basis) == {(1, 0), (0, 1)}
    assert classify(Z1(0, 0, 0, 0), 2).kind is Kind.RANK_DEFICIT
    assert classify(Z1(1, 1, 2, 2), 2).kind is Kind.NOT_APPLICABLE
    assert classify(Z1(0, 0, 1, 1), 2).kind is Kind.NOT_APPLICABLE


def test_classification_json_round_trip():
    c = classify([(0, 0), (0, 0), (1, 0), (1, 0), (0, 1), (0, 1)], 3)
    again = Classification.from_json(c.to_json())
    assert again == c and verify_classification([(0, 0), (0, 0), (1, 0), (1, 0), (0, 1), (0, 1)], again)


def test_tampered_witness_is_rejected():
    A = Z1(0, 0, 1, -1)
    c = classify(A, 2)
    bad = Classification(c.kind, c.s, c.k, c.breakpoints, ((2,),), c.reindexing, c.shift)
    assert not verify_classification(A, bad)


def test_same_subgroup_examples():
    assert same_subgroup(Z1(0, 1), Z1(-1, 0), (1,))
    assert same_subgroup(Z1(0, 2), Z1(-2, 0), (2,))
    assert same_subgroup(Z1(0, 0, 0), Z1(0, 0, 0), (0,))
    with pytest.raises(InputError):
        same_subgroup(Z1(0, 1), Z1(0, 0), (1,))


def test_rejects_non_integers():
    with pytest.raises(InputError):
        tuple_rank([(0.5,)])
    with pytest.raises(InputError):
        tuple_rank([(True,)])


@settings(max_examples=200, deadline=None)
@given(tuples)
def test_rank_matches_rational_rank(A):
    assert tuple_rank(A) == oracles.bareiss_rank(A)
    H = hermite_normal_form(A)
    assert hermite_normal_form(list(H) + list(A)) == H


@settings(max_examples=100, deadline=None)
@given(tuples.filter(lambda A: len(A) >= 3), st.data())
def test_property_matches_definition(A, data):
    r = data.draw(st.integers(2, len(A)))
    s = data.draw(st.integers(1, r - 1))
    assert has_property(A, r, s) == oracles.property_by_definition(A, r, s)


def test_property_is_permutation_invariant():
    for A in itertools.product(Z1(-1, 0, 1), repeat=4):
        base = has_property(A, 4, 2)
        assert all(has_property(P, 4, 2) == base for P in itertools.permutations(A))
