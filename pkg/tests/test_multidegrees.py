from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrangements.core import Arrangement, canonical_normal, char_poly_lattice, make_arrangement
from arrangements.exact import Poly
from arrangements.multidegrees import (
    EmptyArrangement,
    MultidegreeSequence,
    SignPatternViolation,
    char_poly_from_multidegrees,
    first_pivot,
    multidegrees_dr,
    multidegrees_from_char_poly,
    random_pivot,
)

from corpus import braid3, paper_example

T = Poly([0, 1])


def test_examples():
    assert multidegrees_dr(paper_example()).values == (1, 4, 5, 2)
    assert multidegrees_dr(make_arrangement(3, [(1, 0, 0)])).values == (1, 1, 0, 0)
    assert multidegrees_dr(braid3()).values == (1, 3, 2, 0)
    with pytest.raises(EmptyArrangement):
        multidegrees_dr(Arrangement(3, ()))


def test_char_poly_from_multidegrees_examples():
    assert char_poly_from_multidegrees(MultidegreeSequence((1, 4, 5, 2), 3)) == T**3 - 4 * T**2 + 5 * T - 2
    assert char_poly_from_multidegrees(MultidegreeSequence((1, 1, 0, 0), 3)) == T**3 - T**2
    assert char_poly_from_multidegrees(MultidegreeSequence((1, 3, 2, 0), 3)) == T**3 - 3 * T**2 + 2 * T


def test_multidegrees_from_char_poly():
    assert multidegrees_from_char_poly(T**3 - 4 * T**2 + 5 * T - 2).values == (1, 4, 5, 2)
    assert multidegrees_from_char_poly(T**3 - T**2).values == (1, 1, 0, 0)
    with pytest.raises(SignPatternViolation):
        multidegrees_from_char_poly(T**2 + T)
    with pytest.raises(SignPatternViolation):
        multidegrees_from_char_poly(T**3 - T)  # internal zero
    with pytest.raises(SignPatternViolation):
        multidegrees_from_char_poly(2 * T**2 - T)


def test_sequence_length_checked():
    with pytest.raises(ValueError):
        MultidegreeSequence((1, 2), 3)


def _arr(d):
    def build(vectors):
        return make_arrangement(d, sorted({canonical_normal(v) for v in vectors}))

    return st.lists(st.lists(st.integers(-3, 3), min_size=d, max_size=d).filter(any), min_size=1, max_size=6).map(
        build
    )


arrangements = st.integers(2, 4).flatmap(_arr)


@settings(max_examples=80, deadline=None)
@given(arrangements, st.integers(0, 2**32))
def test_pivot_choice_does_not_matter(a, seed):
    expected = multidegrees_dr(a)
    assert multidegrees_dr(a, pivot=first_pivot) == expected
    assert multidegrees_dr(a, pivot=random_pivot(seed)) == expected


@settings(max_examples=80, deadline=None)
@given(arrangements)
def test_matches_lattice_and_sequence_shape(a):
    d = multidegrees_dr(a)
    assert char_poly_from_multidegrees(d) == char_poly_lattice(a)
    assert d[0] == 1 and d[1] == a.k
    assert all(v >= 0 for v in d)
    nonzero = [i for i, v in enumerate(d) if v]
    assert nonzero == list(range(len(nonzero)))
    assert multidegrees_from_char_poly(char_poly_lattice(a)) == d


def test_shared_memo_is_consistent():
    memo: dict = {}
    first = multidegrees_dr(paper_example(), memo=memo)
    assert memo
    assert multidegrees_dr(paper_example(), memo=memo) == first
