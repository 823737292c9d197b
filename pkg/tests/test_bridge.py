from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrangements.bridge import (
    EmptyGraph,
    GraphError,
    LoopColumn,
    RepresentedMatroid,
    TooLarge,
    analyze_sequence,
    chromatic_deletion_contraction,
    chromatic_via_arrangement,
    coefficient_sequence,
    complete_graph,
    count_proper_colorings,
    graphic_arrangement,
    make_graph,
    matroid_char_poly_subsets,
    matroid_of_arrangement,
)
from arrangements.core import Arrangement, make_arrangement
from arrangements.exact import Poly, QMatrix

from corpus import PAPER_NORMALS, paper_example

T = Poly([0, 1])
K3 = complete_graph(3)
EDGE = make_graph(2, [(0, 1)])
PATH3 = make_graph(3, [(0, 1), (1, 2)])


def test_graphic_arrangement_examples():
    assert graphic_arrangement(K3) == make_arrangement(3, [(1, -1, 0), (1, 0, -1), (0, 1, -1)])
    assert graphic_arrangement(EDGE) == make_arrangement(2, [(1, -1)])
    assert graphic_arrangement(PATH3).k == 2
    with pytest.warns(EmptyGraph):
        assert graphic_arrangement(make_graph(3, [])) == Arrangement(3, ())


def test_make_graph_rejects():
    with pytest.raises(GraphError):
        make_graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        make_graph(2, [(0, 2)])
    with pytest.raises(GraphError):
        make_graph(3, [(0, 1), (1, 0)])


def test_chromatic_examples():
    assert chromatic_deletion_contraction(K3) == T**3 - 3 * T**2 + 2 * T
    assert chromatic_deletion_contraction(make_graph(4, [])) == T**4
    assert chromatic_deletion_contraction(EDGE) == T**2 - T
    assert chromatic_via_arrangement(K3) == T**3 - 3 * T**2 + 2 * T
    assert chromatic_via_arrangement(EDGE) == T**2 - T
    assert chromatic_via_arrangement(PATH3) == T**3 - 2 * T**2 + T


def test_coloring_counts():
    assert count_proper_colorings(K3, 3) == 6
    assert count_proper_colorings(K3, 0) == 0
    assert count_proper_colorings(make_graph(0, []), 0) == 1
    assert count_proper_colorings(make_graph(2, []), 2) == 4
    with pytest.raises(TooLarge):
        count_proper_colorings(make_graph(11, []), 2)


graphs = st.integers(1, 6).flatmap(
    lambda m: st.sets(
        st.tuples(st.integers(0, m - 1), st.integers(0, m - 1)).filter(lambda e: e[0] < e[1])
    ).map(lambda es: make_graph(m, sorted(es)))
)


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_three_chromatic_routes_agree(g):
    dc = chromatic_deletion_contraction(g)
    if g.edges:
        assert chromatic_via_arrangement(g) == dc
    for t in range(4):
        assert dc(t) == count_proper_colorings(g, t)


def test_matroid_examples():
    m = matroid_of_arrangement(paper_example())
    assert matroid_char_poly_subsets(m) == T**3 - 4 * T**2 + 5 * T - 2
    single = RepresentedMatroid(QMatrix.from_rows([[1], [0]], 1))
    assert matroid_char_poly_subsets(single) == T - 1
    twins = RepresentedMatroid(QMatrix.from_rows([[1, 1], [0, 0]], 2))
    assert matroid_char_poly_subsets(twins) == T - 1
    with pytest.raises(LoopColumn):
        RepresentedMatroid(QMatrix.from_rows([[1, 0], [0, 0]], 2))
    with pytest.raises(TooLarge):
        matroid_char_poly_subsets(m, max_subsets=8)


def test_matroid_columns_are_normals():
    m = matroid_of_arrangement(make_arrangement(3, PAPER_NORMALS))
    assert sorted(m.columns()) == sorted(paper_example().normals)


def test_analyze_sequence_examples():
    r = analyze_sequence([1, 4, 5, 2])
    assert (r.is_log_concave, r.has_internal_zeros, r.is_unimodal) == (True, False, True)
    r = analyze_sequence([1, 0, 1])
    assert r.has_internal_zeros and not r.is_log_concave and r.witness == 1
    r = analyze_sequence([1, 1, 0, 0])
    assert (r.is_log_concave, r.has_internal_zeros, r.is_unimodal) == (True, False, True)
    assert not analyze_sequence([3, 1, 3]).is_unimodal
    assert coefficient_sequence(T**3 - 4 * T**2 + 5 * T - 2) == [1, 4, 5, 2]


def _naive_log_concave(v):
    return all(v[i] ** 2 >= v[i - 1] * v[i + 1] for i in range(1, len(v) - 1))


def _naive_unimodal(v):
    peak = v.index(max(v))
    return all(v[i] <= v[i + 1] for i in range(peak)) and all(
        v[i] >= v[i + 1] for i in range(peak, len(v) - 1)
    )


@given(st.lists(st.integers(0, 30), min_size=1, max_size=8))
def test_analyze_sequence_matches_naive(v):
    r = analyze_sequence(v)
    assert r.is_log_concave == _naive_log_concave(v)
    assert r.is_unimodal == _naive_unimodal(v)
    nz = [i for i, x in enumerate(v) if x]
    assert r.has_internal_zeros == (bool(nz) and any(v[i] == 0 for i in range(nz[0], nz[-1])))
    assert (r.witness is None) == (r.is_log_concave and r.is_unimodal and not r.has_internal_zeros)
