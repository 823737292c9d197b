from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrangements.core import canonical_normal, make_arrangement
from arrangements.multidegrees import multidegrees_dr
from arrangements.oracle import (
    GenericityFailure,
    SliceDegeneracy,
    SliceSpec,
    UnsupportedSliceDim,
    _draw_slice,
    critical_count_line,
    critical_count_plane,
    draw_slice,
    log_derivative_numerator,
    multidegrees_partial,
    pencil,
    restricted_forms,
    slice_defect,
    trial_seeds,
)

from corpus import braid3, paper_example


def _proportional(u, v):
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(len(u)))


def test_line_slice_is_generic():
    p = pencil(paper_example())
    s = draw_slice(p, 1, seed=7)
    forms = restricted_forms(p, s)
    assert len(forms) == 5
    for i in range(5):
        for j in range(i + 1, 5):
            assert not _proportional(forms[i], forms[j])


def test_unsupported_slice_dims():
    p = pencil(paper_example())
    with pytest.raises(UnsupportedSliceDim):
        draw_slice(p, 3, seed=1)
    with pytest.raises(UnsupportedSliceDim):
        draw_slice(pencil(make_arrangement(1, [(1,)])), 2, seed=1)


class _ScriptedRandom(random.Random):
    """Replays a fixed list of integers before falling back to a real generator."""

    def __init__(self, seed, script):
        super().__init__(seed)
        self.script = list(script)

    def __new__(cls, seed, script):
        return super().__new__(cls, seed)

    def randint(self, a, b):
        if self.script:
            return self.script.pop(0)
        return super().randint(a, b)


def test_adversarial_slice_is_redrawn():
    p = pencil(paper_example())
    # base point and direction both have zero x coordinate, so x restricts to 0
    bad = [0, 5, 7, 11, 0, 3, -2, 9]
    assert slice_defect(p, SliceSpec(1, tuple(bad[:4]), (tuple(bad[4:]),))) is not None
    s = _draw_slice(p, 1, _ScriptedRandom(0, bad), None, 100, 32)
    assert s.base_point != tuple(bad[:4])
    assert slice_defect(p, s) is None


def test_redraw_budget_exhaustion():
    with pytest.raises(GenericityFailure):
        draw_slice(pencil(paper_example()), 1, seed=3, entry_range=0)
    with pytest.raises(GenericityFailure):
        multidegrees_partial(pencil(paper_example()), entry_range=0)


def test_line_counts():
    p = pencil(paper_example())
    assert critical_count_line(p, draw_slice(p, 1, seed=11)) == 3
    one = pencil(make_arrangement(3, [(1, 0, 0)]))
    assert critical_count_line(one, draw_slice(one, 1, seed=11)) == 0


def test_plane_counts():
    p = pencil(paper_example())
    assert critical_count_plane(p, draw_slice(p, 2, seed=5), shear=17) == 2
    one = pencil(make_arrangement(2, [(1, 0)]))
    assert critical_count_plane(one, draw_slice(one, 2, seed=5), shear=17) == 0
    axes = pencil(make_arrangement(2, [(1, 0), (0, 1)]))
    assert critical_count_plane(axes, draw_slice(axes, 2, seed=5), shear=17) == 0


def test_partial_examples():
    r = multidegrees_partial(pencil(paper_example()), trials=3, seed=42)
    assert (r.d1, r.d2, r.consistent, r.full) == (4, 5, True, (1, 4, 5, 2))
    assert r.counts[1] == 3 and r.counts[2] == 2
    r = multidegrees_partial(pencil(make_arrangement(2, [(1, 0)])))
    assert (r.d1, r.d2) == (1, 0)
    r = multidegrees_partial(pencil(braid3()))
    assert (r.d1, r.counts[1], r.counts[2], r.full) == (3, 2, 0, (1, 3, 2, 0))
    with pytest.raises(ValueError):
        multidegrees_partial(pencil(paper_example()), trials=2)


def test_deterministic_given_seed():
    p = pencil(paper_example())
    assert multidegrees_partial(p, seed=9) == multidegrees_partial(p, seed=9)
    assert trial_seeds(42, 3) == trial_seeds(42, 3)
    assert len(set(trial_seeds(42, 5))) == 5


def _arr(d, max_k):
    def build(vectors):
        return make_arrangement(d, sorted({canonical_normal(v) for v in vectors}))

    return st.lists(
        st.lists(st.integers(-4, 4), min_size=d, max_size=d).filter(any), min_size=1, max_size=max_k
    ).map(build)


@settings(max_examples=40, deadline=None)
@given(_arr(3, 6), st.integers(0, 2**32))
def test_line_numerator_degree(a, seed):
    # residues of dlog sum to zero, so the numerator drops to degree k - 1
    p = pencil(a)
    s = draw_slice(p, 1, seed=seed)
    assert log_derivative_numerator(p, s).degree == a.k - 1
    assert critical_count_line(p, s) == a.k - 1


@settings(max_examples=25, deadline=None)
@given(_arr(3, 5), st.integers(0, 2**32), st.integers(0, 2**32))
def test_plane_count_independent_of_slice(a, seed1, seed2):
    p = pencil(a)
    r1 = multidegrees_partial(p, seed=seed1)
    r2 = multidegrees_partial(p, seed=seed2)
    assert r1.consistent and r2.consistent
    assert r1.counts.a == r2.counts.a
    assert r1.full == multidegrees_dr(a).values


@settings(max_examples=25, deadline=None)
@given(_arr(3, 5), st.integers(0, 2**32), st.integers(2, 9))
def test_plane_count_invariant_under_slice_scaling(a, seed, lam):
    p = pencil(a)
    s = draw_slice(p, 2, seed=seed)
    scaled = SliceSpec(2, tuple(lam * x for x in s.base_point), tuple(tuple(lam * x for x in d) for d in s.directions))
    assert slice_defect(p, scaled) is None
    for shear in (13, 29, 101):
        try:
            base = critical_count_plane(p, s, shear)
        except SliceDegeneracy:
            continue
        assert critical_count_plane(p, scaled, shear) == base
        return
    pytest.fail("no usable shear")
