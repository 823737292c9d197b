"""Graphs and represented matroids as arrangements, plus sequence diagnostics."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import Arrangement, char_poly_lattice, make_arrangement
from .exact import Poly, QMatrix

MAX_COLORING_VERTICES = 10
MAX_SUBSETS = 2**20


class TooLarge(ValueError):
    pass


class GraphError(ValueError):
    pass


class LoopColumn(ValueError):
    pass


class EmptyGraph(UserWarning):
    pass


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: tuple = ()


def make_graph(vertex_count: int, edges) -> SimpleGraph:
    """Validate and sort; loops, multi-edges and bad indices are errors."""
    if vertex_count < 0:
        raise GraphError("negative vertex count")
    seen = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphError(f"repeated edge {e}")
        seen.add(e)
    return SimpleGraph(vertex_count, tuple(sorted(seen)))


def complete_graph(m: int) -> SimpleGraph:
    return make_graph(m, itertools.combinations(range(m), 2))


def graphic_arrangement(g: SimpleGraph) -> Arrangement:
    """One hyperplane x_i - x_j = 0 per edge; edgeless graphs warn and give the empty arrangement."""
    if not g.edges:
        warnings.warn("graph has no edges", EmptyGraph, stacklevel=2)
        return Arrangement(g.vertex_count, ())
    normals = []
    for i, j in g.edges:
        v = [0] * g.vertex_count
        v[i], v[j] = 1, -1
        normals.append(v)
    return make_arrangement(g.vertex_count, normals)


def _contract(n: int, edges: tuple, edge: tuple) -> tuple[int, tuple]:
    u, v = edge

    def relabel(x):
        if x == v:
            x = u
        return x - 1 if x > v else x

    merged = set()
    for a, b in edges:
        if (a, b) == edge:
            continue
        a, b = relabel(a), relabel(b)
        merged.add((min(a, b), max(a, b)))
    return n - 1, tuple(sorted(merged))


@lru_cache(maxsize=None)
def _chromatic(n: int, edges: tuple) -> Poly:
    if not edges:
        return Poly.monomial(n)
    pivot = edges[-1]
    deleted = _chromatic(n, edges[:-1])
    contracted = _chromatic(*_contract(n, edges, pivot))
    return deleted - contracted


def chromatic_deletion_contraction(g: SimpleGraph) -> Poly:
    return _chromatic(g.vertex_count, g.edges)


def count_proper_colorings(g: SimpleGraph, colors: int, max_vertices: int = MAX_COLORING_VERTICES) -> int:
    if colors < 0:
        raise ValueError("negative number of colors")
    if g.vertex_count > max_vertices:
        raise TooLarge(f"{g.vertex_count} vertices exceeds the brute-force limit {max_vertices}")
    return sum(
        all(c[u] != c[v] for u, v in g.edges)
        for c in itertools.product(range(colors), repeat=g.vertex_count)
    )


def chromatic_via_arrangement(g: SimpleGraph) -> Poly:
    return char_poly_lattice(graphic_arrangement(g))


# ---------------------------------------------------------------------------
# matroids


@dataclass(frozen=True)
class RepresentedMatroid:
    matrix: QMatrix

    def __post_init__(self):
        for j in range(self.matrix.cols):
            if not any(self.matrix.column(j)):
                raise LoopColumn(f"column {j} is zero (a loop)")

    @property
    def ground_size(self) -> int:
        return self.matrix.cols

    def columns(self) -> list[tuple]:
        return [self.matrix.column(j) for j in range(self.matrix.cols)]


def matroid_of_arrangement(a: Arrangement) -> RepresentedMatroid:
    return RepresentedMatroid(QMatrix.from_rows(a.normals, a.ambient_dim).transpose())


def _reduce(basis: list[tuple[int, list]], v: list) -> list:
    for p, row in basis:
        c = v[p]
        if c:
            v = [x - c * y for x, y in zip(v, row)]
    return v


def matroid_char_poly_subsets(m: RepresentedMatroid, max_subsets: int = MAX_SUBSETS) -> Poly:
    """sum over S subset of E of (-1)^|S| t^(r(E) - r(S)).

    Subsets are enumerated depth first while carrying an echelon basis of
    the chosen columns, so each rank costs one vector reduction.
    """
    if 2**m.ground_size > max_subsets:
        raise TooLarge(f"2^{m.ground_size} subsets exceeds the limit {max_subsets}")
    cols = [[Fraction(x) for x in c] for c in m.columns()]
    by_rank: dict[int, int] = {}

    def walk(i: int, basis: list, size: int) -> None:
        if i == len(cols):
            r = len(basis)
            by_rank[r] = by_rank.get(r, 0) + (-1) ** size
            return
        walk(i + 1, basis, size)
        v = _reduce(basis, cols[i])
        p = next((j for j, x in enumerate(v) if x != 0), None)
        if p is None:
            walk(i + 1, basis, size + 1)
        else:
            row = [x / v[p] for x in v]
            walk(i + 1, basis + [(p, row)], size + 1)

    walk(0, [], 0)
    full = max(by_rank)
    coeffs = [0] * (full + 1)
    for r, c in by_rank.items():
        coeffs[full - r] += c
    return Poly(coeffs)


# ---------------------------------------------------------------------------
# sequences


@dataclass(frozen=True)
class SequenceReport:
    is_log_concave: bool
    has_internal_zeros: bool
    is_unimodal: bool
    witness: int | None = None


def analyze_sequence(values: Sequence[int]) -> SequenceReport:
    if not values:
        raise ValueError("empty sequence")
    vals = list(values)
    failures = []

    lc_fail = next(
        (i for i in range(1, len(vals) - 1) if vals[i] ** 2 < vals[i - 1] * vals[i + 1]), None
    )
    if lc_fail is not None:
        failures.append(lc_fail)

    nonzero = [i for i, v in enumerate(vals) if v != 0]
    zero_fail = None
    if nonzero:
        zero_fail = next((i for i in range(nonzero[0], nonzero[-1]) if vals[i] == 0), None)
    if zero_fail is not None:
        failures.append(zero_fail)

    uni_fail = None
    descending = False
    for i in range(1, len(vals)):
        if vals[i] < vals[i - 1]:
            descending = True
        elif vals[i] > vals[i - 1] and descending:
            uni_fail = i
            break
    if uni_fail is not None:
        failures.append(uni_fail)

    return SequenceReport(
        is_log_concave=lc_fail is None,
        has_internal_zeros=zero_fail is not None,
        is_unimodal=uni_fail is None,
        witness=min(failures) if failures else None,
    )


def coefficient_sequence(p: Poly) -> list[int]:
    """Absolute coefficients from the leading term down."""
    return [abs(int(c)) for c in reversed(p.coeffs)]
