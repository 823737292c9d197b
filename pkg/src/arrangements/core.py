"""Central arrangements, their intersection lattice and characteristic polynomial."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Poly, QMatrix, Rational, _normalize, _rref_rows, format_rational


class ArrangementError(ValueError):
    pass


class ZeroNormal(ArrangementError):
    pass


class DuplicateHyperplane(ArrangementError):
    pass


class DimensionMismatch(ArrangementError):
    pass


class AmbientTooSmall(ArrangementError):
    pass


class HyperplaneIndexError(IndexError):
    pass


def canonical_normal(vector: Sequence[Rational]) -> tuple:
    """Scale so the first nonzero entry is 1."""
    vec = [Fraction(x) for x in vector]
    lead = next((x for x in vec if x != 0), None)
    if lead is None:
        raise ZeroNormal("zero normal vector")
    return tuple(_normalize(x / lead) for x in vec)


@dataclass(frozen=True, order=True)
class Hyperplane:
    normal: tuple

    def __str__(self):
        return "(" + ", ".join(format_rational(x) for x in self.normal) + ")"


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    hyperplanes: tuple = ()

    def __len__(self):
        return len(self.hyperplanes)

    @property
    def k(self) -> int:
        return len(self.hyperplanes)

    @property
    def normals(self) -> list[tuple]:
        return [h.normal for h in self.hyperplanes]


def make_arrangement(ambient_dim: int, normals: Iterable[Sequence[Rational]]) -> Arrangement:
    """Canonicalize and sort the normals; duplicates are rejected."""
    if ambient_dim < 1:
        raise DimensionMismatch("ambient dimension must be positive")
    seen: dict[tuple, int] = {}
    for i, v in enumerate(normals):
        if len(v) != ambient_dim:
            raise DimensionMismatch(f"normal {i} has length {len(v)}, expected {ambient_dim}")
        c = canonical_normal(v)
        if c in seen:
            raise DuplicateHyperplane(
                f"normals {seen[c]} and {i} define the same hyperplane {Hyperplane(c)}"
            )
        seen[c] = i
    return Arrangement(ambient_dim, tuple(Hyperplane(c) for c in sorted(seen)))


def _merged(ambient_dim: int, normals: Iterable[tuple]) -> Arrangement:
    return Arrangement(ambient_dim, tuple(Hyperplane(c) for c in sorted(set(normals))))


def _check_index(a: Arrangement, h_index: int) -> None:
    if not 0 <= h_index < a.k:
        raise HyperplaneIndexError(f"hyperplane index {h_index} out of range for k={a.k}")


def delete(a: Arrangement, h_index: int) -> Arrangement:
    _check_index(a, h_index)
    return Arrangement(a.ambient_dim, a.hyperplanes[:h_index] + a.hyperplanes[h_index + 1:])


def restrict(a: Arrangement, h_index: int) -> Arrangement:
    """Restriction of the other hyperplanes to H, in kernel coordinates of H.

    H = {x : v.x = 0} with v canonical, pivot p = first nonzero index.  The
    kernel basis is e_j - v_j e_p for j != p, so a normal w pulls back to
    (w_j - v_j w_p)_{j != p}.  Coincident images are merged.
    """
    _check_index(a, h_index)
    if a.ambient_dim < 2:
        raise AmbientTooSmall("cannot restrict an arrangement in dimension 1")
    v = a.hyperplanes[h_index].normal
    p = next(i for i, x in enumerate(v) if x != 0)
    images = []
    for idx, h in enumerate(a.hyperplanes):
        if idx == h_index:
            continue
        w = h.normal
        pulled = [w[j] - v[j] * w[p] for j in range(a.ambient_dim) if j != p]
        assert any(x != 0 for x in pulled), "distinct central hyperplanes never restrict to zero"
        images.append(canonical_normal(pulled))
    return _merged(a.ambient_dim - 1, images)


# ---------------------------------------------------------------------------
# lattice


@dataclass(frozen=True)
class Flat:
    """A flat, stored as the rref of the span of normals of hyperplanes containing it."""

    basis: QMatrix
    dim: int = field(compare=False)
    containing: tuple = field(compare=False)

    @property
    def rank(self) -> int:
        return self.basis.rows


@dataclass(frozen=True)
class IntersectionLattice:
    arrangement: Arrangement
    flats: tuple
    mobius: dict = field(compare=False, hash=False)

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    @staticmethod
    def leq(c1: Flat, c2: Flat) -> bool:
        """C1 <= C2 iff C2 is contained in C1."""
        return set(c1.containing) <= set(c2.containing)

    def by_containing(self, indices: Iterable[int]) -> Flat:
        key = tuple(sorted(indices))
        for f in self.flats:
            if f.containing == key:
                return f
        raise KeyError(key)

    def __len__(self):
        return len(self.flats)


def _in_row_space(rows: list[list], pivots: list[int], v: Sequence) -> bool:
    r = [Fraction(x) for x in v]
    for row, p in zip(rows, pivots):
        c = r[p]
        if c:
            r = [x - c * y for x, y in zip(r, row)]
    return not any(r)


def _make_flat(a: Arrangement, rows: list[list]) -> Flat:
    reduced, pivots = _rref_rows(rows, a.ambient_dim)
    reduced = reduced[:len(pivots)]
    containing = tuple(
        i for i, h in enumerate(a.hyperplanes) if _in_row_space(reduced, pivots, h.normal)
    )
    basis = QMatrix.from_rows(reduced, a.ambient_dim)
    return Flat(basis, a.ambient_dim - len(pivots), containing)


def mobius_values(lattice: IntersectionLattice) -> dict:
    """mu(bottom, X) for every flat X."""
    ordered = sorted(lattice.flats, key=lambda f: (f.rank, f.containing))
    contain_sets = {f: frozenset(f.containing) for f in ordered}
    mu: dict = {}
    for x in ordered:
        if x.rank == 0:
            mu[x] = 1
            continue
        cx = contain_sets[x]
        mu[x] = -sum(mu[c] for c in mu if contain_sets[c] < cx)
    return mu


def build_lattice(a: Arrangement) -> IntersectionLattice:
    """Enumerate all flats by breadth-first closure under intersection."""
    bottom = Flat(QMatrix.zeros(0, a.ambient_dim), a.ambient_dim, ())
    found: dict[tuple, Flat] = {bottom.basis.entries: bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for x in frontier:
            base_rows = [list(r) for r in x.basis.to_rows()]
            done = set(x.containing)
            for idx, h in enumerate(a.hyperplanes):
                if idx in done:
                    continue
                f = _make_flat(a, base_rows + [list(h.normal)])
                done.update(f.containing)
                if f.basis.entries not in found:
                    found[f.basis.entries] = f
                    nxt.append(f)
        frontier = nxt
    flats = tuple(sorted(found.values(), key=lambda f: (f.rank, f.containing)))
    lattice = IntersectionLattice(a, flats, {})
    lattice.mobius.update(mobius_values(lattice))
    return lattice


def char_poly_from_lattice(lattice: IntersectionLattice) -> Poly:
    coeffs = [0] * (lattice.arrangement.ambient_dim + 1)
    for f, m in lattice.mobius.items():
        coeffs[f.dim] += m
    return Poly(coeffs)


def char_poly_lattice(a: Arrangement) -> Poly:
    """sum over flats of mu(C) t^dim(C)."""
    return char_poly_from_lattice(build_lattice(a))


def rank(a: Arrangement) -> int:
    if not a.hyperplanes:
        return 0
    return len(_rref_rows([list(n) for n in a.normals], a.ambient_dim)[1])
