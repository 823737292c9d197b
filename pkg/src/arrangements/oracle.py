"""Critical-point counts of f / x_{n+1}^k on random rational lines and planes.

With a_0 = 1 and a_i the number of critical points of the restriction of
phi = f / x_{n+1}^k to a general i-dimensional linear subspace, off the polar
locus V(f x_{n+1}), the multidegrees of the pencil's Gauss map satisfy

    d_i = a_{i-1} + a_i.

Lines give a_1 (always k - 1), planes give a_2.  Together they pin down the
whole multidegree sequence for ambient dimension <= 3, and d_1, d_2 beyond.

Everything is exact.  "General" is realized by seeded integer slices plus
explicit genericity checks; degenerate draws are rejected and redrawn.
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import Arrangement
from .exact import (
    BiPoly,
    Poly,
    distinct_root_count,
    coprime,
    gcd_degree,
    strip_rational_root,
    rank_of,
    resultant_in_second_variable,
)

log = logging.getLogger(__name__)

DEFAULT_ENTRY_RANGE = 10_000
DEFAULT_MAX_REDRAWS = 32
DEFAULT_TRIALS = 3


class OracleError(Exception):
    pass


class UnsupportedSliceDim(OracleError, ValueError):
    pass


class GenericityFailure(OracleError):
    """Redraw budget exhausted without an acceptable slice."""


class SliceDegeneracy(OracleError):
    """The slice (or shear) is not general enough; draw another."""


class PolarDegeneracy(SliceDegeneracy):
    pass


class ShearDegeneracy(SliceDegeneracy):
    pass


class ResultantIdenticallyZero(SliceDegeneracy):
    pass


class CriticalAtInfinity(SliceDegeneracy):
    pass


@dataclass(frozen=True)
class PencilData:
    """The pencil spanned by f = h_1...h_k and x_{n+1}^k in P^{n+1}."""

    source: Arrangement
    k: int
    forms: tuple
    pole_form: tuple

    @property
    def cone_dim(self) -> int:
        return self.source.ambient_dim + 1

    @property
    def polar_forms(self) -> tuple:
        return self.forms + (self.pole_form,)

    @property
    def weights(self) -> tuple:
        return (1,) * self.k + (-self.k,)


def pencil(a: Arrangement) -> PencilData:
    if a.k == 0:
        raise ValueError("the pencil needs at least one hyperplane")
    forms = tuple(tuple(h.normal) + (0,) for h in a.hyperplanes)
    pole = (0,) * a.ambient_dim + (1,)
    return PencilData(a, a.k, forms, pole)


@dataclass(frozen=True)
class SliceSpec:
    dim: int
    base_point: tuple
    directions: tuple
    seed: int | None = None

    @property
    def points(self) -> tuple:
        return (self.base_point,) + self.directions


@dataclass(frozen=True)
class CriticalCounts:
    a: dict = field(default_factory=lambda: {0: 1})

    def __getitem__(self, i: int) -> int:
        return self.a[i]


def _dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def restricted_forms(p: PencilData, s: SliceSpec) -> list[tuple]:
    """Each polar form as (value at base point, derivative along each direction)."""
    return [tuple(_dot(c, v) for v in s.points) for c in p.polar_forms]


def _proportional(u: Sequence, v: Sequence) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(i + 1, len(u)))


def slice_defect(p: PencilData, s: SliceSpec) -> str | None:
    """Why the slice is not acceptable, or None if it is."""
    if rank_of(s.points) != s.dim + 1:
        return "base point and directions are linearly dependent"
    restricted = restricted_forms(p, s)
    for idx, r in enumerate(restricted):
        if not any(r):
            return f"polar form {idx} vanishes identically on the slice"
        if not any(r[1:]):
            return f"polar form {idx} is constant on the slice (pole at infinity)"
    for i in range(len(restricted)):
        for j in range(i + 1, len(restricted)):
            if _proportional(restricted[i], restricted[j]):
                return f"polar forms {i} and {j} coincide on the slice"
            if s.dim == 2 and _proportional(restricted[i][1:], restricted[j][1:]):
                return f"polar lines {i} and {j} are parallel"
    return None


def _draw_slice(
    p: PencilData,
    dim: int,
    rng: random.Random,
    seed: int | None,
    entry_range: int,
    max_redraws: int,
) -> SliceSpec:
    if dim not in (1, 2):
        raise UnsupportedSliceDim(f"slices of dimension {dim} are not supported (only 1 and 2)")
    if dim > p.source.ambient_dim:
        raise UnsupportedSliceDim(
            f"a {dim}-dimensional slice does not fit in P^{p.source.ambient_dim}"
        )
    width = p.cone_dim
    for _ in range(max_redraws):
        vecs = [
            tuple(rng.randint(-entry_range, entry_range) for _ in range(width))
            for _ in range(dim + 1)
        ]
        s = SliceSpec(dim, vecs[0], tuple(vecs[1:]), seed)
        reason = slice_defect(p, s)
        if reason is None:
            return s
        log.debug("rejected slice: %s", reason)
    raise GenericityFailure(f"no generic {dim}-slice after {max_redraws} draws")


def draw_slice(
    p: PencilData,
    dim: int,
    seed: int,
    entry_range: int = DEFAULT_ENTRY_RANGE,
    max_redraws: int = DEFAULT_MAX_REDRAWS,
) -> SliceSpec:
    return _draw_slice(p, dim, random.Random(seed), seed, entry_range, max_redraws)


# ---------------------------------------------------------------------------
# lines


def _prefix_suffix(factors: list, one):
    pre = [one]
    for f in factors:
        pre.append(pre[-1] * f)
    suf = [one]
    for f in reversed(factors):
        suf.append(suf[-1] * f)
    suf.reverse()
    return pre, suf


def log_derivative_numerator(p: PencilData, s: SliceSpec) -> Poly:
    """N(t) = sum_m w_m F_m'(t) prod_{m' != m} F_m'(t), weights (1,...,1,-k)."""
    restricted = restricted_forms(p, s)
    factors = [Poly([c0, c1]) for c0, c1 in restricted]
    pre, suf = _prefix_suffix(factors, Poly([1]))
    out = Poly()
    for m, (w, (_, slope)) in enumerate(zip(p.weights, restricted)):
        out = out + pre[m] * suf[m + 1] * (w * slope)
    return out


def critical_count_line(p: PencilData, s: SliceSpec) -> int:
    if s.dim != 1:
        raise UnsupportedSliceDim("critical_count_line needs a 1-dimensional slice")
    n = log_derivative_numerator(p, s)
    # the t^k terms cancel because the weights sum to zero
    if n.degree != p.k - 1:
        raise CriticalAtInfinity(f"numerator has degree {n.degree}, expected {p.k - 1}")
    polar = Poly([1])
    for c0, c1 in restricted_forms(p, s):
        polar = polar * Poly([c0, c1])
    if gcd_degree(n, polar) > 0:
        raise PolarDegeneracy("a critical-point candidate lies on the polar locus")
    return distinct_root_count(n)


# ---------------------------------------------------------------------------
# planes


@dataclass(frozen=True)
class PlaneSystem:
    """Cleared critical equations on a (sheared) plane slice.

    ``g1`` is the numerator of d/ds log phi.  ``g2`` is the sum of the d/ds
    and d/dt numerators: the d/dt numerator alone never has a pure t^k term,
    since s T_s + t T_t = 0 for the top-degree parts.
    """

    lines: tuple
    g1: BiPoly
    g2: BiPoly
    g_radial: BiPoly


def plane_system(p: PencilData, s: SliceSpec, shear: int = 0) -> PlaneSystem:
    """Restrict to the plane, substituting s -> s + shear * t."""
    lines = tuple(
        (c0, cs, ct + shear * cs) for c0, cs, ct in restricted_forms(p, s)
    )
    factors = [BiPoly.linear(*ln) for ln in lines]
    pre, suf = _prefix_suffix(factors, BiPoly({(0, 0): 1}))
    gs = BiPoly()
    gt = BiPoly()
    gu = BiPoly()
    for m, (w, (c0, cs, ct)) in enumerate(zip(p.weights, lines)):
        others = pre[m] * suf[m + 1]
        gs = gs + others * (w * cs)
        gt = gt + others * (w * ct)
        gu = gu + others * (w * c0)
    return PlaneSystem(lines, gs, gs + gt, gu)


def _top_part(g: BiPoly, degree: int) -> dict:
    return {key: c for key, c in g.terms.items() if sum(key) == degree}


def _common_zero_at_infinity(system: PlaneSystem, k: int) -> bool:
    """True if a genuine critical point sits on the line at infinity.

    At infinity the s- and t-equations both reduce to a common binary form
    U of degree k-1; a true critical point there also kills the radial
    equation, whose top part is V.
    """
    top = _top_part(system.g1, k)
    u_terms = {(i, j - 1): c for (i, j), c in top.items()}
    v_terms = _top_part(system.g_radial, k)
    if not u_terms:
        return True
    u_at_t1 = Poly([u_terms.get((i, k - 1 - i), 0) for i in range(k)])
    v_at_t1 = Poly([v_terms.get((i, k - i), 0) for i in range(k + 1)])
    if u_terms.get((k - 1, 0), 0) == 0 and v_terms.get((k, 0), 0) == 0:
        return True
    if u_at_t1.is_zero() or v_at_t1.is_zero():
        return True
    return gcd_degree(u_at_t1, v_at_t1) > 0


def spurious_points(lines: Sequence[tuple]) -> list[tuple]:
    """All pairwise crossings of the polar lines, deduplicated."""
    points = set()
    for i in range(len(lines)):
        a0, a1, a2 = lines[i]
        for j in range(i + 1, len(lines)):
            b0, b1, b2 = lines[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            points.add((Fraction(a2 * b0 - a0 * b2, det), Fraction(a0 * b1 - a1 * b0, det)))
    return sorted(points)


def _fiber(g: BiPoly, sv: Fraction) -> Poly:
    """den^D * g(sv, t) as an integer polynomial in t."""
    num, den = sv.numerator, sv.denominator
    top = g.degree_in(0)
    out = [0] * (g.degree_in(1) + 1)
    for (i, j), c in g.terms.items():
        out[j] += c * num**i * den ** (top - i)
    return Poly(out)


def critical_count_plane(p: PencilData, s: SliceSpec, shear: int = 0) -> int:
    if s.dim != 2:
        raise UnsupportedSliceDim("critical_count_plane needs a 2-dimensional slice")
    k = p.k
    system = plane_system(p, s, shear)
    if system.g1.terms.get((0, k), 0) == 0:
        raise ShearDegeneracy("no pure t^k term after shear")
    if _common_zero_at_infinity(system, k):
        raise CriticalAtInfinity("a critical point lies on the line at infinity")
    res = resultant_in_second_variable(system.g1, system.g2)
    if res.is_zero():
        raise ResultantIdenticallyZero("critical equations share a component")

    # polar crossings solve the cleared system without being critical points;
    # divide their s-values out of the resultant and check nothing genuine
    # hides in the same fibers
    by_s: dict = {}
    for sv, tv in spurious_points(system.lines):
        by_s.setdefault(sv, []).append(tv)
    genuine = res
    for sv, tvals in by_s.items():
        genuine, mult = strip_rational_root(genuine, sv)
        if mult == 0:
            raise OracleError(f"polar crossing at s = {sv} is not a root of the resultant")
        f1, f2 = _fiber(system.g1, sv), _fiber(system.g2, sv)
        for tv in tvals:
            f1, m1 = strip_rational_root(f1, tv)
            f2, m2 = strip_rational_root(f2, tv)
            if not (m1 and m2):
                raise OracleError(f"polar crossing ({sv}, {tv}) does not solve the system")
        if not coprime(f1, f2):
            raise ShearDegeneracy(f"a genuine critical point shares s = {sv} with a polar crossing")
    return distinct_root_count(genuine)


# ---------------------------------------------------------------------------
# trials


@dataclass(frozen=True)
class OracleResult:
    d1: int
    d2: int | None
    consistent: bool
    counts: CriticalCounts
    full: tuple | None
    seeds: tuple
    line_counts: tuple
    plane_counts: tuple


def _line_trial(p, seed, entry_range, max_redraws) -> int:
    rng = random.Random(seed)
    for _ in range(max_redraws):
        s = _draw_slice(p, 1, rng, seed, entry_range, max_redraws)
        try:
            return critical_count_line(p, s)
        except SliceDegeneracy as exc:
            log.debug("line trial seed=%s redraw: %s", seed, exc)
    raise GenericityFailure(f"line trial seed={seed}: redraw budget exhausted")


def _plane_trial(p, seed, entry_range, max_redraws) -> int:
    rng = random.Random(seed)
    attempts = 0
    while attempts < max_redraws:
        s = _draw_slice(p, 2, rng, seed, entry_range, max_redraws)
        while attempts < max_redraws:
            attempts += 1
            shear = rng.randint(-entry_range, entry_range)
            try:
                return critical_count_plane(p, s, shear)
            except ShearDegeneracy as exc:
                log.debug("plane trial seed=%s reshear: %s", seed, exc)
            except SliceDegeneracy as exc:
                log.debug("plane trial seed=%s redraw: %s", seed, exc)
                break
    raise GenericityFailure(f"plane trial seed={seed}: redraw budget exhausted")


def _majority(values: Sequence[int]) -> int:
    return min(Counter(values).items(), key=lambda kv: (-kv[1], kv[0]))[0]


def trial_seeds(seed: int, trials: int) -> tuple:
    rng = random.Random(seed)
    return tuple(rng.randrange(2**32) for _ in range(trials))


def multidegrees_partial(
    p: PencilData,
    trials: int = DEFAULT_TRIALS,
    seed: int = 42,
    entry_range: int = DEFAULT_ENTRY_RANGE,
    max_redraws: int = DEFAULT_MAX_REDRAWS,
) -> OracleResult:
    """d_1 = a_0 + a_1 and d_2 = a_1 + a_2 from independent slices.

    ``consistent`` is False if trials disagree or a_1 != k - 1; the reported
    counts then come from the majority.  For ambient dimension <= 3 the full
    sequence is returned as well.
    """
    if trials < 3:
        raise ValueError("the oracle needs at least 3 trials")
    ambient = p.source.ambient_dim
    seeds = trial_seeds(seed, trials)
    line_counts = tuple(_line_trial(p, sd, entry_range, max_redraws) for sd in seeds)
    plane_counts: tuple = ()
    if ambient >= 2:
        plane_counts = tuple(_plane_trial(p, sd, entry_range, max_redraws) for sd in seeds)

    a1 = _majority(line_counts)
    consistent = len(set(line_counts)) == 1 and a1 == p.k - 1
    a = {0: 1, 1: a1}
    if plane_counts:
        a[2] = _majority(plane_counts)
        consistent = consistent and len(set(plane_counts)) == 1
    if not consistent:
        log.warning("oracle trials disagree: lines=%s planes=%s", line_counts, plane_counts)

    d1 = a[0] + a[1]
    d2 = a[1] + a[2] if 2 in a else None
    full = None
    if ambient == 1:
        full = (1, d1)
    elif ambient == 2:
        # the plane slice is all of P^2 here, so a_2 was measured directly
        full = (1, d1, d2)
    elif ambient == 3:
        # no critical points on all of P^3 (Euler relation), so d_3 = a_2
        full = (1, d1, d2, a[2])
    return OracleResult(
        d1, d2, consistent, CriticalCounts(a), full, seeds, line_counts, plane_counts
    )
