"""Multidegrees of the Gauss map of an arrangement's pencil, by deletion-restriction.

For a single hyperplane in C^{n+1} the sequence is (1, 1, 0, ..., 0).  For
k >= 2 hyperplanes, with A* = A - H and A** = A*|_H,

    d_i(A) = d_i(A*) + d_{i-1}(A**),    i = 1..n+1,  d_0 = 1.

The recursion runs on an explicit stack with a memo keyed on the canonical
arrangement, so deep recursions never touch the interpreter call stack.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .core import Arrangement, delete, restrict
from .exact import Poly

PivotRule = Callable[[Arrangement], int]


class EmptyArrangement(ValueError):
    pass


class SignPatternViolation(ValueError):
    pass


@dataclass(frozen=True)
class MultidegreeSequence:
    values: tuple
    ambient_dim: int

    def __post_init__(self):
        if len(self.values) != self.ambient_dim + 1:
            raise ValueError("a sequence for C^{n+1} has n+2 entries")

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def last_pivot(a: Arrangement) -> int:
    return a.k - 1


def first_pivot(a: Arrangement) -> int:
    return 0


def random_pivot(seed: int) -> PivotRule:
    rng = random.Random(seed)
    return lambda a: rng.randrange(a.k)


def _base(a: Arrangement) -> tuple:
    return (1, 1) + (0,) * (a.ambient_dim - 1)


def multidegrees_dr(
    a: Arrangement,
    pivot: PivotRule = last_pivot,
    memo: dict | None = None,
) -> MultidegreeSequence:
    if a.k == 0:
        raise EmptyArrangement("multidegrees need at least one hyperplane")
    if memo is None:
        memo = {}
    # each stack entry: (arrangement, children or None)
    stack: list = [(a, None)]
    while stack:
        node, children = stack.pop()
        if node in memo:
            continue
        if node.k == 1:
            memo.setdefault(node, _base(node))
            continue
        if children is None:
            h = pivot(node)
            children = (delete(node, h), restrict(node, h))
            stack.append((node, children))
            stack.extend((c, None) for c in children if c not in memo)
            continue
        star, star2 = memo[children[0]], memo[children[1]]
        values = (1,) + tuple(star[i] + star2[i - 1] for i in range(1, node.ambient_dim + 1))
        memo.setdefault(node, values)
    return MultidegreeSequence(memo[a], a.ambient_dim)


def char_poly_from_multidegrees(d: MultidegreeSequence) -> Poly:
    """d_0 t^{n+1} - d_1 t^n + ... + (-1)^{n+1} d_{n+1}."""
    top = d.ambient_dim
    coeffs = [0] * (top + 1)
    for i, di in enumerate(d.values):
        coeffs[top - i] = -di if i % 2 else di
    return Poly(coeffs)


def multidegrees_from_char_poly(p: Poly) -> MultidegreeSequence:
    if p.is_zero() or p.degree < 1 or p.lc != 1:
        raise SignPatternViolation(f"expected a monic polynomial of degree >= 1, got {p}")
    top = p.degree
    values = []
    for i in range(top + 1):
        c = p[top - i]
        if c != int(c):
            raise SignPatternViolation(f"non-integer coefficient {c}")
        if c * (-1) ** i < 0:
            raise SignPatternViolation(f"coefficient of t^{top - i} has the wrong sign: {c}")
        values.append(abs(int(c)))
    nonzero = [i for i, v in enumerate(values) if v]
    if any(values[m] == 0 for m in range(nonzero[0], nonzero[-1] + 1)):
        raise SignPatternViolation(f"internal zero in coefficients of {p}")
    return MultidegreeSequence(tuple(values), top)
