"""Exact arithmetic on monomial ideals of a polynomial ring k[x_1..x_d].

An ideal is stored through its unique minimal monomial generators, i.e. the
antichain of exponent vectors under componentwise divisibility. Lengths of
finite quotients are computed by lattice-point enumeration inside the box cut
out by the pure-power generators, so every reported number is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import DimensionMismatch, InfiniteLength, PreconditionError

Exponent = tuple[int, ...]


def _check_vector(v: Exponent, dim: int) -> Exponent:
    v = tuple(int(x) for x in v)
    if len(v) != dim:
        raise DimensionMismatch(f"exponent vector {v} does not have length {dim}")
    if any(x < 0 for x in v):
        raise PreconditionError(f"negative exponent in {v}")
    return v


def divides(a: Exponent, b: Exponent) -> bool:
    """Whether x^a divides x^b, i.e. a <= b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def _minimalize(cands) -> tuple[Exponent, ...]:
    """Reduce a generating set to the divisibility antichain of its minima."""
    by_degree = sorted(set(cands), key=lambda a: (sum(a), a))
    kept: list[Exponent] = []
    for a in by_degree:
        deg = sum(a)
        dominated = False
        for g in kept:
            if sum(g) == deg:
                break  # equal-degree distinct vectors are incomparable
            if divides(g, a):
                dominated = True
                break
        if not dominated:
            kept.append(a)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, canonically represented by sorted minimal generators."""

    dim: int
    gens: tuple[Exponent, ...]

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.dim:
                raise DimensionMismatch(f"generator {g} does not have length {self.dim}")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return multiply(self, other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)


def minimal_generators(dim: int, raw) -> MonomialIdeal:
    """Build an ideal from any generating set, minimalizing it."""
    vectors = [_check_vector(v, dim) for v in raw]
    return MonomialIdeal(dim, _minimalize(vectors))


def zero_ideal(dim: int) -> MonomialIdeal:
    return MonomialIdeal(dim, ())


def unit_ideal(dim: int) -> MonomialIdeal:
    return MonomialIdeal(dim, ((0,) * dim,))


def maximal_ideal(dim: int) -> MonomialIdeal:
    gens = tuple(tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim))
    return MonomialIdeal(dim, tuple(sorted(gens)))


def _check_same_dim(a: MonomialIdeal, b: MonomialIdeal):
    if a.dim != b.dim:
        raise DimensionMismatch(f"ideals live in dimensions {a.dim} and {b.dim}")


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(a, b)
    cands = [tuple(x + y for x, y in zip(u, v)) for u in a.gens for v in b.gens]
    return MonomialIdeal(a.dim, _minimalize(cands))


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(a, b)
    return MonomialIdeal(a.dim, _minimalize(a.gens + b.gens))


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(a, b)
    cands = [tuple(max(x, y) for x, y in zip(u, v)) for u in a.gens for v in b.gens]
    return MonomialIdeal(a.dim, _minimalize(cands))


def colon(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The ideal quotient (a : b)."""
    _check_same_dim(a, b)
    if b.is_zero:
        raise PreconditionError("colon by the zero ideal")
    if a.is_zero:
        return a
    result = None
    for v in b.gens:
        shifted = MonomialIdeal(
            a.dim, _minimalize(tuple(max(x - y, 0) for x, y in zip(u, v)) for u in a.gens)
        )
        result = shifted if result is None else intersect(result, shifted)
    return result


def power(a: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise PreconditionError("negative ideal power")
    result = unit_ideal(a.dim)
    for _ in range(n):
        result = multiply(result, a)
    return result


def contains(a: MonomialIdeal, v: Exponent) -> bool:
    """Whether the monomial x^v lies in the ideal a."""
    v = _check_vector(v, a.dim)
    return any(divides(g, v) for g in a.gens)


def ideal_contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Whether b is a subideal of a."""
    _check_same_dim(a, b)
    return all(contains(a, g) for g in b.gens)


def pure_power_exponents(a: MonomialIdeal) -> list[int | None]:
    """For each variable, the least e with x_i^e among the generators (None if absent)."""
    out: list[int | None] = [None] * a.dim
    for g in a.gens:
        support = [i for i, x in enumerate(g) if x]
        if len(support) == 1:
            i = support[0]
            if out[i] is None or g[i] < out[i]:
                out[i] = g[i]
        elif not support:  # unit ideal
            return [0] * a.dim
    return out


def is_m_primary(a: MonomialIdeal) -> bool:
    """Proper and containing a pure power of each variable."""
    if a.is_zero or a.is_unit:
        return False
    return all(e is not None for e in pure_power_exponents(a))


def _membership_grid(ideal: MonomialIdeal, bounds: tuple[int, ...]) -> bytearray:
    """Indicator of ideal membership on the box prod([0, bounds_i)), mixed-radix order.

    Upward closure gives the recurrence: a point is in the ideal iff it is a
    generator or some coordinate predecessor already is.
    """
    dim = ideal.dim
    total = prod(bounds)
    grid = bytearray(total)
    if total == 0:
        return grid
    strides = [0] * dim
    s = 1
    for i in range(dim - 1, -1, -1):
        strides[i] = s
        s *= bounds[i]
    genset = {g for g in ideal.gens if all(x < b for x, b in zip(g, bounds))}
    coords = [0] * dim
    for idx in range(total):
        inside = tuple(coords) in genset
        if not inside:
            for i in range(dim):
                if coords[i] > 0 and grid[idx - strides[i]]:
                    inside = True
                    break
        grid[idx] = 1 if inside else 0
        for i in range(dim - 1, -1, -1):  # odometer increment
            coords[i] += 1
            if coords[i] < bounds[i]:
                break
            coords[i] = 0
    return grid


def quotient_length(a: MonomialIdeal, b: MonomialIdeal) -> int:
    """Length of a/b as a k-vector space, i.e. the number of monomials in a but not b.

    Requires b to be a subideal of a and to contain a pure power of each
    variable; every monomial of a outside the pure-power box already lies in b,
    so counting inside the box is exhaustive.
    """
    _check_same_dim(a, b)
    if not ideal_contains(a, b):
        raise PreconditionError("quotient_length: second ideal is not contained in the first")
    if b.is_zero:
        if a.is_zero:
            return 0
        raise InfiniteLength("quotient by the zero ideal has infinite length")
    exps = pure_power_exponents(b)
    if any(e is None for e in exps):
        missing = [i for i, e in enumerate(exps) if e is None]
        raise InfiniteLength(
            f"infinite length: subideal has no pure power in variable(s) {missing}"
        )
    bounds = tuple(int(e) for e in exps)
    grid_a = _membership_grid(a, bounds)
    grid_b = _membership_grid(b, bounds)
    return sum(1 for x, y in zip(grid_a, grid_b) if x and not y)


def colength(b: MonomialIdeal) -> int:
    """Length of R/b."""
    return quotient_length(unit_ideal(b.dim), b)
