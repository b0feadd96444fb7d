"""Newton polyhedra of m-primary monomial ideals and integral-closure powers.

The Newton polyhedron NP(I) is the convex hull of the generator exponents plus
the nonnegative orthant. A monomial x^a lies in the integral closure of I^n
exactly when a is in the dilation n*NP(I), so an exact halfspace description
of NP(I) answers every closure query. Supported ambient dimension is 1..4.

Halfspace enumeration is a brute-force exact convex hull: each facet of
NP(I) is spanned by some generators together with coordinate recession
directions, so scanning all such combinations and filtering for supporting
halfspaces with nonnegative normals recovers the facets (plus possibly some
redundant supporting halfspaces, which never change membership answers).

The multiplicity e_0(I) equals d! times the volume of the bounded complement
of NP(I) in the orthant; that volume is computed exactly by enumerating the
vertices of the region's closure inside the pure-power box and triangulating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd, prod

from .errors import NotMPrimary, PreconditionError, UnsupportedDimension
from .linalg import cofactor_normal, det, solve_square
from .monomial import (
    Exponent,
    MonomialIdeal,
    ideal_contains,
    is_m_primary,
    pure_power_exponents,
)

MAX_DIM = 4

Halfspace = tuple[tuple[int, ...], int]  # (normal, threshold): <normal, a> >= threshold


@dataclass(frozen=True)
class NewtonPolyhedron:
    """Halfspace description of NP(I); normals are nonnegative primitive integers."""

    dim: int
    halfspaces: tuple[Halfspace, ...]


@dataclass(frozen=True)
class ReductionCertificate:
    """Outcome of comparing multiplicities of an ideal and a candidate reduction."""

    reduction: object
    e0_ideal: int
    e0_reduction: int
    contained: bool

    @property
    def is_reduction(self) -> bool:
        return self.contained and self.e0_ideal == self.e0_reduction


def _validate(ideal: MonomialIdeal):
    if ideal.dim > MAX_DIM:
        raise UnsupportedDimension(f"dimension {ideal.dim} exceeds supported bound {MAX_DIM}")
    if not is_m_primary(ideal):
        raise NotMPrimary("Newton polyhedron requires a proper m-primary monomial ideal")


def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Exact supporting-halfspace description of conv(generators) + orthant."""
    _validate(ideal)
    d = ideal.dim
    gens = ideal.gens
    units = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    found: set[Halfspace] = set()
    for k in range(1, d + 1):
        for pts in combinations(gens, k):
            base = pts[0]
            point_rows = [tuple(x - y for x, y in zip(p, base)) for p in pts[1:]]
            for dirs in combinations(range(d), d - k):
                rows = point_rows + [units[i] for i in dirs]
                oriented = cofactor_normal(rows, d)
                if oriented is None:
                    continue
                base_value = sum(c * x for c, x in zip(oriented, base))
                for sign in (1, -1):
                    normal = tuple(sign * c for c in oriented)
                    threshold = sign * base_value
                    if any(c < 0 for c in normal) or threshold <= 0:
                        continue
                    if any(
                        sum(c * x for c, x in zip(normal, g)) < threshold for g in gens
                    ):
                        continue
                    g0 = gcd(threshold, *normal)
                    found.add((tuple(c // g0 for c in normal), threshold // g0))
    return NewtonPolyhedron(d, tuple(sorted(found)))


def in_dilation(np_: NewtonPolyhedron, n: int, vector: Exponent) -> bool:
    """Whether the exponent vector lies in the dilation n * NP(I)."""
    if len(vector) != np_.dim:
        raise PreconditionError(f"vector {vector} has wrong length for dimension {np_.dim}")
    if any(x < 0 for x in vector):
        return False
    return all(
        sum(c * x for c, x in zip(normal, vector)) >= n * threshold
        for normal, threshold in np_.halfspaces
    )


def _pure_box(ideal: MonomialIdeal) -> tuple[int, ...]:
    exps = pure_power_exponents(ideal)
    if any(e is None for e in exps):
        raise NotMPrimary("ideal has no pure power in some variable")
    return tuple(int(e) for e in exps)


def closure_power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """Integral closure of I^n as a monomial ideal.

    Minimal generators are the minimal lattice points of n*NP(I); they all lie
    in the box bounded by n times the pure-power exponents of I, because past
    a pure-power bound the coordinate predecessor stays in the dilation.
    """
    if n < 0:
        raise PreconditionError("negative closure power")
    if n == 0:
        return MonomialIdeal(ideal.dim, ((0,) * ideal.dim,))
    np_ = newton_polyhedron(ideal)
    d = ideal.dim
    bounds = tuple(n * b + 1 for b in _pure_box(ideal))
    strides = [0] * d
    s = 1
    for i in range(d - 1, -1, -1):
        strides[i] = s
        s *= bounds[i]
    total = prod(bounds)
    member = bytearray(total)
    coords = [0] * d
    for idx in range(total):
        member[idx] = 1 if in_dilation(np_, n, tuple(coords)) else 0
        for i in range(d - 1, -1, -1):
            coords[i] += 1
            if coords[i] < bounds[i]:
                break
            coords[i] = 0
    mins: list[Exponent] = []
    coords = [0] * d
    for idx in range(total):
        if member[idx] and all(
            coords[i] == 0 or not member[idx - strides[i]] for i in range(d)
        ):
            mins.append(tuple(coords))
        for i in range(d - 1, -1, -1):
            coords[i] += 1
            if coords[i] < bounds[i]:
                break
            coords[i] = 0
    return MonomialIdeal(d, tuple(sorted(mins)))


def _polytope_vertices(halfspaces: list[tuple[tuple, Fraction]], d: int) -> list[tuple]:
    """All vertices of the polytope cut out by <c,a> >= t constraints."""
    verts = set()
    for combo in combinations(halfspaces, d):
        solution = solve_square([c for c, _ in combo], [t for _, t in combo])
        if solution is None:
            continue
        if all(
            sum(c * x for c, x in zip(normal, solution)) >= t for normal, t in halfspaces
        ):
            verts.add(solution)
    return sorted(verts)


def _polytope_volume(halfspaces: list[tuple[tuple, Fraction]], d: int) -> Fraction:
    """Exact volume by recursive triangulation of the boundary.

    Faces are identified by the vertex sets on which a constraint is tight;
    coning each face from a vertex outside it yields simplices whose
    determinants sum to the volume (degenerate cones contribute zero).
    """
    vertices = _polytope_vertices(halfspaces, d)
    if len(vertices) <= d:
        return Fraction(0)
    tight = {
        v: frozenset(
            i
            for i, (normal, t) in enumerate(halfspaces)
            if sum(c * x for c, x in zip(normal, v)) == t
        )
        for v in vertices
    }
    cache: dict[frozenset, list[tuple]] = {}

    def chains(face: frozenset) -> list[tuple]:
        if len(face) == 1:
            return [(next(iter(face)),)]
        if face in cache:
            return cache[face]
        v0 = min(face)
        out = []
        seen = set()
        for i in range(len(halfspaces)):
            if i in tight[v0]:
                continue
            sub = frozenset(v for v in face if i in tight[v])
            if not sub or sub in seen:
                continue
            seen.add(sub)
            for chain in chains(sub):
                out.append((v0,) + chain)
        cache[face] = out
        return out

    total = Fraction(0)
    for chain in chains(frozenset(vertices)):
        if len(chain) != d + 1:
            continue
        rows = [[x - y for x, y in zip(p, chain[0])] for p in chain[1:]]
        total += abs(det(rows))
    return total / factorial(d)


def covolume(ideal: MonomialIdeal) -> Fraction:
    """Volume of the bounded region of the orthant outside NP(I)."""
    np_ = newton_polyhedron(ideal)
    d = ideal.dim
    box = _pure_box(ideal)
    constraints: list[tuple[tuple, Fraction]] = [
        (tuple(Fraction(x) for x in normal), Fraction(t)) for normal, t in np_.halfspaces
    ]
    for i in range(d):
        e = tuple(Fraction(1 if j == i else 0) for j in range(d))
        constraints.append((e, Fraction(0)))
        constraints.append((tuple(-x for x in e), Fraction(-box[i])))
    inner = _polytope_volume(constraints, d)
    return Fraction(prod(box)) - inner


def multiplicity(ideal: MonomialIdeal) -> int:
    """Hilbert-Samuel multiplicity e_0(I) = d! * covolume(NP(I)); always an integer."""
    value = covolume(ideal) * factorial(ideal.dim)
    if value.denominator != 1 or value <= 0:
        raise PreconditionError(f"multiplicity computation returned non-integer {value}")
    return int(value)


def certify_reduction(ideal: MonomialIdeal, reduction: MonomialIdeal) -> ReductionCertificate:
    """Compare multiplicities: a contained parameter ideal with equal e_0 is a reduction."""
    _validate(ideal)
    _validate(reduction)
    return ReductionCertificate(
        reduction=reduction,
        e0_ideal=multiplicity(ideal),
        e0_reduction=multiplicity(reduction),
        contained=ideal_contains(ideal, reduction),
    )


def find_monomial_reduction(ideal: MonomialIdeal) -> ReductionCertificate | None:
    """The pure-power parameter ideal (x_i^{a_i}) when it is a reduction, else None.

    a_i is the least exponent with x_i^{a_i} in the ideal. Not every m-primary
    monomial ideal admits a monomial reduction; None reports that this
    candidate (the only monomial one) fails the multiplicity test.
    """
    _validate(ideal)
    box = _pure_box(ideal)
    d = ideal.dim
    gens = tuple(
        sorted(tuple(box[i] if j == i else 0 for j in range(d)) for i in range(d))
    )
    cert = certify_reduction(ideal, MonomialIdeal(d, gens))
    return cert if cert.is_reduction else None
