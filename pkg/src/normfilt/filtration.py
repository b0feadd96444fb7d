"""Filtration analytics over an ideal-arithmetic backend.

Covers: memoized filtration terms (integral-closure powers, ordinary powers,
the J-good chain E_0 = R, E_n = J^{n-1}*closure(I), and user-supplied initial
terms with the J-tail rule), exact length tables, binomial-basis coefficient
fits with a verification window, Sally-module tables, reduction numbers over
a whole window, the Valabrega-Valla membership test, and the degréewise
series identities tying the three graded modules together.

All binomials follow one convention: series_coeff(n, p) is the coefficient of
z^n in (1-z)^(-p). The usual C(n+j, j) is series_coeff(n, j+1); for p = 0 the
coefficient degenerates to the indicator of n = 0, which is exactly what the
length bounds need in dimension 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import HorizonError, PreconditionError
from .linalg import solve_square

KINDS = ("normal", "adic", "jgood", "user")


def series_coeff(n: int, power: int) -> int:
    """Coefficient of z^n in (1-z)^(-power); power must be >= 0."""
    if power < 0:
        raise PreconditionError("negative series power")
    if n < 0:
        return 0
    if power == 0:
        return 1 if n == 0 else 0
    return comb(n + power - 1, power - 1)


def default_window(dim: int) -> int:
    return dim + 2


class Filtration:
    """A descending multiplicative filtration with memoized terms."""

    def __init__(self, backend, kind: str, ideal=None, reduction=None, initial=None):
        if kind not in KINDS:
            raise PreconditionError(f"unknown filtration kind {kind!r}")
        if kind in ("normal", "adic") and ideal is None:
            raise PreconditionError(f"{kind} filtration requires an ideal")
        if kind in ("jgood", "user") and reduction is None:
            raise PreconditionError(f"{kind} filtration requires a reduction ideal")
        if kind == "jgood" and ideal is None:
            raise PreconditionError("jgood filtration requires an ideal")
        if kind == "user":
            if not initial:
                raise PreconditionError("user filtration requires initial terms")
            for a, b in zip(initial, initial[1:]):
                if not backend.contains(a, b):
                    raise PreconditionError("user filtration terms must be descending")
        self.backend = backend
        self.kind = kind
        self.ideal = ideal
        self.reduction = reduction
        self.initial = list(initial) if initial else None
        self._terms = {0: backend.unit()}

    def term(self, n: int):
        if n < 0:
            raise PreconditionError("negative filtration index")
        if n in self._terms:
            return self._terms[n]
        b = self.backend
        if self.kind == "normal":
            t = b.closure_power(self.ideal, n)
        elif self.kind == "adic":
            t = b.power(self.ideal, n)
        elif self.kind == "jgood":
            t = b.closure_power(self.ideal, 1) if n == 1 else b.mul(self.reduction, self.term(n - 1))
        else:
            if n <= len(self.initial):
                t = self.initial[n - 1]
            else:
                t = b.mul(self.reduction, self.term(n - 1))
        self._terms[n] = t
        return t


def length_table(filt: Filtration, nmax: int) -> tuple[int, ...]:
    """values[n] = length of R/F_{n+1} for n = 0..nmax."""
    b = filt.backend
    return tuple(b.colength(filt.term(n + 1)) for n in range(nmax + 1))


def graded_diffs(values) -> tuple[int, ...]:
    """First differences: the graded lengths λ(F_n/F_{n+1}) from colengths."""
    return tuple(v - (values[i - 1] if i else 0) for i, v in enumerate(values))


@dataclass(frozen=True)
class HilbertCoefficients:
    dim: int
    e: tuple[int, ...]
    stable_from: int
    sectional_normal_genus: int | None = None


def fit_polynomial(values, dim: int, window: int) -> tuple[tuple[int, ...], int]:
    """Exact integral fit of values[n] = sum_i (-1)^i c_i C(n+dim-i, dim-i).

    Solves on the trailing dim+1 entries, demands integrality, verifies the
    preceding `window` entries, then scans backwards for the first index from
    which the polynomial matches. Raises HorizonError whenever the table is
    too short or the fit fails, since a longer table could still succeed.
    """
    k = dim + 1
    if window < 1:
        raise PreconditionError("verification window must be positive")
    if len(values) < k + window:
        raise HorizonError(
            f"need at least {k + window} table entries to fit and verify, have {len(values)}"
            " (horizon too small)"
        )
    ns = list(range(len(values) - k, len(values)))
    matrix = [[(-1) ** i * series_coeff(n, dim - i + 1) for i in range(k)] for n in ns]
    sol = solve_square(matrix, [Fraction(values[n]) for n in ns])
    if sol is None or any(c.denominator != 1 for c in sol):
        raise HorizonError("no exact integral fit on the trailing entries (horizon too small)")
    coeffs = tuple(int(c) for c in sol)

    def poly(n):
        return sum((-1) ** i * coeffs[i] * series_coeff(n, dim - i + 1) for i in range(k))

    first_fit = len(values) - k
    for n in range(first_fit - window, first_fit):
        if poly(n) != values[n]:
            raise HorizonError(
                f"fitted polynomial disagrees with the table at degree {n}"
                " inside the verification window (horizon too small)"
            )
    stable_from = first_fit - window
    while stable_from > 0 and poly(stable_from - 1) == values[stable_from - 1]:
        stable_from -= 1
    return coeffs, stable_from


def fit_coefficients(values, dim: int, window: int | None = None, sectional: bool = False) -> HilbertCoefficients:
    """Hilbert coefficients of a colength table; g_s = e1 - e0 + values[0] if sectional."""
    window = default_window(dim) if window is None else window
    coeffs, stable_from = fit_polynomial(values, dim, window)
    if coeffs[0] <= 0:
        raise HorizonError("fitted leading coefficient is not positive (horizon too small)")
    g_s = coeffs[1] - coeffs[0] + values[0] if sectional else None
    return HilbertCoefficients(dim, coeffs, stable_from, g_s)


@dataclass(frozen=True)
class SallyTable:
    values: tuple[int, ...]
    coeffs: tuple[int, ...]
    stable_from: int


def sally_from_tables(normal_values, jgood_values, dim: int, window: int | None = None) -> SallyTable:
    """Sally lengths λ(closure(I^{n+1}) / J^n closure(I)) and their exact fit.

    Both inputs are colength tables indexed by n, so entry n is their
    difference; entry 0 vanishes by construction. The fit lives in dimension
    dim-1, one binomial degree below the ring tables.
    """
    values = tuple(j - n for j, n in zip(jgood_values, normal_values))
    if any(v < 0 for v in values) or values[0] != 0:
        raise PreconditionError("Sally lengths must be nonnegative and start at 0")
    window = default_window(dim) if window is None else window
    coeffs, stable_from = fit_polynomial(values, dim - 1, window)
    return SallyTable(values, coeffs, stable_from)


def reduction_number(filt: Filtration, reduction, nmax: int) -> tuple[int, range]:
    """Least r with F_{n+1} = J*F_n for every n in [r, nmax]; never extrapolated.

    Raises HorizonError when even the top degree fails, since no reduction
    number is certifiable within the horizon.
    """
    b = filt.backend
    r = nmax + 1
    for n in range(nmax, -1, -1):
        if b.equal(filt.term(n + 1), b.mul(reduction, filt.term(n))):
            r = n
        else:
            break
    if r == nmax + 1:
        raise HorizonError(
            f"F_{nmax + 1} != J*F_{nmax}; no reduction number certifiable up to {nmax}"
        )
    return r, range(r, nmax + 1)


@dataclass(frozen=True)
class VVReport:
    certified_cm: bool
    inconclusive: bool
    first_failure: tuple[int, int, str] | None  # (degree, prefix size, witness element)
    checked_upto: int
    required_horizon: int | None


def _witness_element(backend, lhs, rhs) -> str:
    for g in backend.min_gens(lhs):
        if not backend.element_in(rhs, g):
            return backend.element_str(g)
    for g in backend.min_gens(rhs):
        if not backend.element_in(lhs, g):
            return backend.element_str(g)
    raise PreconditionError("ideals differ but no witness generator found")


def valabrega_valla(filt: Filtration, reduction, nmax: int, window: int, rn: int | None) -> VVReport:
    """Valabrega-Valla membership test F_n ∩ (g_1..g_i) = (g_1..g_i)·F_{n-1}.

    Runs over every prefix of the reduction generators and every degree up to
    nmax. A failure is decisive (the associated graded ring is not
    Cohen-Macaulay); full success certifies Cohen-Macaulayness only when the
    horizon comfortably exceeds the certified reduction number.
    """
    b = filt.backend
    gens = b.reduction_gens(reduction)
    prefixes = []
    acc = None
    for g in gens:
        acc = b.principal(g) if acc is None else b.add(acc, b.principal(g))
        prefixes.append(acc)
    for n in range(1, nmax + 1):
        for i, pref in enumerate(prefixes, start=1):
            lhs = b.intersect(filt.term(n), pref)
            rhs = b.mul(pref, filt.term(n - 1))
            if not b.equal(lhs, rhs):
                witness = _witness_element(b, lhs, rhs)
                return VVReport(False, False, (n, i, witness), nmax, None)
    required = rn + window if rn is not None else None
    certified = required is not None and nmax >= required
    return VVReport(certified, not certified, None, nmax, required)


@dataclass(frozen=True)
class SeriesCheck:
    ok: bool
    failures: tuple[tuple[str, int], ...]
    ge: tuple[int, ...]
    gbar: tuple[int, ...]
    sally: tuple[int, ...]
    middle: tuple[int, ...]


def series_checks(normal_values, jgood_values, dim: int, e0: int) -> SeriesCheck:
    """Degreewise identities among the graded modules attached to (I, J).

    With cn[n] = λ(R/closure(I^{n+1})) and cj[n] = λ(R/J^n closure(I)):
      gbar[n]   = λ(closure(I^n)/closure(I^{n+1}))
      ge[n]     = λ(E_n/E_{n+1}) for the J-good chain E_n = J^{n-1} closure(I)
      sally[n]  = λ(closure(I^{n+1})/J^n closure(I))
      middle[n] = λ(closure(I^n)/J^n closure(I))
    Checks, for every degree n:
      series:     sally[n] - sally[n-1] = ge[n] - gbar[n]
      additivity: middle[n] = ge[n] + sally[n-1] = sally[n] + gbar[n]
      closed_form: ge[n] = λ(R/closure(I))·sc(n, d) + (e0 - λ(R/closure(I)))·sc(n-1, d)
    """
    lam = normal_values[0]
    n_count = min(len(normal_values), len(jgood_values))
    gbar = graded_diffs(normal_values[:n_count])
    ge = graded_diffs(jgood_values[:n_count])
    sally = tuple(j - n for j, n in zip(jgood_values[:n_count], normal_values[:n_count]))
    middle = tuple(
        jgood_values[n] - (normal_values[n - 1] if n else 0) for n in range(n_count)
    )
    failures = []
    for n in range(n_count):
        s_prev = sally[n - 1] if n else 0
        if sally[n] - s_prev != ge[n] - gbar[n]:
            failures.append(("series", n))
        if middle[n] != ge[n] + s_prev:
            failures.append(("additivity_e", n))
        if middle[n] != sally[n] + gbar[n]:
            failures.append(("additivity_s", n))
        expected = lam * series_coeff(n, dim) + (e0 - lam) * series_coeff(n - 1, dim)
        if ge[n] != expected:
            failures.append(("jgood_closed_form", n))
    return SeriesCheck(not failures, tuple(failures), ge, gbar, sally, middle)


def intersection_failures(backend, normal_filt: Filtration, jgood_filt: Filtration,
                          reduction, upto: int) -> list[tuple[int, str]]:
    """Degrees n with closure(I^{n+1}) ∩ J^n != J^n closure(I), plus witnesses."""
    out = []
    for n in range(1, upto + 1):
        lhs = backend.intersect(normal_filt.term(n + 1), backend.power(reduction, n))
        rhs = jgood_filt.term(n + 1)
        if not backend.equal(lhs, rhs):
            out.append((n, _witness_element(backend, lhs, rhs)))
    return out
