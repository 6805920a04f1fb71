"""Symbolic character polynomials for multi-rectangular shapes.

For the staircase shape with p_i parts of size q_i the normalized character on
the class (k, 1, 1, ...) is a polynomial F_k in the p's and q's.  This module
builds F_k by substituting the symbolic free cumulants of the shape into the
universal character polynomial Sigma_k, exposes the generating series attached
to the shape (moment series, reciprocal-moment series phi, top-degree series,
C-series), degree-slice extraction, the closed product form for phi with q
negated, and the positivity report for (-1)^k F_k(p; -q).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import (MultiPoly, Rational, TruncSeries, exact_solve,
                      geometric_series, linear_series, ratio, render_poly)
from .characters import normalized_character
from .kerov import (c_monomial, graded_component, kerov_polynomial, rvar,
                    gamma_report, index_weights)
from .partitions import MultiRect, Partition, expand_shape


def shape_vars(m: int) -> tuple[str, ...]:
    return tuple(f"p{i}" for i in range(1, m + 1)) + tuple(f"q{i}" for i in range(1, m + 1))


M2_ALIASES = {"p1": "a", "p2": "p", "q1": "b", "q2": "q"}


def display_precedence(m: int) -> tuple[str, ...]:
    """Interleaved order p1, q1, p2, q2, ... used for text output."""
    out = []
    for i in range(1, m + 1):
        out.append(f"p{i}")
        out.append(f"q{i}")
    return tuple(out)


def render_shape_poly(poly: MultiPoly, m: int) -> str:
    aliases = M2_ALIASES if m == 2 else None
    return render_poly(poly, precedence=display_precedence(m), aliases=aliases)


@dataclass(frozen=True)
class ShapeRing:
    """The polynomial ring in p_1..p_m, q_1..q_m for one staircase width m."""

    m: int
    negated_q: bool = False

    @property
    def vars(self) -> tuple[str, ...]:
        return shape_vars(self.m)

    def p(self, i: int) -> MultiPoly:
        return MultiPoly.var(self.vars, f"p{i}")

    def q(self, i: int) -> MultiPoly:
        sign = -1 if self.negated_q else 1
        return MultiPoly.var(self.vars, f"q{i}") * sign

    def prefix(self, i: int) -> MultiPoly:
        """r_i = p_1 + ... + p_i (r_0 = 0)."""
        total = MultiPoly.zero(self.vars)
        for j in range(1, i + 1):
            total = total + self.p(j)
        return total

    def suffix(self, i: int) -> MultiPoly:
        """s_i = p_i + ... + p_m (s_{m+1} = 0)."""
        total = MultiPoly.zero(self.vars)
        for j in range(i, self.m + 1):
            total = total + self.p(j)
        return total


def flip_q_signs(poly: MultiPoly, m: int) -> MultiPoly:
    """Substitute q_i -> -q_i. Just flips the sign of odd q-degree terms."""
    vars = poly.vars
    qpos = [idx for idx, v in enumerate(vars) if v.startswith("q")]
    out = {}
    for e, c in poly.terms.items():
        qdeg = sum(e[i] for i in qpos)
        out[e] = -c if qdeg % 2 else c
    return MultiPoly(vars, out)


def negate_q(f: MultiPoly, sign_k: int) -> MultiPoly:
    """(-1)^sign_k * f with every q_i replaced by -q_i."""
    m = sum(1 for v in f.vars if v.startswith("q"))
    flipped = flip_q_signs(f, m)
    return -flipped if sign_k % 2 else flipped


def flip_z_sign(series: TruncSeries) -> TruncSeries:
    """z -> -z."""
    return TruncSeries(series.vars, series.order,
                       [c if j % 2 == 0 else -c for j, c in enumerate(series.coeffs)])


# -- the shape series ------------------------------------------------------


@lru_cache(maxsize=None)
def phi_series(m: int, N: int, negated: bool = False) -> TruncSeries:
    """phi(z) = (1 + sum_j p_j z) prod_i (1 - (q_i - r_{i-1}) z)
                / prod_i (1 - (q_i - r_i) z), truncated at order N."""
    ring = ShapeRing(m, negated)
    vars = ring.vars
    num = TruncSeries.from_coeffs(vars, [MultiPoly.const(vars, 1), ring.prefix(m)], N)
    for i in range(1, m + 1):
        num = num * linear_series(vars, ring.q(i) - ring.prefix(i - 1), N)
    for i in range(1, m + 1):
        num = num * geometric_series(vars, ring.q(i) - ring.prefix(i), N)
    return num


@lru_cache(maxsize=None)
def h_series(m: int, N: int) -> TruncSeries:
    """The moment series H evaluated at 1/z, as a power series in z:
    z prod_i (1 - (q_i - r_i) z) / ((1 + sum p_j z) prod_i (1 - (q_i - r_{i-1}) z))."""
    if N < 1:
        raise ValueError("need N >= 1")
    ring = ShapeRing(m)
    vars = ring.vars
    body = TruncSeries.constant(vars, 1, N - 1)
    for i in range(1, m + 1):
        body = body * linear_series(vars, ring.q(i) - ring.prefix(i), N - 1)
    den = TruncSeries.from_coeffs(vars, [MultiPoly.const(vars, 1), ring.prefix(m)], N - 1)
    for i in range(1, m + 1):
        den = den * linear_series(vars, ring.q(i) - ring.prefix(i - 1), N - 1)
    return (body * den.reciprocal()).shift_up()


@lru_cache(maxsize=None)
def _phi_powers(m: int, N: int, negated: bool = False) -> list[TruncSeries]:
    """[phi^1, phi^2, ..., phi^N] truncated at order N."""
    phi = phi_series(m, N, negated)
    powers = [phi]
    for _ in range(N - 1):
        powers.append(powers[-1] * phi)
    return powers


@lru_cache(maxsize=None)
def _cumulant_table(m: int, K: int) -> dict[int, MultiPoly]:
    """Symbolic free cumulants R_2..R_K of the shape: R_k = -(1/(k-1)) [y^k] phi^{k-1}."""
    powers = _phi_powers(m, K)
    table: dict[int, MultiPoly] = {}
    for k in range(2, K + 1):
        poly = powers[k - 2].coeff(k) * Fraction(-1, k - 1)
        for e in poly.terms:
            if sum(e) != k:
                raise ArithmeticError(f"R_{k} of the shape is not homogeneous of degree {k}")
        table[k] = poly
    return table


def extract_cumulant(k: int, m: int) -> MultiPoly:
    """R_k of the shape as a homogeneous degree-k polynomial in p's and q's."""
    if k < 2:
        raise ValueError("free cumulants start at R_2")
    return _cumulant_table(m, k)[k]


@lru_cache(maxsize=None)
def stanley_polynomial(k: int, m: int) -> MultiPoly:
    """F_k(p; q): Sigma_k with each R_i evaluated at the shape."""
    table = _cumulant_table(m, k + 1)
    sigma = kerov_polynomial(k).body
    return sigma.substitute(
        {rvar(i): table[i] for i in range(2, k + 2)}).in_ring(shape_vars(m))


def _ratio_series(psi: TruncSeries, N: int) -> TruncSeries:
    """S = z / B where B is the compositional inverse of z / psi(z); that is,
    B = z psi(B).  S_0 = 1, S_1 = -[y] psi, S_n = -(1/(n-1)) [y^n] psi^{n-1}."""
    if psi.coeffs[0] != 1:
        raise ValueError("psi must have constant term 1")
    coeffs = [MultiPoly.const(psi.vars, 1), -psi.coeff(1)]
    power = psi
    for n in range(2, N + 1):
        coeffs.append(power.coeff(n) * Fraction(-1, n - 1))
        if n < N:
            power = power * psi
    return TruncSeries.from_coeffs(psi.vars, coeffs, N)


@lru_cache(maxsize=None)
def cumulant_series(m: int, N: int) -> TruncSeries:
    """sum_k R_k(shape) z^k with constant term 1 (the linear term vanishes)."""
    return _ratio_series(phi_series(m, N), N)


@lru_cache(maxsize=None)
def g_series_direct(m: int, N: int) -> TruncSeries:
    """Generating series 1 + sum_{i>=1} G_{i-1} z^i of the top-degree parts,
    via Lagrange inversion of z prod(1 - (q_i + s_{i+1}) z) / prod(1 - (q_i + s_i) z)."""
    ring = ShapeRing(m)
    vars = ring.vars
    psi = TruncSeries.constant(vars, 1, N)
    for i in range(1, m + 1):
        psi = psi * linear_series(vars, ring.q(i) + ring.suffix(i), N)
    for i in range(1, m + 1):
        psi = psi * geometric_series(vars, ring.q(i) + ring.suffix(i + 1), N)
    return _ratio_series(psi, N)


def verify_g_equals_r(m: int, N: int):
    """Check R-series == G-series - sum(p_i) z coefficient-wise to order N.

    Returns (True, None), or (False, first differing index) on failure.
    """
    ring = ShapeRing(m)
    r = cumulant_series(m, N)
    g = g_series_direct(m, N)
    expected_linear = g.coeff(1) - ring.prefix(m)
    if r.coeff(1) != expected_linear:
        return False, 1
    for j in range(0, N + 1):
        if j == 1:
            continue
        if r.coeff(j) != g.coeff(j):
            return False, j
    return True, None


@lru_cache(maxsize=None)
def phi_negated_product(m: int, N: int) -> TruncSeries:
    """Closed product form of phi with q negated and z negated:
    prod_i (1 + p_i q_i z^2 / ((1 - r_{i-1} z)(1 - (q_i + r_i) z)))."""
    ring = ShapeRing(m)
    vars = ring.vars
    out = TruncSeries.constant(vars, 1, N)
    one = TruncSeries.constant(vars, 1, N)
    z2 = TruncSeries.z(vars, N).pow(2)
    for i in range(1, m + 1):
        denom = geometric_series(vars, ring.prefix(i - 1), N) \
            * geometric_series(vars, ring.q(i) + ring.prefix(i), N)
        factor = one + z2 * denom.scale(ring.p(i) * ring.q(i))
        out = out * factor
    return out


def phi_negated_direct(m: int, N: int) -> TruncSeries:
    """phi(-z) with q -> -q obtained straight from the phi series."""
    return flip_z_sign(phi_series(m, N, negated=True))


def degree_km1_terms(k: int, m: int) -> MultiPoly:
    """The degree-(k-1) slice of F_k, as -(k(k+1)/24) [y^{k-3}] phi'' phi^{k-1}."""
    if k < 3:
        raise ValueError("need k >= 3")
    powers = _phi_powers(m, k)
    second = phi_series(m, k).derivative().derivative()
    prod = second * powers[k - 2]
    return prod.coeff(k - 3) * Fraction(-k * (k + 1), 24)


@lru_cache(maxsize=None)
def c_series_of_shape(m: int, N: int) -> TruncSeries:
    """sum_j C_j(shape) z^j, computed two ways and cross-checked:
    (a) phi(w) - w phi'(w) at w = z phi(w); (b) per-coefficient Lagrange
    extraction [z^j] = -(1/j) [y^{j-2}] phi'' phi^j."""
    vars = shape_vars(m)
    big = N + 2
    phi = phi_series(m, big)
    w = TruncSeries.z(vars, big)
    for _ in range(big - 1):
        w = phi.compose(w).shift_up().truncate(big)
    route_a = (phi.compose(w) - w * phi.derivative().compose(w.truncate(big - 1))).truncate(N)
    powers = _phi_powers(m, N + 2)
    second = phi_series(m, N + 2).derivative().derivative()
    coeffs = [MultiPoly.const(vars, 1), MultiPoly.zero(vars)]
    for j in range(2, N + 1):
        coeffs.append((second * powers[j - 1]).coeff(j - 2) * Fraction(-1, j))
    route_b = TruncSeries.from_coeffs(vars, coeffs, N)
    if not route_a.matches(route_b):
        raise ArithmeticError("the two C-series routes disagree")
    return route_b


def c_shape_value(j: int, m: int) -> MultiPoly:
    """C_j evaluated at the symbolic cumulants of the shape."""
    if j == 0:
        return MultiPoly.const(shape_vars(m), 1)
    table = _cumulant_table(m, max(j, 2))
    return c_monomial(j, max(j, 2)).substitute(
        {rvar(i): table[i] for i in range(2, max(j, 2) + 1)}).in_ring(shape_vars(m))


# -- the Elizalde tabulation for the top-degree terms ----------------------


def _binom(n: int, k: int) -> int:
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < 0:
        return 0
    return comb(n, k)


def _multichoose(n: int, k: int) -> int:
    return _binom(n + k - 1, k)


def _compositions(total: int, length: int):
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, length - 1):
            yield (first,) + rest


def elizalde_formula(k: int, m: int, corrected: bool = True) -> MultiPoly:
    """The tabulated double sum for the top-degree terms of (-1)^k F_k(p; -q).

    corrected=False keeps the monomial exponents of the q's tied to the i's
    (as the display reads); corrected=True uses the j's, the minimal fix.  The
    inner binomial's "i_i" is read as i_1 in both variants (no other reading
    parses).
    """
    vars = shape_vars(m)
    terms: dict[tuple[int, ...], Fraction] = {}
    for combo in _compositions(k + 1, 2 * m):
        i = combo[:m]
        j = combo[m:]
        coef = Fraction(_binom(k, i[0]) * _multichoose(i[0], j[0]), k)
        if not coef:
            continue
        for s in range(2, m + 1):
            used = sum(i[: s - 1]) + sum(j[: s - 1])
            inner = 0
            for r in range(0, min(i[s - 1], j[s - 1]) + 1):
                inner += (_binom(k, r) * _multichoose(r, j[s - 1] - r)
                          * _binom(k - r - used, i[s - 1] - r))
            coef *= inner
            if not coef:
                break
        if not coef:
            continue
        qexp = j if corrected else i
        exp = tuple(i) + tuple(qexp)
        terms[exp] = terms.get(exp, Fraction(0)) + coef
    return MultiPoly(vars, terms)


def elizalde_report(k: int, m: int) -> dict:
    """Compare both readings of the tabulated formula against the top-degree
    terms of (-1)^k F_k(p; -q) taken from the generating series."""
    target = negate_q(g_series_direct(m, k + 1).coeff(k + 1), k)
    result = {"k": k, "m": m}
    for label, corrected in (("as_printed", False), ("corrected", True)):
        candidate = elizalde_formula(k, m, corrected)
        diff = candidate - target
        result[label] = {
            "matches": diff.is_zero(),
            "differing_monomials": len(diff.terms),
        }
    return result


# -- the positivity report --------------------------------------------------


@dataclass
class CheckResult:
    name: str
    positive: bool
    consistent: bool = True
    witness: str | None = None
    monomials: int = 0
    min_coeff: Rational | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.positive and self.consistent


def _positivity_result(name: str, poly: MultiPoly, m: int,
                       consistent: bool = True, detail: str = "") -> CheckResult:
    ok, raw = poly.is_positive()
    witness = None
    if not ok:
        coef, exp = raw
        witness = f"{coef} * {render_shape_poly(MultiPoly(poly.vars, {exp: 1}), m)}"
    coeffs = list(poly.terms.values())
    return CheckResult(name=name, positive=ok, consistent=consistent,
                       witness=witness, monomials=len(coeffs),
                       min_coeff=min(coeffs, default=None), detail=detail)


@dataclass
class PositivityRow:
    k: int
    m: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)


def positivity_row(k: int, m: int, degrees: str = "all") -> PositivityRow:
    """All positivity findings for one k: full expansion, top degree, degree
    k-1 and k-3 slices (each cross-checked against its independent route), and
    the graded C-expansion with its gamma coefficients."""
    row = PositivityRow(k, m)
    neg = negate_q(stanley_polynomial(k, m), k)
    slices = neg.grade_split()

    if degrees in ("all", "full"):
        row.checks.append(_positivity_result("full", neg, m))

    if degrees in ("all", "top"):
        top_slice = slices.get(k + 1, MultiPoly.zero(neg.vars))
        via_cumulant = negate_q(extract_cumulant(k + 1, m), k)
        row.checks.append(_positivity_result(
            "top", top_slice, m, consistent=top_slice == via_cumulant,
            detail="degree k+1 slice vs top free cumulant"))

    if degrees in ("all", "k-1") and k >= 3:
        second_slice = slices.get(k - 1, MultiPoly.zero(neg.vars))
        via_series = negate_q(degree_km1_terms(k, m), k)
        c_route = c_series_of_shape(m, k - 1).coeff(k - 1)
        scale = Fraction(comb(k + 1, 3), 4)
        row.checks.append(_positivity_result(
            "k-1", second_slice, m,
            consistent=(second_slice == via_series
                        and second_slice == negate_q(c_route * scale, k)),
            detail="degree k-1 slice vs second-derivative route and C-series route"))

    if degrees in ("all", "k-3") and k >= 5:
        third_slice = slices.get(k - 3, MultiPoly.zero(neg.vars))
        gammas = gamma_report(k).get(2)
        consistent = True
        if gammas is not None:
            rebuilt = _rebuild_slice(gammas, 2, m)
            consistent = rebuilt == third_slice
        row.checks.append(_positivity_result(
            "k-3", third_slice, m, consistent=consistent,
            detail="degree k-3 slice vs gamma C-expansion"))

    if degrees == "all":
        ok = True
        details = []
        for n, gpoly in gamma_report(k).items():
            if gpoly.is_zero():
                continue
            gamma_positive = gpoly.is_positive()[0]
            rebuilt = _rebuild_slice(gpoly, n, m)
            want = slices.get(k + 1 - 2 * n, MultiPoly.zero(neg.vars))
            ok = ok and gamma_positive and rebuilt == want
            details.append(f"2n={2 * n}: gammas {'positive' if gamma_positive else 'NOT positive'}")
        row.checks.append(CheckResult(
            name="gamma", positive=ok, consistent=ok,
            detail="; ".join(details) or "no lower-weight pieces"))
    return row


def _rebuild_slice(gamma_poly: MultiPoly, n: int, m: int) -> MultiPoly:
    """Rebuild a degree slice of (-1)^k F_k(p;-q) from its C-expansion:

        sum over 2n-1 tuples of gamma * prod (-1)^{i_t - 1} C_{i_t}(p;-q),

    where a monomial with f explicit factors is padded with 2n-1-f slots of
    C_0 = 1, each contributing a factor (-1)^{0-1} = -1.
    """
    vars = shape_vars(m)
    total = MultiPoly.zero(vars)
    slots = 2 * n - 1
    for exp, gamma in gamma_poly.terms.items():
        factors = sum(exp)
        sign = -1 if (slots - factors) % 2 else 1
        piece = MultiPoly.const(vars, gamma * sign)
        for name, e in zip(gamma_poly.vars, exp):
            if not e:
                continue
            j = int(name[1:])
            cj = negate_q(c_shape_value(j, m), j - 1)
            piece = piece * cj ** e
        total = total + piece
    return total


def positivity_report(k_max: int, m: int, degrees: str = "all") -> list[PositivityRow]:
    return [positivity_row(k, m, degrees) for k in range(1, k_max + 1)]


# -- the interpolation oracle ------------------------------------------------


def _interp_coeffs(xs: list[int], ys: list[Rational]) -> list[Rational]:
    """Exact coefficients of the unique polynomial through (xs, ys)."""
    rows = [[Fraction(x) ** j for j in range(len(xs))] for x in xs]
    return exact_solve(rows, ys)


def _tensor_interpolate(values: dict[tuple[int, ...], Rational],
                        grids: list[list[int]]) -> dict[tuple[int, ...], Rational]:
    axes = len(grids)
    for axis in range(axes):
        xs = grids[axis]
        grouped: dict[tuple[int, ...], list[Rational]] = {}
        for idx, val in values.items():
            rest = idx[:axis] + idx[axis + 1:]
            grouped.setdefault(rest, [None] * len(xs))[idx[axis]] = val
        new_values: dict[tuple[int, ...], Rational] = {}
        for rest, column in grouped.items():
            for power, coef in enumerate(_interp_coeffs(xs, column)):
                idx = rest[:axis] + (power,) + rest[axis:]
                new_values[idx] = coef
        values = new_values
    return {idx: v for idx, v in values.items() if v}


def oracle_stanley(k: int, m: int) -> MultiPoly:
    """F_k recovered purely from normalized characters of integer shapes by
    exact polynomial interpolation; independent of the cumulant route."""
    if m not in (1, 2):
        raise ValueError("the interpolation oracle supports m <= 2")
    npts = k + 2
    if m == 1:
        base = 3 if k > 4 else 2
        grid = list(range(base, base + npts))
        values = {}
        for ip, p in enumerate(grid):
            for iq, q in enumerate(grid):
                shape = expand_shape(MultiRect((p,), (q,)))
                values[(ip, iq)] = normalized_character(shape, k)
        coeffs = _tensor_interpolate(values, [grid, grid])
        return MultiPoly(("p1", "q1"), coeffs)
    base = 2
    grid = list(range(base, base + npts))
    values = {}
    for idx in itertools.product(range(npts), repeat=4):
        p1, p2, q2, t = (grid[i] for i in idx)
        shape = expand_shape(MultiRect((p1, p2), (q2 + t, q2)))
        values[idx] = normalized_character(shape, k)
    coeffs = _tensor_interpolate(values, [grid] * 4)
    raw = MultiPoly(("p1", "p2", "q2", "t"), coeffs)
    q1q2 = MultiPoly.ring("q1", "q2")
    return raw.substitute({"t": q1q2[0] - q1q2[1]}).in_ring(shape_vars(2))
