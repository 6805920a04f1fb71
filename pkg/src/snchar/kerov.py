"""Free cumulants of Young diagrams and the universal character polynomials.

Sigma_k is the unique polynomial in the free cumulants R_2..R_{k+1} whose
value at the cumulants of any diagram with at least k boxes equals the
normalized character on the class (k, 1, 1, ...).  It is recovered here by
exact linear solving: enumerate the admissible weight-graded monomials,
evaluate them on a deterministic pool of multi-rectangular diagrams, and
solve; five held-out shapes then re-check the result.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import (MultiPoly, Rational, TruncSeries, exact_solve,
                      column_rank, geometric_series, linear_series, ratio)
from .errors import SingularMatrixError
from .partitions import (MultiRect, Partition, as_multirect, expand_shape,
                         interlacing, partitions_of)
from .characters import normalized_character


def rvar(i: int) -> str:
    return f"R{i}"


def cvar(i: int) -> str:
    return f"C{i}"


def r_ring(kmax: int) -> tuple[str, ...]:
    """The ring (R2, ..., R{kmax})."""
    return tuple(rvar(i) for i in range(2, kmax + 1))


def index_weights(vars: tuple[str, ...]) -> tuple[int, ...]:
    """Weight of R_i and C_i is i; used for the weight grading."""
    return tuple(int(v[1:]) for v in vars)


@dataclass
class KerovExpansion:
    """Character polynomial Sigma_k in the R-monomial or C-monomial basis."""

    k: int
    basis: str  # "R" or "C"
    body: MultiPoly

    def weights(self) -> tuple[int, ...]:
        return index_weights(self.body.vars)

    def graded(self) -> dict[int, MultiPoly]:
        return self.body.grade_split(self.weights())


# -- free cumulants of concrete diagrams --------------------------------


def transition_series(shape: Partition | MultiRect, order: int) -> TruncSeries:
    """phi(z) = prod over minima (1 - x z) / prod over maxima (1 - y z),
    the reciprocal moment series of the diagram, truncated."""
    coords = interlacing(as_multirect(shape))
    ring: tuple[str, ...] = ()
    num = TruncSeries.constant(ring, 1, order)
    for x in coords.minima:
        num = num * linear_series(ring, x, order)
    for y in coords.maxima:
        num = num * geometric_series(ring, y, order)
    return num


def free_cumulants(shape: Partition | MultiRect, N: int) -> dict[int, int]:
    """R_2..R_N of the diagram, all integers for integer diagrams.

    R_k = -(1/(k-1)) [y^k] phi(y)^{k-1} with phi the diagram series above.
    """
    if N < 2:
        raise ValueError("need N >= 2")
    if isinstance(shape, Partition) and not shape.parts:
        return {i: 0 for i in range(2, N + 1)}
    phi = transition_series(shape, N)
    out: dict[int, int] = {}
    power = phi
    for j in range(1, N):
        value = -Fraction(power.coeff(j + 1).constant_value(), j)
        if value.denominator != 1:
            raise ArithmeticError(f"free cumulant R_{j + 1} not an integer: {value}")
        out[j + 1] = int(value)
        if j + 1 < N:
            power = power * phi
    return out


# -- the R-expansion of Sigma_k ------------------------------------------


def _monomials_of_weight(w: int, kmax: int) -> list[tuple[int, ...]]:
    """Exponent tuples over (R2..R{kmax}) of index-weight exactly w."""
    out = []
    for lam in partitions_of(w):
        if lam.parts and lam.parts[-1] >= 2 and lam.parts[0] <= kmax:
            exp = [0] * (kmax - 1)
            for a in lam.parts:
                exp[a - 2] += 1
            out.append(tuple(exp))
        elif not lam.parts and w == 0:
            out.append((0,) * (kmax - 1))
    return out


def candidate_monomials(k: int) -> list[tuple[int, ...]]:
    """All R-monomials allowed in Sigma_k: weight w <= k+1, w == k+1 (mod 2),
    no R_1, indices at most k+1."""
    exps = []
    w = k + 1
    while w >= 2:
        exps.extend(_monomials_of_weight(w, k + 1))
        w -= 2
    return exps


def _shape_pool() -> list[MultiRect]:
    """Deterministic pool of multi-rectangular diagrams used for solving."""
    pool: list[MultiRect] = []
    for p in range(1, 6):
        for q in range(1, 6):
            pool.append(MultiRect((p,), (q,)))
    for p1, p2 in itertools.product((1, 2, 3), repeat=2):
        for q1 in range(2, 6):
            for q2 in range(1, q1):
                pool.append(MultiRect((p1, p2), (q1, q2)))
    for p in itertools.product((1, 2), repeat=3):
        for q in itertools.combinations((5, 4, 3, 2, 1), 3):
            pool.append(MultiRect(p, q))
    return pool


_HOLDOUT = (
    Partition((4, 3, 2, 1)),
    Partition((6, 4, 2)),
    Partition((7, 5)),
    Partition((9, 1, 1, 1)),
    Partition((5, 5, 2, 1)),
)


@lru_cache(maxsize=None)
def kerov_polynomial(k: int) -> KerovExpansion:
    """Sigma_k in the R basis, solved exactly and validated on held-out shapes."""
    if k < 1:
        raise ValueError("need k >= 1")
    ring = r_ring(k + 1)
    monos = candidate_monomials(k)
    rows: list[list[Rational]] = []
    rhs: list[Rational] = []
    for shape in _shape_pool():
        if shape.n < k:
            continue
        cums = free_cumulants(shape, k + 1)
        rows.append([_eval_monomial(exp, cums) for exp in monos])
        rhs.append(normalized_character(expand_shape(shape), k))
        if len(rows) >= len(monos) and column_rank(rows) == len(monos):
            break
    else:
        raise SingularMatrixError(
            f"monomial matrix for Sigma_{k} is rank deficient after the whole pool")
    coeffs = exact_solve(rows, rhs)
    body = MultiPoly(ring, {exp: c for exp, c in zip(monos, coeffs) if c})
    for exp, c in body.terms.items():
        if isinstance(c, Fraction):
            raise ArithmeticError(f"non-integer coefficient {c} in Sigma_{k}")
    top = (0,) * (k - 1) + (1,)
    if body.coefficient(top) != 1:
        raise ArithmeticError(f"Sigma_{k} top term is not R_{k + 1}")
    for shape in _HOLDOUT:
        if shape.n < k:
            continue
        cums = free_cumulants(shape, k + 1)
        got = body.evaluate({rvar(i): cums[i] for i in range(2, k + 2)})
        want = normalized_character(shape, k)
        if got != want:
            raise ArithmeticError(
                f"Sigma_{k} failed held-out validation on {shape}: {got} != {want}")
    return KerovExpansion(k, "R", body)


def _eval_monomial(exp: tuple[int, ...], cums: dict[int, int]) -> int:
    value = 1
    for i, e in enumerate(exp):
        if e:
            value *= cums[i + 2] ** e
    return value


def evaluate_kerov(k: int, shape: Partition | MultiRect) -> Rational:
    """Sigma_k at the free cumulants of the diagram."""
    cums = free_cumulants(shape, k + 1)
    body = kerov_polynomial(k).body
    return body.evaluate({rvar(i): cums[i] for i in range(2, k + 2)})


# -- the C polynomials and the C-expansion --------------------------------


def c_monomial(m: int, K: int) -> MultiPoly:
    """C_m as a polynomial in R_2..R_K, from the multinomial expansion of
    1/(1 - sum_{i>=2} (i-1) R_i t^i):

        C_m = sum over (j_2, j_3, ...) with sum i j_i = m of
              (j_2+j_3+...)! prod ((i-1) R_i)^{j_i} / j_i!
    """
    if not 0 <= m <= K:
        raise ValueError(f"need 0 <= m <= {K}")
    ring = r_ring(K)
    if m == 0:
        return MultiPoly.const(ring, 1)
    terms: dict[tuple[int, ...], Fraction] = {}
    for lam in partitions_of(m):
        if not lam.parts or lam.parts[-1] < 2:
            continue
        mult = lam.multiplicities()
        coef = Fraction(factorial(sum(mult.values())))
        exp = [0] * (K - 1)
        for i, j in mult.items():
            coef *= Fraction((i - 1) ** j, factorial(j))
            exp[i - 2] = j
        terms[tuple(exp)] = coef
    return MultiPoly(ring, terms)


def c_generating_series(K: int, order: int) -> TruncSeries:
    """1/(1 - sum_{i=2..K} (i-1) R_i t^i) truncated; [t^m] equals c_monomial(m, K)."""
    ring = r_ring(K)
    coeffs = [MultiPoly.const(ring, 1)] + [MultiPoly.zero(ring)] * order
    for i in range(2, K + 1):
        if i <= order:
            coeffs[i] = MultiPoly.var(ring, rvar(i)) * (-(i - 1))
    return TruncSeries(ring, order, coeffs).reciprocal()


@lru_cache(maxsize=None)
def c_expansion(k: int) -> KerovExpansion:
    """Sigma_k rewritten over {R_{k+1}} union {C_2..C_{k-1}}.

    The rewrite eliminates each R_m (m from k-1 down to 2) through the
    triangular relation C_m = (m-1) R_m + (products of lower R's); the result
    must substitute back to Sigma_k - R_{k+1} exactly.
    """
    sigma = kerov_polynomial(k).body
    top_name = rvar(k + 1)
    ring_c = (top_name,) + tuple(cvar(i) for i in range(2, k))
    if k <= 2:
        return KerovExpansion(k, "C", sigma.in_ring(ring_c))
    lower = sigma - MultiPoly.var(sigma.vars, top_name)
    mixed = tuple(rvar(i) for i in range(2, k)) + tuple(cvar(i) for i in range(2, k))
    work = lower.in_ring(mixed)
    for m in range(k - 1, 1, -1):
        if not any(e[m - 2] for e in work.terms):
            continue
        rest = (c_monomial(m, k - 1) - MultiPoly.var(r_ring(k - 1), rvar(m)) * (m - 1))
        repl = (MultiPoly.var(mixed, cvar(m)) - rest.in_ring(mixed)) / (m - 1)
        work = work.substitute({rvar(m): repl}).in_ring(mixed)
    body = work.in_ring(ring_c) + MultiPoly.var(ring_c, top_name)
    return KerovExpansion(k, "C", body)


def c_part(e: KerovExpansion) -> MultiPoly:
    """Sigma_k - R_{k+1} of a C-basis expansion, over C variables only."""
    if e.basis != "C":
        raise ValueError("expected a C-basis expansion")
    top = rvar(e.k + 1)
    kept = e.body - MultiPoly.var(e.body.vars, top)
    return kept.in_ring(tuple(v for v in e.body.vars if v != top))


def graded_component(e: KerovExpansion, n: int) -> MultiPoly:
    """Terms of weight k+1-2n (the 2n-th graded piece)."""
    if 2 * n > e.k + 1:
        raise ValueError(f"need 2n <= k+1 = {e.k + 1}")
    return e.body.graded_piece(e.k + 1 - 2 * n, e.weights())


def gamma_report(k: int) -> dict[int, MultiPoly]:
    """C-expansions of every graded piece of Sigma_k beyond the top one.

    Maps n >= 1 to the C-polynomial expressing the weight-(k+1-2n) piece; the
    coefficients are the (computed, not claimed-in-general) gamma values.
    """
    exp = c_expansion(k)
    ring = tuple(v for v in exp.body.vars if v.startswith("C"))
    lower = c_part(exp)
    pieces = lower.grade_split(index_weights(lower.vars)) if ring else {}
    out: dict[int, MultiPoly] = {}
    for n in range(1, (k + 1) // 2 + 1):
        w = k + 1 - 2 * n
        out[n] = pieces.get(w, MultiPoly.zero(lower.vars))
    return out


@dataclass
class PositivityWitness:
    positive: bool
    witness: tuple[Rational, str] | None


def _positivity(poly: MultiPoly) -> PositivityWitness:
    ok, raw = poly.is_positive()
    if ok:
        return PositivityWitness(True, None)
    coef, exp = raw
    mono = " ".join(f"{v}^{e}" if e > 1 else v
                    for v, e in zip(poly.vars, exp) if e) or "1"
    return PositivityWitness(False, (coef, mono))


def positivity_check(e: KerovExpansion) -> dict:
    """R-positivity of Sigma_k, C-positivity of Sigma_k - R_{k+1}, and the
    substitution consistency showing C-positivity forces R-positivity."""
    k = e.k
    r_exp = kerov_polynomial(k)
    c_exp = c_expansion(k)
    r_pos = _positivity(r_exp.body)
    lower_c = c_part(c_exp)
    c_pos = _positivity(lower_c)
    # substituting C_i -> c_monomial(i) must reproduce the R body exactly;
    # since each C_i is a positive integer polynomial in the R's, positive
    # C-coefficients force positive R-coefficients.
    K = max(k - 1, 2)
    bindings = {v: c_monomial(int(v[1:]), K) for v in lower_c.vars}
    back = lower_c.substitute(bindings) if lower_c.vars else lower_c
    target = r_exp.body - MultiPoly.var(r_exp.body.vars, rvar(k + 1))
    implies = back.in_ring(r_ring(k + 1)) == target
    return {
        "k": k,
        "r_positive": r_pos,
        "c_positive": c_pos,
        "c_implies_r_consistent": implies,
    }
