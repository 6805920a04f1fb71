"""Shift Schur polynomials and the p-sharp evaluation of normalized characters.

s*_lambda(x_1..x_n) is the ratio of falling-factorial determinants
det((x_i + n - i)_{lambda_j + n - j}) / det((x_i + n - i)_{n - j}); it also
equals the reverse-tableau sum over fillings weakly decreasing along rows and
strictly decreasing down columns.  Summing chi_rho(mu) s*_rho over rho
recovers the normalized character, which is re-derived here as an identity
check and as the engine of the rectangular factorization.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra import exact_det, ratio, Rational
from .errors import SingularMatrixError
from .characters import falling_factorial_int, mn_character
from .partitions import Partition, contents, hook_product, partitions_of

TABLEAU_BOX_BUDGET = 8


def falling_factorial(x, k: int):
    """x(x-1)...(x-k+1); the empty product is 1.  Works for numbers and
    polynomials alike."""
    if k < 0:
        raise ValueError("need k >= 0")
    out = 1
    for i in range(k):
        out = out * (x - i)
    return out


def shift_schur_det(lam: Partition, xs: Sequence[Rational]) -> Rational:
    """Determinant-ratio evaluation of s*_lambda at the given points.

    Needs len(xs) >= len(lam); raises SingularMatrixError when two shifted
    points x_i + n - i collide (callers fall back to the tableau route).
    """
    n = len(xs)
    if n < len(lam):
        raise ValueError(f"need at least {len(lam)} evaluation points")
    parts = list(lam.parts) + [0] * (n - len(lam))
    shifted = [Fraction(xs[i]) + n - (i + 1) for i in range(n)]
    if len(set(shifted)) != n:
        raise SingularMatrixError(f"repeated shifted points in {shifted}")
    num = [[falling_factorial(a, parts[j] + n - (j + 1)) for j in range(n)] for a in shifted]
    den = [[falling_factorial(a, n - (j + 1)) for j in range(n)] for a in shifted]
    d = exact_det(den)
    if d == 0:
        raise SingularMatrixError("denominator determinant vanished")
    return ratio(Fraction(exact_det(num)) / Fraction(d))


def reverse_tableaux(lam: Partition, max_entry: int) -> Iterator[list[list[int]]]:
    """All fillings weakly decreasing along rows, strictly decreasing down
    columns, with entries in 1..max_entry."""
    rows = lam.parts
    if not rows:
        yield []
        return
    filling = [[0] * r for r in rows]

    def fill(pos: int):
        if pos == lam.n:
            yield [row[:] for row in filling]
            return
        r, c, seen = 0, pos, 0
        for i, width in enumerate(rows):
            if pos - seen < width:
                r, c = i, pos - seen
                break
            seen += width
        upper = max_entry
        if c > 0:
            upper = min(upper, filling[r][c - 1])
        if r > 0:
            upper = min(upper, filling[r - 1][c] - 1)
        for value in range(upper, 0, -1):
            filling[r][c] = value
            yield from fill(pos + 1)
        filling[r][c] = 0

    yield from fill(0)


def shift_schur_tableaux(lam: Partition, xs: Sequence[Rational]) -> Rational:
    """Reverse-tableau evaluation: sum over fillings of prod (x_{T(u)} - c(u))."""
    if lam.n > TABLEAU_BOX_BUDGET:
        raise ValueError(f"tableau enumeration capped at {TABLEAU_BOX_BUDGET} boxes")
    total = Fraction(0)
    for filling in reverse_tableaux(lam, len(xs)):
        prod = Fraction(1)
        for i, row in enumerate(filling, start=1):
            for j, entry in enumerate(row, start=1):
                prod *= Fraction(xs[entry - 1]) - (j - i)
        total += prod
    return ratio(total)


@lru_cache(maxsize=None)
def _shift_schur_cached(parts: tuple[int, ...], xs: tuple) -> Rational:
    lam = Partition(parts)
    if len(xs) < len(parts):
        return 0
    try:
        return shift_schur_det(lam, xs)
    except SingularMatrixError:
        return shift_schur_tableaux(lam, xs)


def shift_schur(lam: Partition, xs: Sequence[Rational]) -> Rational:
    """s*_lambda at the points, determinant route with tableau fallback."""
    return _shift_schur_cached(lam.parts, tuple(Fraction(x) for x in xs))


def shift_schur_rect(lam: Partition, p: int, q: int) -> Rational:
    """Closed form of s*_lambda at p copies of q:
    (-1)^k / hook_product * prod (-q + c(u)) (p + c(u))."""
    k = lam.n
    prod = 1
    for c in contents(lam):
        prod *= (-q + c) * (p + c)
    sign = -1 if k % 2 else 1
    return ratio(Fraction(sign * prod, hook_product(lam)))


def p_sharp(mu: Partition, lam: Partition, check_stability: bool = True) -> Rational:
    """sum over rho of chi_rho(mu) s*_rho(lam), evaluated at x_i = lam_i.

    Equals the normalized character of lam on the class mu 1^{n-k}.  The
    evaluation pads with zeros; with check_stability the value is recomputed
    with one more zero to confirm it does not depend on the padding length.
    """
    k, n = mu.n, lam.n
    if k > n:
        raise ValueError(f"need |mu| <= |lam|, got {k} > {n}")
    width = max(len(lam), k)
    xs = tuple(Fraction(a) for a in lam.parts) + (Fraction(0),) * (width - len(lam))
    total = Fraction(0)
    for rho in partitions_of(k):
        chi = mn_character(rho, mu)
        if chi:
            total += chi * Fraction(_shift_schur_cached(rho.parts, xs))
    if check_stability:
        longer = xs + (Fraction(0),)
        retry = Fraction(0)
        for rho in partitions_of(k):
            chi = mn_character(rho, mu)
            if chi:
                retry += chi * Fraction(_shift_schur_cached(rho.parts, longer))
        if retry != total:
            raise ArithmeticError(f"p-sharp value depends on zero padding: {total} vs {retry}")
    return ratio(total)


def normalized_character_via_psharp(mu: Partition, lam: Partition) -> Rational:
    """Independent route to the normalized character through shift Schur sums."""
    return p_sharp(mu, lam)


def rectangle_character_via_shift_schur(p: int, q: int, mu: Partition) -> Rational:
    """sum over rho of chi_rho(mu) s*_rho(p x q) using the rectangular closed
    form; reproduces the factorization expression for the rectangle."""
    total = Fraction(0)
    for rho in partitions_of(mu.n):
        chi = mn_character(rho, mu)
        if chi:
            total += chi * Fraction(shift_schur_rect(rho, p, q))
    return ratio(total)
