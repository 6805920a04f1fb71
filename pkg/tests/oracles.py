"""Independent brute-force oracles used by the tests.

Everything here is deliberately naive (full enumeration over the symmetric
group, explicit tableau counting, determinant-free recursions) so the fast
implementations are checked against a genuinely different computation path.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from snchar.partitions import Partition


def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        size = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths, reverse=True))


def perm_sign(perm: tuple[int, ...]) -> int:
    return -1 if (len(perm) - len(cycle_type(perm))) % 2 else 1


def compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[b[i]] for i in range(len(a)))


def invert(perm: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, j in enumerate(perm):
        out[j] = i
    return tuple(out)


def perm_of_type(mu: Partition) -> tuple[int, ...]:
    img = list(range(mu.n))
    start = 0
    for part in mu.parts:
        for offset in range(part):
            img[start + offset] = start + (offset + 1) % part
        start += part
    return tuple(img)


def class_size_brute(lam: Partition) -> int:
    return sum(1 for p in permutations(range(lam.n)) if cycle_type(p) == lam.parts)


@lru_cache(maxsize=None)
def syt_count_brute(parts: tuple[int, ...]) -> int:
    """Standard tableaux counted by the corner-removal recursion."""
    if not parts:
        return 1
    total = 0
    for i, a in enumerate(parts):
        if i + 1 < len(parts) and parts[i + 1] == a:
            continue
        smaller = parts[:i] + ((a - 1,) if a > 1 else ()) + parts[i + 1:]
        total += syt_count_brute(smaller)
    return total


def frobenius_character(lam: Partition, mu: Partition) -> int:
    """chi_lambda(mu) as the coefficient of x^(lambda + delta) in the product
    of the Vandermonde alternant with the power sums of mu; practical for
    n <= 5 only."""
    n = lam.n
    delta = tuple(range(n - 1, -1, -1))
    poly: dict[tuple[int, ...], int] = {}
    for sigma in permutations(range(n)):
        exp = tuple(delta[sigma[i]] for i in range(n))
        poly[exp] = poly.get(exp, 0) + perm_sign(sigma)
    for part in mu.parts:
        nxt: dict[tuple[int, ...], int] = {}
        for exp, c in poly.items():
            for i in range(n):
                bumped = exp[:i] + (exp[i] + part,) + exp[i + 1:]
                nxt[bumped] = nxt.get(bumped, 0) + c
        poly = nxt
    padded = lam.parts + (0,) * (n - len(lam))
    target = tuple(padded[i] + delta[i] for i in range(n))
    return poly.get(target, 0)


def ssyt_count_brute(lam: Partition, bound: int) -> int:
    """Semistandard tableaux with entries in 1..bound, counted by direct fill."""
    rows = lam.parts
    if not rows:
        return 1
    filling = [[0] * r for r in rows]

    def fill(pos: int) -> int:
        if pos == lam.n:
            return 1
        r, c, seen = 0, pos, 0
        for i, width in enumerate(rows):
            if pos - seen < width:
                r, c = i, pos - seen
                break
            seen += width
        lo = 1
        if c > 0:
            lo = max(lo, filling[r][c - 1])
        if r > 0:
            lo = max(lo, filling[r - 1][c] + 1)
        total = 0
        for value in range(lo, bound + 1):
            filling[r][c] = value
            total += fill(pos + 1)
        filling[r][c] = 0
        return total

    return fill(0)


def structure_constant_brute(alpha: Partition, beta: Partition, mu: Partition) -> int:
    """[class of mu] (class sum of alpha)(class sum of beta), by enumerating
    one full conjugacy class."""
    k = alpha.n
    target = perm_of_type(mu)
    count = 0
    for a in permutations(range(k)):
        if cycle_type(a) != alpha.parts:
            continue
        b = compose(invert(a), target)
        if cycle_type(b) == beta.parts:
            count += 1
    return count


def fixed_point_inverse(alpha_coeffs: list[Fraction], order: int) -> list[Fraction]:
    """Coefficients of w solving w = z * phi(w) for a rational series phi,
    by plain iteration with list arithmetic (no Lagrange extraction)."""

    def mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * (order + 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if i + j <= order and y:
                        out[i + j] += x * y
        return out

    def compose_series(outer: list[Fraction], inner: list[Fraction]) -> list[Fraction]:
        result = [Fraction(0)] * (order + 1)
        result[0] = outer[-1]
        for c in reversed(outer[:-1]):
            result = mul(result, inner)
            result[0] += c
        return result

    phi = [Fraction(c) for c in alpha_coeffs] + [Fraction(0)] * (order + 1 - len(alpha_coeffs))
    w = [Fraction(0)] * (order + 1)
    w[1] = Fraction(1)
    for _ in range(order):
        composed = compose_series(phi[: order + 1], w)
        w = [Fraction(0)] + composed[:order]
    return w
