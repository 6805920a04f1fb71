"""Irreducible symmetric-group characters and their scalings.

The character value chi_lambda(mu) is computed by the border-strip
(Murnaghan-Nakayama) recursion, peeling the parts of mu from the largest part
first and memoizing on the canonical (lambda, mu) pair.  Border strips are
enumerated through beta-numbers: removing a strip of size t from lambda is the
same as lowering one first-column hook coordinate by t while keeping all
coordinates distinct.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .algebra import MultiPoly, Rational, ratio
from .partitions import Partition, class_size, contents, dimension, hook_product, partitions_of

_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _strip_removals(parts: tuple[int, ...], t: int):
    """Yield (smaller partition, sign) for every removable border strip of size t."""
    ell = len(parts)
    beta = [parts[i] + (ell - 1 - i) for i in range(ell)]
    occupied = set(beta)
    for i, b in enumerate(beta):
        nb = b - t
        if nb < 0 or nb in occupied:
            continue
        crossed = sum(1 for other in beta if nb < other < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        new_parts = tuple(x - (ell - 1 - j) for j, x in enumerate(new_beta))
        new_parts = tuple(a for a in new_parts if a > 0)
        yield new_parts, -1 if crossed % 2 else 1


def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    cached = _memo.get(key)
    if cached is not None:
        return cached
    head, rest = mu[0], mu[1:]
    value = 0
    for smaller, sign in _strip_removals(lam, head):
        value += sign * _mn(smaller, rest)
    _memo[key] = value
    return value


def mn_character(lam: Partition, mu: Partition) -> int:
    """chi_lambda(mu), both partitions of the same n."""
    if lam.n != mu.n:
        raise ValueError(f"size mismatch: |{lam}|={lam.n} but |{mu}|={mu.n}")
    return _mn(lam.parts, mu.parts)


def character_degree(lam: Partition) -> int:
    """chi_lambda(1^n), the dimension of the irreducible representation."""
    return dimension(lam)


def falling_factorial_int(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def _one_cycle_character(omega: Partition, k: int) -> Rational:
    """chi_omega(k 1^{n-k}) / chi_omega(1^n), by one strip peel plus hook counts."""
    f = dimension(omega)
    if k == 1:
        return Fraction(1)
    total = 0
    for smaller, sign in _strip_removals(omega.parts, k):
        total += sign * dimension(Partition(smaller))
    return Fraction(total, f)


def normalized_character(omega: Partition, k: int) -> Rational:
    """Normalized character on the class with one k-cycle and fixed points:
    n(n-1)...(n-k+1) * chi_omega(k 1^{n-k}) / chi_omega(1^n)."""
    n = omega.n
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got {k}")
    return ratio(falling_factorial_int(n, k) * _one_cycle_character(omega, k))


def normalized_character_class(omega: Partition, mu: Partition) -> Rational:
    """Normalized character on the class mu 1^{n-k} for mu a partition of k <= n."""
    n, k = omega.n, mu.n
    if k > n:
        raise ValueError(f"need |mu| <= {n}, got {k}")
    padded = Partition(tuple(mu.parts) + (1,) * (n - k))
    value = Fraction(mn_character(omega, padded), dimension(omega))
    return ratio(falling_factorial_int(n, k) * value)


def central_character(omega: Partition, lam: Partition) -> Rational:
    """|C_lam| * chi_omega(lam) / chi_omega(1^n)."""
    if omega.n != lam.n:
        raise ValueError(f"size mismatch: |{omega}|={omega.n} but |{lam}|={lam.n}")
    return ratio(Fraction(class_size(lam) * mn_character(omega, lam), dimension(omega)))


def connection_coefficient(alpha: Partition, beta: Partition, mu: Partition) -> int:
    """Structure constant of conjugacy-class sums in the group algebra:
    the coefficient of the class of mu in (class sum of alpha)(class sum of beta).

    Evaluated by the character sum
    |C_alpha||C_beta|/k! * sum_lambda chi(alpha) chi(beta) chi(mu) / f_lambda,
    which must come out a nonnegative integer.
    """
    k = alpha.n
    if beta.n != k or mu.n != k:
        raise ValueError("alpha, beta, mu must partition the same k")
    total = Fraction(0)
    for lam in partitions_of(k):
        total += Fraction(
            mn_character(lam, alpha) * mn_character(lam, beta) * mn_character(lam, mu),
            dimension(lam))
    value = Fraction(class_size(alpha) * class_size(beta), math.factorial(k)) * total
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"connection coefficient came out {value}; character bug")
    return int(value)


def content_product_expand(lam: Partition) -> MultiPoly:
    """prod over boxes of (x + content) as a polynomial in the single variable x."""
    (x,) = MultiPoly.ring("x")
    out = MultiPoly.const(("x",), 1)
    for c in contents(lam):
        out = out * (x + c)
    return out


def content_product_by_characters(lam: Partition) -> MultiPoly:
    """The same product evaluated through the class expansion
    sum over classes beta of |C_beta|/f_lambda * chi_lambda(beta) x^{len(beta)}."""
    n = lam.n
    f = dimension(lam)
    terms: dict[tuple[int, ...], Fraction] = {}
    for beta in partitions_of(n):
        coef = Fraction(class_size(beta) * mn_character(lam, beta), f)
        if coef:
            exp = (len(beta),)
            terms[exp] = terms.get(exp, Fraction(0)) + coef
    return MultiPoly(("x",), terms)


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def _fixed_permutation(mu: Partition) -> tuple[int, ...]:
    """One permutation of cycle type mu on {0..k-1}, as an image tuple."""
    img = list(range(mu.n))
    start = 0
    for part in mu.parts:
        for offset in range(part):
            img[start + offset] = start + (offset + 1) % part
        start += part
    return tuple(img)


def _invert(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """a after b."""
    return tuple(a[b[i]] for i in range(len(a)))


def factorization_character(p, q, mu: Partition, budget: int = 7):
    """(-1)^k sum over factorizations u v = (fixed permutation of type mu) of
    p^{cycles(u)} (-q)^{cycles(v)}.

    Accepts numbers or polynomials for p and q; enumerates all k! choices of u.
    For integer rectangles with p*q >= k this equals the normalized character
    of the rectangle on the class mu 1^{n-k}.
    """
    k = mu.n
    if k > budget:
        raise ValueError(f"k={k} exceeds the k! enumeration budget ({budget})")
    target = _fixed_permutation(mu)
    neg_q = -q
    total = None
    for u in permutations(range(k)):
        v = _compose(_invert(u), target)
        term = p ** _cycle_count(u) * neg_q ** _cycle_count(v)
        total = term if total is None else total + term
    sign = -1 if k % 2 else 1
    return total * sign


def schur_principal_specialization(lam: Partition, p: int) -> Rational:
    """Schur polynomial at p ones: prod (p + content) / hook product; counts
    semistandard tableaux with entries bounded by p."""
    if p < 0:
        raise ValueError("need p >= 0")
    num = math.prod(p + c for c in contents(lam)) if lam.parts else 1
    return ratio(Fraction(num, hook_product(lam)))


def clear_character_cache():
    _memo.clear()
