"""Reference-identity suite: every tabulated expansion and identity the
library reproduces, checked against independently computed values.

Each item carries the statement it checks; the runner executes items
concurrently (workers capped by SNCHAR_VERIFY_WORKERS) and reports a
deterministic, index-ordered pass/fail table.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .algebra import MultiPoly, render_poly
from .characters import (central_character, connection_coefficient,
                         content_product_by_characters, content_product_expand,
                         factorization_character, mn_character,
                         normalized_character, normalized_character_class)
from .kerov import (KerovExpansion, c_expansion, c_monomial, c_part,
                    free_cumulants, gamma_report, graded_component,
                    kerov_polynomial, index_weights, rvar)
from .partitions import (MultiRect, Partition, class_size, dimension,
                         expand_shape, interlacing, partitions_of,
                         shape_from_interlacing)
from .shifted import p_sharp, rectangle_character_via_shift_schur
from .stanley import (elizalde_report, extract_cumulant, flip_q_signs,
                      g_series_direct, negate_q, phi_negated_direct,
                      phi_negated_product, positivity_row, render_shape_poly,
                      stanley_polynomial, verify_g_equals_r, shape_vars)

KNOWN_R_EXPANSIONS = {
    1: "R2",
    2: "R3",
    3: "R4 + R2",
    4: "R5 + 5 R3",
    5: "R6 + 15 R4 + 5 R2^2 + 8 R2",
    6: "R7 + 35 R5 + 35 R3 R2 + 84 R3",
}

KNOWN_C_EXPANSIONS = {
    3: "C2",
    4: "5/2 C3",
    5: "5 C4 + 8 C2",
    6: "35/4 C5 + 42 C3",
    7: "14 C6 + 469/3 C4 + 203/3 C2^2 + 180 C2",
    8: "21 C7 + 1869/4 C5 + 819/2 C3 C2 + 1522 C3",
}

KNOWN_NEGATED_STANLEY = {
    1: "a b + p q",
    2: "a^2 b + a b^2 + 2 a p q + p^2 q + p q^2",
    3: "a^3 b + 3 a^2 b^2 + 3 a^2 p q + a b^3 + 3 a b p q + 3 a p^2 q "
       "+ 3 a p q^2 + p^3 q + 3 p^2 q^2 + p q^3 + a b + p q",
    4: "a^4 b + 6 a^3 b^2 + 4 a^3 p q + 6 a^2 b^3 + 12 a^2 b p q + 6 a^2 p^2 q "
       "+ 6 a^2 p q^2 + a b^4 + 4 a b^2 p q + 4 a b p^2 q + 4 a b p q^2 "
       "+ 4 a p^3 q + 14 a p^2 q^2 + 4 a p q^3 + p^4 q + 6 p^3 q^2 + 6 p^2 q^3 "
       "+ p q^4 + 5 a^2 b + 5 a b^2 + 10 a p q + 5 p^2 q + 5 p q^2",
}


def render_expansion(e: KerovExpansion) -> str:
    prec = sorted(e.body.vars, key=lambda v: (0 if v.startswith("R") else 1, -int(v[1:])))
    return render_poly(e.body, weights=e.weights(), precedence=prec)


@dataclass
class VerifyItem:
    name: str
    statement: str
    run: Callable[[], tuple[bool, str]]


@dataclass
class VerifyResult:
    index: int
    name: str
    statement: str
    ok: bool
    detail: str


def _check_r_expansion(k: int):
    def run():
        got = render_expansion(kerov_polynomial(k))
        want = KNOWN_R_EXPANSIONS[k]
        return got == want, f"computed {got}"
    return run


def _check_c_expansion(k: int):
    def run():
        e = c_expansion(k)
        lower = c_part(e)
        got = render_poly(lower, weights=index_weights(lower.vars),
                          precedence=sorted(lower.vars, key=lambda v: -int(v[1:])))
        want = KNOWN_C_EXPANSIONS[k]
        return got == want, f"computed {got}"
    return run


def _check_stanley_data(k: int):
    def run():
        got = render_shape_poly(negate_q(stanley_polynomial(k, 2), k), 2)
        want = KNOWN_NEGATED_STANLEY[k]
        ok = got == want
        detail = f"computed {got[:70]}..." if len(got) > 70 else f"computed {got}"
        if k == 1 and ok:
            detail += ("; the older tabulation lists F_1(a,p; b,q) = -a b - p q, "
                       "the opposite sign: inconsistent with F_1 = sum p_i q_i, "
                       "the rectangle factorization, and the k=1 normalized "
                       "character, so the artifact reports a b + p q")
        return ok, detail
    return run


def _check_ones_evaluation():
    def run():
        for m in (1, 2, 3):
            for k in range(1, 7):
                values = {f"p{i}": 1 for i in range(1, m + 1)}
                values |= {f"q{i}": -1 for i in range(1, m + 1)}
                got = stanley_polynomial(k, m).evaluate(values) * (-1) ** k
                want = 1
                for i in range(k):
                    want *= k + m - 1 - i
                if got != want:
                    return False, f"k={k} m={m}: got {got}, want {want}"
        return True, ("holds for k <= 6, m <= 3 with the sign (-1)^k attached; "
                      "under this library's F_k = normalized character convention "
                      "the unsigned form holds only for even k")
    return run


def _check_top_weight():
    def run():
        for k in range(1, 10):
            e = kerov_polynomial(k)
            top = graded_component(e, 0)
            if top != MultiPoly.var(e.body.vars, rvar(k + 1)):
                return False, f"k={k}: top piece is {top}"
        return True, "k <= 9"
    return run


def _check_sigma_k2():
    def run():
        for k in range(3, 10):
            e = kerov_polynomial(k)
            lhs = graded_component(e, 1)
            rhs = (c_monomial(k - 1, k + 1) * Fraction(comb(k + 1, 3), 4)).in_ring(e.body.vars)
            if lhs != rhs:
                return False, f"k={k}"
        return True, "k = 3..9"
    return run


def _check_sigma_k4():
    def run():
        notes = []
        for k in range(5, 10):
            piece = gamma_report(k).get(2)
            if piece is None or piece.is_zero():
                continue
            ok, witness = piece.is_positive()
            if not ok:
                return False, f"k={k}: negative C coefficient {witness}"
            notes.append(f"k={k}: {len(piece.terms)} C-monomials")
        return True, "; ".join(notes)
    return run


def _check_g_equals_r():
    def run():
        for m in (1, 2, 3):
            ok, where = verify_g_equals_r(m, 8)
            if not ok:
                return False, f"m={m}: first difference at order {where}"
        return True, "orders 0..8, m <= 3"
    return run


def _check_phi_product():
    def run():
        for m in (1, 2, 3):
            direct = phi_negated_direct(m, 10)
            product = phi_negated_product(m, 10)
            if not direct.matches(product):
                return False, f"m={m}: series differ"
            for j, c in enumerate(product.coeffs):
                ok, witness = c.is_positive()
                if not ok and not c.is_zero():
                    return False, f"m={m}: coefficient of z^{j} not positive: {witness}"
        return True, "order 10, m <= 3, all coefficients positive"
    return run


def _check_rectangles():
    def run():
        count = 0
        for k in range(1, 6):
            for mu in partitions_of(k):
                for p in range(1, 5):
                    for q in range(1, 5):
                        if p * q < k:
                            continue
                        count += 1
                        brute = factorization_character(p, q, mu)
                        mn = normalized_character_class(
                            expand_shape(MultiRect((p,), (q,))), mu)
                        if brute != mn:
                            return False, f"p={p} q={q} mu={mu}: {brute} != {mn}"
        return True, f"{count} (rectangle, class) pairs"
    return run


def _check_psharp():
    def run():
        count = 0
        for n in range(1, 8):
            for lam in partitions_of(n):
                for k in range(1, n + 1):
                    for mu in partitions_of(k):
                        count += 1
                        if p_sharp(mu, lam, check_stability=False) != \
                                normalized_character_class(lam, mu):
                            return False, f"lam={lam} mu={mu}"
        return True, f"{count} cases with n <= 7"
    return run


def _check_shift_schur_rectangle_chain():
    def run():
        for k in range(1, 6):
            for mu in partitions_of(k):
                for p in range(1, 5):
                    for q in range(1, 5):
                        if p * q < k:
                            continue
                        via_shift = rectangle_character_via_shift_schur(p, q, mu)
                        brute = factorization_character(p, q, mu)
                        if via_shift != brute:
                            return False, f"p={p} q={q} mu={mu}"
        return True, "k <= 5, rectangles up to 4x4"
    return run


def _check_content_product():
    def run():
        for n in range(1, 7):
            for lam in partitions_of(n):
                if content_product_expand(lam) != content_product_by_characters(lam):
                    return False, f"lam={lam}"
        return True, "all shapes with n <= 6"
    return run


def _check_scaling_identity():
    def run():
        for n in range(2, 8):
            for omega in partitions_of(n):
                for k in range(2, n + 1):
                    cls = Partition((k,) + (1,) * (n - k))
                    lhs = normalized_character(omega, k)
                    rhs = k * central_character(omega, cls)
                    if lhs != rhs:
                        return False, f"omega={omega} k={k}"
        return True, "normalized = k * central on one-cycle classes, n <= 7"
    return run


def _check_substitution(shapes: int = 12, kmax: int = 6):
    def run():
        pool = []
        for p in (1, 2, 3):
            for q in (1, 2, 3, 4):
                pool.append(MultiRect((p,), (q,)))
        pool += [MultiRect((1, 2), (4, 2)), MultiRect((2, 1), (3, 1)),
                 MultiRect((2, 2), (4, 2)), MultiRect((1, 1, 1), (5, 3, 1))]
        used = 0
        for shape in pool[:shapes]:
            lam = expand_shape(shape)
            cums = free_cumulants(shape, kmax + 1)
            for k in range(1, min(kmax, lam.n) + 1):
                got = kerov_polynomial(k).body.evaluate(
                    {rvar(i): cums[i] for i in range(2, k + 2)})
                want = normalized_character(lam, k)
                if got != want:
                    return False, f"shape={shape} k={k}: {got} != {want}"
                used += 1
        return True, f"{used} (shape, k) evaluations"
    return run


def _check_interlacing():
    def run():
        rect = interlacing(MultiRect((2,), (5,)))
        if rect.minima != (5, -2) or rect.maxima != (3,):
            return False, f"rectangle coordinates wrong: {rect}"
        fig = MultiRect((1, 3, 1), (4, 3, 1))
        coords = interlacing(fig)
        if coords.minima != (4, 2, -3, -5) or coords.maxima != (3, -1, -4):
            return False, f"staircase coordinates wrong: {coords}"
        rebuilt = expand_shape(shape_from_interlacing(coords))
        if rebuilt != Partition((4, 3, 3, 3, 1)) or rebuilt.n != 14:
            return False, f"round trip failed: {rebuilt}"
        return True, "rectangle and the 14-box staircase (4,3,3,3,1)"
    return run


def _check_cumulants():
    def run():
        for shape in (Partition((3, 1)), Partition((4, 4, 2)), Partition((2, 2, 1, 1)),
                      Partition((5,)), Partition((3, 2, 2, 1))):
            if free_cumulants(shape, 3)[2] != shape.n:
                return False, f"R_2 of {shape} is not the box count"
        r2 = extract_cumulant(2, 1)
        r3 = extract_cumulant(3, 1)
        p1, q1 = MultiPoly.ring(*shape_vars(1))
        if r2 != p1 * q1 or r3 != p1 * q1 * (q1 - p1):
            return False, f"rectangle cumulants wrong: {r2}, {r3}"
        box = free_cumulants(Partition((1,)), 5)
        if (box[2], box[3], box[4], box[5]) != (1, 0, -1, 0):
            return False, f"single box cumulants wrong: {box}"
        return True, ("R_2 = n on five shapes; rectangle R_2 = p q, "
                      "R_3 = p q (q - p); single box (1, 0, -1, 0)")
    return run


def _check_positivity_small():
    def run():
        for m in (1, 2):
            for k in range(1, 7):
                neg = negate_q(stanley_polynomial(k, m), k)
                ok, witness = neg.is_positive()
                if not ok:
                    return False, f"k={k} m={m}: witness {witness}"
        return True, "(-1)^k F_k(p;-q) has positive coefficients, k <= 6, m <= 2"
    return run


def _check_elizalde():
    def run():
        lines = []
        for k in range(1, 6):
            rep = elizalde_report(k, 2)
            lines.append(
                f"k={k}: as-printed "
                + ("matches" if rep["as_printed"]["matches"]
                   else f"differs in {rep['as_printed']['differing_monomials']} monomials")
                + ", corrected "
                + ("matches" if rep["corrected"]["matches"]
                   else f"differs in {rep['corrected']['differing_monomials']} monomials"))
        return True, "; ".join(lines)
    return run


def _check_connection():
    def run():
        t = Partition((2, 1))
        if connection_coefficient(t, t, Partition((1, 1, 1))) != 3:
            return False, "c^(1,1,1) wrong"
        if connection_coefficient(t, t, Partition((3,))) != 3:
            return False, "c^(3) wrong"
        for k in range(1, 6):
            for alpha in partitions_of(k):
                for beta in partitions_of(k):
                    total = sum(connection_coefficient(alpha, beta, mu) * class_size(mu)
                                for mu in partitions_of(k))
                    if total != class_size(alpha) * class_size(beta):
                        return False, f"mass check failed at {alpha}, {beta}"
        return True, "structure constants integral, nonnegative, mass-consistent, k <= 5"
    return run


def build_suite() -> list[VerifyItem]:
    items: list[VerifyItem] = []
    for k in range(1, 7):
        items.append(VerifyItem(
            f"kerov-r-{k}", f"Sigma_{k} = {KNOWN_R_EXPANSIONS[k]}", _check_r_expansion(k)))
    for k in range(3, 9):
        items.append(VerifyItem(
            f"kerov-c-{k}", f"Sigma_{k} - R{k + 1} = {KNOWN_C_EXPANSIONS[k]}",
            _check_c_expansion(k)))
    for k in range(1, 5):
        sign = "-" if k % 2 else ""
        items.append(VerifyItem(
            f"stanley-f{k}",
            f"{sign}F_{k}(a,p; -b,-q) equals its tabulated positive expansion",
            _check_stanley_data(k)))
    items.append(VerifyItem(
        "ones-evaluation", "(-1)^k F_k(1,..,1; -1,..,-1) = (k+m-1)_k, k <= 6, m <= 3",
        _check_ones_evaluation()))
    items.append(VerifyItem(
        "top-weight", "the weight-(k+1) part of Sigma_k is exactly R_{k+1}",
        _check_top_weight()))
    items.append(VerifyItem(
        "sigma-k2", "Sigma_{k,2} = (1/4) binomial(k+1, 3) C_{k-1}, k = 3..9",
        _check_sigma_k2()))
    items.append(VerifyItem(
        "sigma-k4", "Sigma_{k,4} has a positive C-expansion for computed k",
        _check_sigma_k4()))
    items.append(VerifyItem(
        "g-equals-r", "cumulant series = top-degree series - sum(p_i) z, order 8",
        _check_g_equals_r()))
    items.append(VerifyItem(
        "phi-product",
        "phi(-z) with q negated equals prod(1 + p_i q_i z^2 / ((1 - r_{i-1} z)(1 - (q_i + r_i) z)))",
        _check_phi_product()))
    items.append(VerifyItem(
        "rect-factorization",
        "normalized rectangle character = (-1)^k sum over u v = w of p^cycles(u) (-q)^cycles(v)",
        _check_rectangles()))
    items.append(VerifyItem(
        "shift-schur-rectangle",
        "sum of chi_rho(mu) s*_rho(p x q) reproduces the rectangle factorization",
        _check_shift_schur_rectangle_chain()))
    items.append(VerifyItem(
        "p-sharp", "p-sharp(mu) at lambda = normalized character of lambda on mu 1^(n-k)",
        _check_psharp()))
    items.append(VerifyItem(
        "content-product",
        "prod(x + c(u)) = sum over classes of |C| chi / f * x^len, n <= 6",
        _check_content_product()))
    items.append(VerifyItem(
        "scaling", "normalized character = k * central character on (k, 1, ...) classes",
        _check_scaling_identity()))
    items.append(VerifyItem(
        "substitution", "Sigma_k at the cumulants of a diagram = its normalized character",
        _check_substitution()))
    items.append(VerifyItem(
        "interlacing", "interlacing coordinates: minima (q_i - r_{i-1}, -r_m), maxima (q_i - r_i)",
        _check_interlacing()))
    items.append(VerifyItem(
        "free-cumulants", "R_2 = box count; rectangle R_2 = p q and R_3 = p q (q - p)",
        _check_cumulants()))
    items.append(VerifyItem(
        "positivity", "(-1)^k F_k(p; -q) is coefficient-positive at desk scale",
        _check_positivity_small()))
    items.append(VerifyItem(
        "connection-coefficients",
        "class-sum structure constants are nonnegative integers with the right mass",
        _check_connection()))
    items.append(VerifyItem(
        "elizalde",
        "tabulated top-degree double sum vs the generating series (finding)",
        _check_elizalde()))
    return items


def worker_cap() -> int:
    raw = os.environ.get("SNCHAR_VERIFY_WORKERS", "4")
    try:
        return max(1, int(raw))
    except ValueError:
        return 4


def run_suite(name_filter: str | None = None) -> list[VerifyResult]:
    items = build_suite()
    if name_filter:
        items = [item for item in items if name_filter in item.name]

    def execute(pair):
        index, item = pair
        try:
            ok, detail = item.run()
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        return VerifyResult(index, item.name, item.statement, ok, detail)

    with ThreadPoolExecutor(max_workers=worker_cap()) as pool:
        results = list(pool.map(execute, enumerate(items)))
    return sorted(results, key=lambda r: r.index)
