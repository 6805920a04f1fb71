"""Sparse multivariate polynomials over exact rationals, and univariate
truncated power series whose coefficients are such polynomials.

Coefficients are Python ints where possible and fractions.Fraction otherwise;
no floating point is used anywhere.  Polynomials are keyed by exponent tuples
aligned with an ordered tuple of indeterminate names, and two polynomials can
only be combined when those tuples agree (see MultiPoly.substitute for moving
between rings).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import RingMismatchError, SingularMatrixError

Rational = Union[int, Fraction]


def ratio(value) -> Rational:
    """Coerce to an exact coefficient, collapsing unit denominators to int."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return ratio(Fraction(value))
    raise TypeError(f"not an exact rational: {value!r}")


class MultiPoly:
    """Sparse polynomial: {exponent tuple: nonzero coefficient} over named vars.

    >>> x, y = MultiPoly.ring("x", "y")
    >>> str((x + y) * (x - y))
    'x^2 - y^2'
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple[int, ...], Rational] | None = None):
        vars = tuple(vars)
        clean: dict[tuple[int, ...], Rational] = {}
        if terms:
            nv = len(vars)
            for exp, coef in terms.items():
                exp = tuple(exp)
                if len(exp) != nv:
                    raise ValueError(f"exponent {exp} does not match {nv} variables")
                c = ratio(coef)
                if c:
                    clean[exp] = c
        self.vars = vars
        self.terms = clean

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict) -> "MultiPoly":
        out = object.__new__(cls)
        out.vars = vars
        out.terms = terms
        return out

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "MultiPoly":
        return cls._raw(tuple(vars), {})

    @classmethod
    def const(cls, vars: Sequence[str], value) -> "MultiPoly":
        c = ratio(value)
        vars = tuple(vars)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "MultiPoly":
        vars = tuple(vars)
        exp = [0] * len(vars)
        exp[vars.index(name)] = 1
        return cls._raw(vars, {tuple(exp): 1})

    @classmethod
    def ring(cls, *names: str) -> list["MultiPoly"]:
        """Generators of the polynomial ring on the given names."""
        return [cls.var(names, nm) for nm in names]

    # -- ring plumbing -------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise RingMismatchError(f"{self.vars} vs {other.vars}")

    def _lift(self, value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            self._check(value)
            return value
        return MultiPoly.const(self.vars, value)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Rational:
        """The coefficient of the empty monomial (poly must be constant)."""
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return next(iter(self.terms.values()))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = ratio(s)
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = ratio(other)
            if not c:
                return MultiPoly.zero(self.vars)
            return MultiPoly._raw(self.vars, {e: ratio(v * c) for e, v in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], Rational] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(map(int.__add__, ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        for e, c in out.items():
            if isinstance(c, Fraction) and c.denominator == 1:
                out[e] = c.numerator
        return MultiPoly._raw(self.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "MultiPoly":
        c = Fraction(scalar) if not isinstance(scalar, Fraction) else scalar
        return self * (1 / c)

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.const(self.vars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- structure -----------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def weighted_degree(self, exp: tuple[int, ...], weights: Sequence[int] | None) -> int:
        if weights is None:
            return sum(exp)
        return sum(w * e for w, e in zip(weights, exp))

    def grade_split(self, weights: Sequence[int] | None = None) -> dict[int, "MultiPoly"]:
        """Decompose into homogeneous pieces under the degree functional.

        weights gives the degree of each variable (aligned with self.vars);
        None means plain total degree.  The pieces sum back to self.
        """
        pieces: dict[int, dict] = {}
        for e, c in self.terms.items():
            d = self.weighted_degree(e, weights)
            pieces.setdefault(d, {})[e] = c
        return {d: MultiPoly._raw(self.vars, t) for d, t in sorted(pieces.items())}

    def graded_piece(self, degree: int, weights: Sequence[int] | None = None) -> "MultiPoly":
        return self.grade_split(weights).get(degree, MultiPoly.zero(self.vars))

    def is_positive(self) -> tuple[bool, tuple[Rational, tuple[int, ...]] | None]:
        """True iff every stored coefficient is > 0; else a (coef, exponent) witness."""
        for e in sorted(self.terms):
            c = self.terms[e]
            if c <= 0:
                return False, (c, e)
        return True, None

    def coefficient(self, exp: tuple[int, ...]) -> Rational:
        return self.terms.get(tuple(exp), 0)

    def substitute(self, bindings: Mapping[str, Union["MultiPoly", Rational]]) -> "MultiPoly":
        """Exact composition: replace bound variables, keep the rest symbolic.

        The result ring is the surviving variables of self followed by the
        variables of any polynomial values, in first-seen order.
        """
        for name in bindings:
            if name not in self.vars:
                raise ValueError(f"binding names unknown indeterminate {name!r}")
        new_vars: list[str] = [v for v in self.vars if v not in bindings]
        for value in bindings.values():
            if isinstance(value, MultiPoly):
                for v in value.vars:
                    if v not in new_vars:
                        new_vars.append(v)
        ring = tuple(new_vars)
        images: dict[str, MultiPoly] = {}
        for v in self.vars:
            if v in bindings:
                value = bindings[v]
                images[v] = value.in_ring(ring) if isinstance(value, MultiPoly) \
                    else MultiPoly.const(ring, value)
            else:
                images[v] = MultiPoly.var(ring, v)
        # precompute the needed powers of each image
        max_exp = [0] * len(self.vars)
        for e in self.terms:
            for i, ei in enumerate(e):
                if ei > max_exp[i]:
                    max_exp[i] = ei
        powers: list[list[MultiPoly]] = []
        for i, v in enumerate(self.vars):
            pw = [MultiPoly.const(ring, 1)]
            for _ in range(max_exp[i]):
                pw.append(pw[-1] * images[v])
            powers.append(pw)
        total = MultiPoly.zero(ring)
        for e, c in self.terms.items():
            term = MultiPoly.const(ring, c)
            for i, ei in enumerate(e):
                if ei:
                    term = term * powers[i][ei]
            total = total + term
        return total

    def evaluate(self, values: Mapping[str, Rational]) -> Rational:
        """Full numeric evaluation; every variable must be bound."""
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise ValueError(f"unbound variables {missing}")
        vals = [ratio(values[v]) for v in self.vars]
        total: Rational = 0
        for e, c in self.terms.items():
            t = c
            for x, ei in zip(vals, e):
                if ei:
                    t *= x ** ei
            total += t
        return ratio(total)

    def in_ring(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-express over a ring containing (at least) all used variables."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = []
        for i, v in enumerate(self.vars):
            pos.append(vars.index(v) if v in vars else -1)
        out: dict[tuple[int, ...], Rational] = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for i, ei in enumerate(e):
                if ei:
                    if pos[i] < 0:
                        raise RingMismatchError(
                            f"variable {self.vars[i]!r} not present in target ring {vars}")
                    ne[pos[i]] = ei
            out[tuple(ne)] = c
        return MultiPoly._raw(vars, out)

    # -- serialization / display ----------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Rational]]:
        """Graded-lexicographic order: by total degree, then exponent tuple."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"exp": list(e), "coef": str(Fraction(c))}
                      for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MultiPoly":
        return cls(tuple(data["vars"]),
                   {tuple(t["exp"]): Fraction(t["coef"]) for t in data["terms"]})

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars}, {str(self)!r})"


def render_poly(poly: MultiPoly,
                weights: Sequence[int] | None = None,
                precedence: Sequence[str] | None = None,
                aliases: Mapping[str, str] | None = None) -> str:
    """Plain text form, e.g. "R7 + 35 R5 + 35 R3 R2 + 84 R3".

    Terms are ordered by descending weighted degree, then lexicographically
    under the given variable precedence (defaults to the ring order).
    """
    if not poly.terms:
        return "0"
    prec = list(precedence) if precedence is not None else list(poly.vars)
    perm = [poly.vars.index(v) for v in prec]

    def key(item):
        e, _ = item
        return (poly.weighted_degree(e, weights), tuple(e[i] for i in perm))

    parts = []
    for e, c in sorted(poly.terms.items(), key=key, reverse=True):
        factors = []
        for i in perm:
            if e[i]:
                name = aliases.get(poly.vars[i], poly.vars[i]) if aliases else poly.vars[i]
                factors.append(name if e[i] == 1 else f"{name}^{e[i]}")
        mag = abs(c) if isinstance(c, int) else abs(Fraction(c))
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = " ".join(factors)
        else:
            body = f"{mag} " + " ".join(factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


class TruncSeries:
    """Power series in one formal variable z, truncated at a known order.

    coeffs[j] is the MultiPoly coefficient of z^j, for 0 <= j <= order.
    Binary operations on series of different orders keep the minimum order.
    """

    __slots__ = ("vars", "order", "coeffs")

    def __init__(self, vars: Sequence[str], order: int, coeffs: Iterable[MultiPoly | Rational]):
        self.vars = tuple(vars)
        self.order = order
        lifted = []
        for c in coeffs:
            if not isinstance(c, MultiPoly):
                c = MultiPoly.const(self.vars, c)
            elif c.vars != self.vars:
                raise RingMismatchError(f"{c.vars} vs {self.vars}")
            lifted.append(c)
        if len(lifted) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(lifted)}")
        self.coeffs = lifted

    @classmethod
    def constant(cls, vars: Sequence[str], value, order: int) -> "TruncSeries":
        vars = tuple(vars)
        zero = MultiPoly.zero(vars)
        first = value if isinstance(value, MultiPoly) else MultiPoly.const(vars, value)
        return cls(vars, order, [first] + [zero] * order)

    @classmethod
    def z(cls, vars: Sequence[str], order: int) -> "TruncSeries":
        vars = tuple(vars)
        zero = MultiPoly.zero(vars)
        coeffs = [zero, MultiPoly.const(vars, 1)] + [zero] * (order - 1)
        return cls(vars, order, coeffs[: order + 1])

    @classmethod
    def from_coeffs(cls, vars: Sequence[str], coeffs: Sequence, order: int) -> "TruncSeries":
        """Build from leading coefficients, zero-padding up to the order."""
        vars = tuple(vars)
        zero = MultiPoly.zero(vars)
        padded = list(coeffs[: order + 1]) + [zero] * (order + 1 - len(coeffs))
        return cls(vars, order, padded)

    def coeff(self, j: int) -> MultiPoly:
        if j > self.order:
            raise IndexError(f"coefficient {j} beyond truncation order {self.order}")
        return self.coeffs[j] if j >= 0 else MultiPoly.zero(self.vars)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(f"cannot extend truncation order {self.order} to {order}")
        return TruncSeries(self.vars, order, self.coeffs[: order + 1])

    def _align(self, other: "TruncSeries") -> tuple["TruncSeries", "TruncSeries"]:
        if self.vars != other.vars:
            raise RingMismatchError(f"{self.vars} vs {other.vars}")
        n = min(self.order, other.order)
        return self.truncate(n), other.truncate(n)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        a, b = self._align(other)
        return TruncSeries(a.vars, a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        a, b = self._align(other)
        return TruncSeries(a.vars, a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        a, b = self._align(other)
        n = a.order
        out = [MultiPoly.zero(a.vars) for _ in range(n + 1)]
        for i, ci in enumerate(a.coeffs):
            if ci.is_zero():
                continue
            for j in range(0, n - i + 1):
                cj = b.coeffs[j]
                if not cj.is_zero():
                    out[i + j] = out[i + j] + ci * cj
        return TruncSeries(a.vars, n, out)

    def scale(self, value) -> "TruncSeries":
        return TruncSeries(self.vars, self.order, [c * value for c in self.coeffs])

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruncSeries) and self.vars == other.vars
                and self.order == other.order and self.coeffs == other.coeffs)

    def matches(self, other: "TruncSeries") -> bool:
        """Coefficient-wise agreement up to the smaller truncation order."""
        a, b = self._align(other)
        return a.coeffs == b.coeffs

    def derivative(self) -> "TruncSeries":
        """d/dz; the truncation order drops by one."""
        if self.order == 0:
            return TruncSeries(self.vars, 0, [MultiPoly.zero(self.vars)])
        return TruncSeries(self.vars, self.order - 1,
                           [self.coeffs[j] * j for j in range(1, self.order + 1)])

    def shift_down(self) -> "TruncSeries":
        """Divide by z (constant term must vanish); order drops by one."""
        if not self.coeffs[0].is_zero():
            raise ValueError("cannot divide by z: nonzero constant term")
        return TruncSeries(self.vars, self.order - 1, self.coeffs[1:])

    def shift_up(self) -> "TruncSeries":
        """Multiply by z; order grows by one."""
        return TruncSeries(self.vars, self.order + 1,
                           [MultiPoly.zero(self.vars)] + self.coeffs)

    def reciprocal(self) -> "TruncSeries":
        """Multiplicative inverse; the constant term must be a nonzero rational."""
        c0 = self.coeffs[0]
        if not c0.is_constant() or c0.is_zero():
            raise ValueError("reciprocal needs a nonzero constant leading coefficient")
        inv0 = Fraction(1, 1) / Fraction(c0.constant_value())
        out = [MultiPoly.const(self.vars, inv0)]
        for n in range(1, self.order + 1):
            acc = MultiPoly.zero(self.vars)
            for i in range(1, n + 1):
                if not self.coeffs[i].is_zero():
                    acc = acc + self.coeffs[i] * out[n - i]
            out.append(acc * (-inv0))
        return TruncSeries(self.vars, self.order, out)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """self(inner(z)); inner must have zero constant term."""
        if self.vars != inner.vars:
            raise RingMismatchError(f"{self.vars} vs {inner.vars}")
        if not inner.coeffs[0].is_zero():
            raise ValueError("composition needs inner constant term 0")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = TruncSeries.constant(self.vars, self.coeffs[n], n)
        for j in range(n - 1, -1, -1):
            result = result * inner + TruncSeries.constant(self.vars, self.coeffs[j], n)
        return result

    def pow(self, k: int) -> "TruncSeries":
        result = TruncSeries.constant(self.vars, 1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def map_coeffs(self, fn: Callable[[MultiPoly], MultiPoly]) -> "TruncSeries":
        return TruncSeries(self.vars, self.order, [fn(c) for c in self.coeffs])

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "TruncSeries":
        coeffs = [MultiPoly.from_json(c) for c in data["coeffs"]]
        return cls(coeffs[0].vars, data["order"], coeffs)

    def __repr__(self) -> str:
        inner = " , ".join(str(c) for c in self.coeffs)
        return f"TruncSeries(order={self.order}; {inner})"


def geometric_series(vars: Sequence[str], c: MultiPoly | Rational, order: int) -> TruncSeries:
    """1/(1 - c z) = sum_j c^j z^j."""
    vars = tuple(vars)
    if not isinstance(c, MultiPoly):
        c = MultiPoly.const(vars, c)
    coeffs = [MultiPoly.const(vars, 1)]
    for _ in range(order):
        coeffs.append(coeffs[-1] * c)
    return TruncSeries(vars, order, coeffs)


def linear_series(vars: Sequence[str], c: MultiPoly | Rational, order: int) -> TruncSeries:
    """The polynomial 1 - c z viewed as a truncated series."""
    vars = tuple(vars)
    if not isinstance(c, MultiPoly):
        c = MultiPoly.const(vars, c)
    return TruncSeries.from_coeffs(vars, [MultiPoly.const(vars, 1), -c], order)


def lagrange_coeff(F: TruncSeries, phi: TruncSeries, n: int) -> MultiPoly:
    """[z^n] F(w) where w = z phi(w): equals (1/n) [y^(n-1)] F'(y) phi(y)^n."""
    if n < 1:
        raise ValueError("Lagrange coefficient extraction needs n >= 1")
    c0 = phi.coeffs[0]
    if not c0.is_constant() or c0.is_zero():
        raise ValueError("phi must have an invertible (nonzero rational) constant term")
    prod = F.derivative() * phi.pow(n)
    if n - 1 > prod.order:
        raise ValueError(f"series order too small for [y^{n - 1}]")
    return prod.coeff(n - 1) / n


def compositional_inverse(A: TruncSeries) -> TruncSeries:
    """B with A(B(z)) = z up to the truncation order; A = a1 z + ... with a1 invertible."""
    if not A.coeffs[0].is_zero():
        raise ValueError("compositional inverse needs zero constant term")
    a1 = A.coeffs[1]
    if not a1.is_constant() or a1.is_zero():
        raise ValueError("compositional inverse needs invertible linear coefficient")
    # A = z * alpha(z); B satisfies B = z * phi(B) with phi = 1/alpha.
    phi = A.shift_down().reciprocal()
    zero = MultiPoly.zero(A.vars)
    coeffs = [zero]
    power = TruncSeries.constant(A.vars, 1, phi.order)
    for n in range(1, A.order + 1):
        power = power * phi
        coeffs.append(power.coeff(n - 1) / n)
    return TruncSeries(A.vars, A.order, coeffs)


# -- exact linear algebra (used for character-polynomial solving,
#    interpolation, and determinant evaluation) --------------------------


def exact_det(matrix: Sequence[Sequence[Rational]]) -> Rational:
    """Determinant by fraction-free-ish Gaussian elimination over Fraction."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return ratio(det)


def exact_solve(rows: Sequence[Sequence[Rational]], rhs: Sequence[Rational]) -> list[Rational]:
    """Solve an overdetermined consistent system with full column rank exactly.

    Raises SingularMatrixError on rank deficiency or inconsistency.
    """
    if not rows:
        raise SingularMatrixError("empty system")
    ncols = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    nrows = len(aug)
    row_at = 0
    pivots = []
    for col in range(ncols):
        pivot = next((r for r in range(row_at, nrows) if aug[r][col]), None)
        if pivot is None:
            raise SingularMatrixError(f"rank deficient at column {col}")
        aug[row_at], aug[pivot] = aug[pivot], aug[row_at]
        inv = 1 / aug[row_at][col]
        aug[row_at] = [a * inv for a in aug[row_at]]
        for r in range(nrows):
            if r != row_at and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[row_at])]
        pivots.append(col)
        row_at += 1
    for r in range(row_at, nrows):
        if aug[r][ncols]:
            raise SingularMatrixError("inconsistent system")
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = aug[i][ncols]
    return [ratio(x) for x in sol]


def column_rank(rows: Sequence[Sequence[Rational]]) -> int:
    """Rank of the matrix over the rationals."""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [a * inv for a in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == min(len(work), ncols):
            break
    return rank


def dumps(obj: MultiPoly | TruncSeries, indent: int | None = None) -> str:
    return json.dumps(obj.to_json(), indent=indent)
