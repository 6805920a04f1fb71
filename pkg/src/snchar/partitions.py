"""Integer partitions, multi-rectangular shapes and their box combinatorics.

Everything downstream (characters, cumulants, character polynomials) consumes
the quantities defined here: contents, hook lengths, conjugacy class sizes and
the interlacing minima/maxima of the rotated Young diagram.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing list of positive integers; the empty tuple is the
    unique partition of 0."""

    parts: tuple[int, ...]

    def __post_init__(self):
        prev = None
        for a in self.parts:
            if not isinstance(a, int) or a < 1:
                raise ValueError(f"partition parts must be positive integers, got {a!r}")
            if prev is not None and a > prev:
                raise ValueError(f"parts must be weakly decreasing, got {prev} before {a}")
            prev = a

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for a in self.parts:
            for j in range(a):
                cols[j] += 1
        return Partition(tuple(cols))

    def boxes(self) -> Iterator[tuple[int, int]]:
        """All boxes as 1-indexed (row, column) pairs."""
        for i, a in enumerate(self.parts, start=1):
            for j in range(1, a + 1):
                yield (i, j)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a in self.parts:
            out[a] = out.get(a, 0) + 1
        return out


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and build a partition; unsorted input is rejected, not sorted."""
    return Partition(tuple(parts))


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated form, e.g. "4,3,3,3,1"; "" is the empty partition."""
    text = text.strip()
    if not text:
        return Partition(())
    return Partition(tuple(int(tok) for tok in text.split(",")))


@dataclass(frozen=True)
class MultiRect:
    """The staircase shape with p[i] parts of size q[i], q strictly decreasing."""

    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self):
        if len(self.p) != len(self.q) or not self.p:
            raise ValueError("p and q must be nonempty and of equal length")
        if any(not isinstance(a, int) or a < 1 for a in self.p + self.q):
            raise ValueError("p and q entries must be positive integers")
        if any(self.q[i] <= self.q[i + 1] for i in range(len(self.q) - 1)):
            raise ValueError(f"q must be strictly decreasing, got {self.q}")

    @property
    def m(self) -> int:
        return len(self.p)

    @property
    def n(self) -> int:
        return sum(pi * qi for pi, qi in zip(self.p, self.q))

    def __str__(self) -> str:
        return "p=%s;q=%s" % (",".join(map(str, self.p)), ",".join(map(str, self.q)))


def parse_multirect(text: str) -> MultiRect:
    """Parse the "p=1,3,1;q=4,3,1" form."""
    try:
        p_part, q_part = text.split(";")
        p = tuple(int(t) for t in p_part.split("=", 1)[1].split(","))
        q = tuple(int(t) for t in q_part.split("=", 1)[1].split(","))
    except (ValueError, IndexError) as exc:
        raise ValueError(f"cannot parse multi-rectangular shape from {text!r}") from exc
    return MultiRect(p, q)


def expand_shape(s: MultiRect) -> Partition:
    """q_1 repeated p_1 times, then q_2 repeated p_2 times, and so on."""
    parts: list[int] = []
    for pi, qi in zip(s.p, s.q):
        parts.extend([qi] * pi)
    return Partition(tuple(parts))


def as_multirect(shape: Partition | MultiRect) -> MultiRect:
    """Group equal parts of a nonempty partition into a multi-rectangular shape."""
    if isinstance(shape, MultiRect):
        return shape
    if not shape.parts:
        raise ValueError("the empty partition has no multi-rectangular form")
    q: list[int] = []
    p: list[int] = []
    for a in shape.parts:
        if q and q[-1] == a:
            p[-1] += 1
        else:
            q.append(a)
            p.append(1)
    return MultiRect(tuple(p), tuple(q))


@dataclass(frozen=True)
class InterlacingCoords:
    """Local minima and maxima (x-coordinates) of the rotated diagram profile.

    minima and maxima are strictly decreasing and strictly interlace:
    x_1 > y_1 > x_2 > ... > x_{m+1}.
    """

    minima: tuple[int, ...]
    maxima: tuple[int, ...]

    def __post_init__(self):
        if len(self.minima) != len(self.maxima) + 1:
            raise ValueError("need exactly one more minimum than maxima")
        merged = list(itertools.chain.from_iterable(
            itertools.zip_longest(self.minima, self.maxima)))
        merged = [v for v in merged if v is not None]
        if any(merged[i] <= merged[i + 1] for i in range(len(merged) - 1)):
            raise ValueError(f"coordinates do not strictly interlace: {merged}")


def interlacing(s: MultiRect) -> InterlacingCoords:
    """Interlacing coordinates of the shape: x_i = q_i - r_{i-1} (and x_{m+1} = -r_m),
    y_i = q_i - r_i, where r_i = p_1 + ... + p_i."""
    r = list(itertools.accumulate(s.p))
    minima = [s.q[0]]
    maxima = []
    for i in range(s.m):
        maxima.append(s.q[i] - r[i])
        if i + 1 < s.m:
            minima.append(s.q[i + 1] - r[i])
    minima.append(-r[-1])
    return InterlacingCoords(tuple(minima), tuple(maxima))


def shape_from_interlacing(coords: InterlacingCoords) -> MultiRect:
    """Rebuild the multi-rectangular shape; inverse of interlacing()."""
    m = len(coords.maxima)
    p = []
    q = []
    r_prev = 0
    for i in range(m):
        pi = coords.minima[i] - coords.maxima[i]
        p.append(pi)
        q.append(coords.minima[i] + r_prev)
        r_prev += pi
    if coords.minima[m] != -r_prev:
        raise ValueError("last minimum inconsistent with profile closing at -sum(p)")
    return MultiRect(tuple(p), tuple(q))


def contents(lam: Partition) -> list[int]:
    """Multiset of box contents c(u) = column - row (1-indexed boxes)."""
    return [j - i for (i, j) in lam.boxes()]


def hook_lengths(lam: Partition) -> list[int]:
    conj = lam.conjugate().parts
    out = []
    for i, a in enumerate(lam.parts, start=1):
        for j in range(1, a + 1):
            out.append(a - j + conj[j - 1] - i + 1)
    return out


def hook_product(lam: Partition) -> int:
    """Product of all hook lengths; satisfies dimension(lam) * hook_product(lam) = n!."""
    return math.prod(hook_lengths(lam))


@lru_cache(maxsize=None)
def _dimension(parts: tuple[int, ...]) -> int:
    lam = Partition(parts)
    d = math.factorial(lam.n)
    for h in hook_lengths(lam):
        d //= h
    return d


def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of the shape (hook length formula)."""
    return _dimension(lam.parts)


def class_size(lam: Partition) -> int:
    """Number of permutations of cycle type lam in the symmetric group on n symbols."""
    size = math.factorial(lam.n)
    for a, mult in lam.multiplicities().items():
        size //= a ** mult * math.factorial(mult)
    return size


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield Partition(())
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)
