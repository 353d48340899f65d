"""Exact arithmetic on extended rational slopes and the Farey circle.

A slope is a point of Q ∪ {∞} written as a reduced pair p/q with q ≥ 0 and
∞ = 1/0.  Two slopes are joined by an edge of the Farey graph when the
corresponding integer vectors form a basis of Z², i.e. when the 2×2
determinant of the pair is ±1.  All circular-order questions (which of two
slopes comes first along an arc, whether a slope lies inside an arc) are
answered by a three-point orientation predicate built from exact integer
determinants; no floating point is used anywhere.

Convention: the circle is oriented so that 0, 1, ∞ appear in clockwise
order and 0, −1, 1 in counterclockwise order.  Equivalently, moving
clockwise from a finite slope means increasing it, wrapping once through ∞
from the positive to the negative side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key


@dataclass(frozen=True)
class Slope:
    """A reduced extended rational p/q; q = 0 only for the canonical ∞ = 1/0."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 0:
            raise ValueError(f"slope denominator must be non-negative, got {self.den}")
        if self.den == 0 and self.num != 1:
            raise ValueError(f"infinity must be canonical 1/0, got {self.num}/0")
        if math.gcd(abs(self.num), self.den) != 1:
            raise ValueError(f"slope {self.num}/{self.den} is not reduced")

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinity:
            raise ValueError("infinity has no finite value")
        return Fraction(self.num, self.den)

    def __neg__(self) -> Slope:
        # -inf is identified with inf (one projective point).
        if self.is_infinity:
            return self
        return Slope(-self.num, self.den)

    def __str__(self) -> str:
        if self.is_infinity:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)


def reduce(p: int, q: int) -> Slope:
    """Canonical slope equal to p/q: gcd removed, sign carried by p, ∞ = 1/0."""
    if p == 0 and q == 0:
        raise ValueError("0/0 is not a slope")
    if q == 0:
        return INFINITY
    if q < 0:
        p, q = -p, -q
    g = math.gcd(abs(p), q)
    return Slope(p // g, q // g)


def from_rational(x: Fraction | int) -> Slope:
    f = Fraction(x)
    return Slope(f.numerator, f.denominator)


def parse_slope(text: str) -> Slope:
    """Parse ``p/q``, a bare integer ``n``, or ``inf``.

    Inverse of str() on canonical slopes, but accepts unreduced input.
    """
    text = text.strip()
    if text in ("inf", "-inf"):
        return INFINITY
    if "/" in text:
        num_part, den_part = text.split("/", 1)
        return reduce(int(num_part), int(den_part))
    return reduce(int(text), 1)


def det(a: Slope, b: Slope) -> int:
    """Determinant of the integer vectors behind a and b.

    Zero exactly when a = b; the pair is a Farey edge exactly when this
    is ±1.
    """
    return a.num * b.den - a.den * b.num


def is_farey_adjacent(a: Slope, b: Slope) -> bool:
    return abs(det(a, b)) == 1


def basis_completion(s: Slope) -> tuple[int, int]:
    """Some integer vector (u, v) with det((p, q), (u, v)) = p·v − q·u = 1.

    Every Farey neighbor of s is (u + k·p, v + k·q) for a unique k ∈ Z, and
    increasing k sweeps the neighbors clockwise once around the circle.
    """
    # Extended Euclid on (p, q); the canonical q ≥ 0 makes the sweep direction
    # independent of s.
    p, q = s.num, s.den
    old_r, r = p, q
    old_s, sc = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, sc = sc, old_s - quotient * sc
        old_t, t = t, old_t - quotient * t
    # old_r = gcd = ±1 and p·old_s + q·old_t = old_r.
    if old_r == -1:
        old_s, old_t = -old_s, -old_t
    # p·old_s + q·old_t = 1; we want p·v − q·u = 1, so v = old_s, u = −old_t.
    return (-old_t, old_s)


def orientation(a: Slope, b: Slope, c: Slope) -> int:
    """+1 if a, b, c appear in clockwise circular order, −1 if counterclockwise.

    The three slopes must be pairwise distinct.  Sanity anchors: (0, 1, ∞)
    is clockwise, (0, −1, 1) is counterclockwise.
    """
    if a == b or b == c or a == c:
        raise ValueError(f"orientation needs three distinct slopes, got {a}, {b}, {c}")
    product = det(a, b) * det(b, c) * det(c, a)
    return 1 if product > 0 else -1


class Direction(Enum):
    CLOCKWISE = "clockwise"
    COUNTERCLOCKWISE = "counterclockwise"

    @property
    def sign(self) -> int:
        return 1 if self is Direction.CLOCKWISE else -1


class Openness(Enum):
    OPEN = "open"                          # neither endpoint belongs to the arc
    HALF_OPEN_AT_TO = "half-open-at-to"    # `to` belongs, `from` does not
    CLOSED = "closed"                      # both endpoints belong


@dataclass(frozen=True)
class SlopeArc:
    """An arc of the circle traversed from `start` to `stop` in `direction`."""

    start: Slope
    stop: Slope
    direction: Direction
    openness: Openness = Openness.OPEN

    def __post_init__(self) -> None:
        if self.start == self.stop:
            raise ValueError("arc endpoints must differ")


def in_arc(x: Slope, arc: SlopeArc) -> bool:
    """Whether x lies on the arc, endpoints included as the openness allows."""
    if x == arc.start:
        return arc.openness is Openness.CLOSED
    if x == arc.stop:
        return arc.openness is not Openness.OPEN
    return orientation(arc.start, x, arc.stop) == arc.direction.sign


def _arc_position_cmp(arc: SlopeArc):
    """Comparator ordering slopes by how far along the arc they sit."""

    def cmp(x: Slope, y: Slope) -> int:
        if x == y:
            return 0
        if x == arc.start or y == arc.stop:
            return -1
        if y == arc.start or x == arc.stop:
            return 1
        return -1 if orientation(arc.start, x, y) == arc.direction.sign else 1

    return cmp_to_key(cmp)


def neighbors_in_arc(s: Slope, arc: SlopeArc, max_denominator: int) -> list[Slope]:
    """All Farey neighbors of s on the arc with denominator ≤ max_denominator.

    Sorted by position along the arc.  The neighbors of ∞ are exactly the
    integers, so an arc touching ∞ holds infinitely many of them regardless
    of any denominator bound; that request is refused loudly.
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be at least 1")
    if s.is_infinity:
        if arc.start.is_infinity or arc.stop.is_infinity or in_arc(INFINITY, arc):
            raise ValueError("infinitely many integer neighbors of inf in this arc")
        lo = min(arc.start.as_fraction(), arc.stop.as_fraction())
        hi = max(arc.start.as_fraction(), arc.stop.as_fraction())
        found = [
            reduce(n, 1)
            for n in range(math.floor(lo), math.ceil(hi) + 1)
            if in_arc(reduce(n, 1), arc)
        ]
    else:
        u, v = basis_completion(s)
        p, q = s.num, s.den
        # |v + k·q| ≤ bound pins k to a finite window (q ≥ 1 here).
        k_lo = math.ceil(Fraction(-max_denominator - v, q))
        k_hi = math.floor(Fraction(max_denominator - v, q))
        found = []
        for k in range(k_lo, k_hi + 1):
            x = reduce(u + k * p, v + k * q)
            if in_arc(x, arc):
                found.append(x)
    return sorted(found, key=_arc_position_cmp(arc))


@dataclass(frozen=True)
class UnimodularMatrix:
    """Integer 2×2 matrix with determinant ±1, acting on slope vectors."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if abs(self.det) != 1:
            raise ValueError(f"matrix {self.entries} has determinant {self.det}")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def identity(cls) -> UnimodularMatrix:
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, k: int) -> UnimodularMatrix:
        """[[1, k], [0, 1]]: adds k to finite slopes and fixes ∞."""
        return cls(1, k, 0, 1)

    def __matmul__(self, other: UnimodularMatrix) -> UnimodularMatrix:
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


def apply_unimodular(m: UnimodularMatrix, s: Slope) -> Slope:
    """Image of s under the projective action of m."""
    return reduce(m.a * s.num + m.b * s.den, m.c * s.num + m.d * s.den)
