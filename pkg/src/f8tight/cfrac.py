"""Negative continued fractions and the two tight-count functions built on them.

A negative continued fraction expands a rational as

    x = r0 - 1/(r1 - 1/(... - 1/rn))

with all ri integers.  Two normal forms appear here, differing only in
which end carries the relaxed digit:

* STANDARD:     r0 ≤ −1 and ri ≤ −2 for i ≥ 1; defined for every rational
  x < 0 and unique there (floor-greedy expansion).
* SOLID_TORUS:  ri ≤ −2 for i < n and rn ≤ −1; defined for x ≤ −1.  This
  shape is not unique on its own ([-3, -1] and [-2] both evaluate to −2),
  so the canonical expansion is again floor-greedy, which on x ≤ −1
  produces the same digit string as STANDARD.

Reversing a digit list swaps the two shapes, and the associated digit
products |r0(r1+1)···(rn+1)| and |(r0+1)···(r_{n-1}+1)rn| swap with them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class Form(Enum):
    STANDARD = "std"
    SOLID_TORUS = "st"


def _digits_valid(digits: tuple[int, ...], form: Form) -> bool:
    if not digits:
        return False
    if form is Form.STANDARD:
        head_ok = digits[0] <= -1
        tail_ok = all(d <= -2 for d in digits[1:])
        return head_ok and tail_ok
    last_ok = digits[-1] <= -1
    rest_ok = all(d <= -2 for d in digits[:-1])
    return last_ok and rest_ok


@dataclass(frozen=True)
class NegContinuedFraction:
    """A digit string together with the normal form it satisfies."""

    digits: tuple[int, ...]
    form: Form

    def __post_init__(self) -> None:
        if not _digits_valid(self.digits, self.form):
            raise ValueError(f"digits {list(self.digits)} violate form {self.form.value}")

    def __str__(self) -> str:
        body = ",".join(str(d) for d in self.digits)
        return f"[{body}]:{self.form.value}"


def parse_cfrac(text: str) -> NegContinuedFraction:
    """Parse the ``[r0,r1,...]:std`` / ``:st`` notation produced by str()."""
    text = text.strip()
    body, _, tag = text.rpartition(":")
    if not body or not tag:
        raise ValueError(f"malformed continued fraction {text!r}")
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"malformed digit list {body!r}")
    digits = tuple(int(part) for part in body[1:-1].split(","))
    forms = {f.value: f for f in Form}
    if tag not in forms:
        raise ValueError(f"unknown form tag {tag!r}")
    return NegContinuedFraction(digits, forms[tag])


def neg_cfrac(x: Fraction | int, form: Form = Form.STANDARD) -> NegContinuedFraction:
    """Floor-greedy expansion of x in the requested normal form.

    STANDARD accepts any rational x < 0; SOLID_TORUS needs x ≤ −1.  On the
    shared domain the digit strings coincide, so the form only widens or
    narrows what inputs are legal.
    """
    x = Fraction(x)
    if form is Form.STANDARD:
        if x >= 0:
            raise ValueError(f"standard expansion needs x < 0, got {x}")
    else:
        if x > -1:
            raise ValueError(f"solid-torus expansion needs x <= -1, got {x}")
    digits: list[int] = []
    current = x
    while True:
        d = math.floor(current)
        digits.append(d)
        remainder = current - d
        if remainder == 0:
            break
        current = -1 / remainder  # remainder ∈ (0, 1) keeps later digits ≤ −2
    return NegContinuedFraction(tuple(digits), form)


def eval_cfrac(cf: NegContinuedFraction) -> Fraction:
    """Exact rational value r0 − 1/(r1 − 1/(… − 1/rn))."""
    value = Fraction(cf.digits[-1])
    for d in reversed(cf.digits[:-1]):
        value = d - 1 / value
    return value


def reverse_cfrac(cf: NegContinuedFraction) -> NegContinuedFraction:
    """Literal digit reversal, landing in the opposite normal form."""
    other = Form.SOLID_TORUS if cf.form is Form.STANDARD else Form.STANDARD
    return NegContinuedFraction(tuple(reversed(cf.digits)), other)


def standard_product(cf: NegContinuedFraction) -> int:
    """|r0 · (r1+1) · … · (rn+1)| for a STANDARD-form fraction."""
    if cf.form is not Form.STANDARD:
        raise ValueError("standard_product expects the standard form")
    product = cf.digits[0]
    for d in cf.digits[1:]:
        product *= d + 1
    return abs(product)


def solid_torus_product(cf: NegContinuedFraction) -> int:
    """|(r0+1) · … · (r_{n-1}+1) · rn| for a SOLID_TORUS-form fraction."""
    if cf.form is not Form.SOLID_TORUS:
        raise ValueError("solid_torus_product expects the solid-torus form")
    product = cf.digits[-1]
    for d in cf.digits[:-1]:
        product *= d + 1
    return abs(product)


def phi(r: Fraction | int) -> int:
    """Per-unit-interval structure count: 1 on integers, ≥ 2 elsewhere.

    Invariant under r ↦ r + 1.  Computed by sliding r into (0, 1] and
    expanding −1/r there.
    """
    r = Fraction(r)
    t = r - math.ceil(r) + 1  # the representative of r mod 1 lying in (0, 1]
    if t == 1:
        return 1
    cf = neg_cfrac(-1 / t, Form.STANDARD)
    return standard_product(cf)


def psi(r: Fraction | int) -> int:
    """Companion count supported on r < −3: ψ(r) = φ(−1/(r+3)), else 0.

    On integers n ≤ −4 this is |n| − 3.
    """
    r = Fraction(r)
    if r >= -3:
        return 0
    return phi(Fraction(-1, 1) / (r + 3))
