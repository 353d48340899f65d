"""Legendrian surgery chains and stabilization certificates.

Negative contact surgery on a Legendrian knot unrolls into a chain of
Legendrian surgeries: expand the coefficient as [r0, ..., rn] in standard
negative continued fraction form, stabilize the knot |r0+1| times, then
each successive push-off |ri+2| times.  Which way each stabilization goes
is a free choice, and the resulting rotation numbers, scaled into Chern
class evaluations, certify that the contact structures built from
different choices are pairwise distinct.

Only the three base knots the classification needs are modeled (all genus
one or unknotted): the standard tb = −3 figure-eight, its tb = n
approximations in an overtwisted background, and the linked pair behind
the positive-coefficient construction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .cfrac import Form, neg_cfrac


class Family(Enum):
    PSI_STD = "PsiStd"
    PHI_OVERTWISTED = "PhiOvertwisted"
    POSITIVE_R = "PositiveR"


@dataclass(frozen=True)
class LegendrianComponent:
    """One chain component: classical invariants plus its stabilization budget.

    `tb` and `base_rot` may be rational for rationally null-homologous
    knots (`homology_order` > 1); stabilizing shifts the rotation number by
    ±1 either way.
    """

    tb: Fraction
    base_rot: Fraction
    stab_budget: int
    homology_order: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "tb", Fraction(self.tb))
        object.__setattr__(self, "base_rot", Fraction(self.base_rot))
        if self.stab_budget < 0:
            raise ValueError("stabilization budget cannot be negative")
        if self.homology_order < 1:
            raise ValueError("homology order must be positive")

    def rot_choices(self) -> list[Fraction]:
        """Reachable rotation numbers: base − b, base − b + 2, ..., base + b."""
        b = self.stab_budget
        return [self.base_rot - b + 2 * j for j in range(b + 1)]


@dataclass(frozen=True)
class LegendrianChain:
    components: tuple[LegendrianComponent, ...]
    source_coefficient: Fraction

    def __post_init__(self) -> None:
        # Budgets are pinned to the standard expansion of the coefficient.
        digits = neg_cfrac(self.source_coefficient, Form.STANDARD).digits
        expected = [abs(digits[0] + 1)] + [abs(d + 2) for d in digits[1:]]
        actual = [c.stab_budget for c in self.components]
        if actual != expected:
            raise ValueError(f"budgets {actual} do not match expansion {list(digits)}")


@dataclass(frozen=True)
class StabilizationTuple:
    """One rotation number per chain component."""

    rots: tuple[Fraction, ...]


@dataclass(frozen=True)
class ChernCertificate:
    """Distinguishing invariant of one contact structure.

    Within a fixed family and surgery coefficient, structures coincide
    exactly when their evaluation lists do.
    """

    family: Family
    evaluations: tuple[Fraction, ...]
    scale: int


def figure_eight_standard() -> LegendrianComponent:
    """The maximal-tb Legendrian figure-eight in the standard tight structure."""
    return LegendrianComponent(tb=Fraction(-3), base_rot=Fraction(0), stab_budget=0)


def legendrian_approximation(n: int, sign: int) -> LegendrianComponent:
    """Genus-one approximation with tb = n and rot = ∓(n − 1).

    `sign` picks which of the two mirror-image knots: +1 gives rot
    −(n − 1), −1 gives +(n − 1).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return LegendrianComponent(tb=Fraction(n), base_rot=Fraction(-sign * (n - 1)), stab_budget=0)


def positive_surgery_pair() -> tuple[LegendrianComponent, LegendrianComponent]:
    """The linked pair (L, L′) behind the positive-coefficient construction.

    L is an unknotted component with (tb, rot) = (−1, 0) carrying the
    r-dependent contact coefficient; L′ has (tb, rot) = (1, 0) and always
    carries contact coefficient −2.
    """
    l_component = LegendrianComponent(tb=Fraction(-1), base_rot=Fraction(0), stab_budget=0)
    l_prime = LegendrianComponent(tb=Fraction(1), base_rot=Fraction(0), stab_budget=0)
    return l_component, l_prime


def ding_geiges(r: Fraction | int, base: LegendrianComponent) -> LegendrianChain:
    """Unroll contact r-surgery (r < 0) on `base` into a Legendrian chain.

    Component 0 keeps the base knot's invariants with budget |r0 + 1|;
    each later component is a push-off of its predecessor with budget
    |ri + 2|.
    """
    r = Fraction(r)
    if r >= 0:
        raise ValueError(f"the unrolling needs a negative coefficient, got {r}")
    digits = neg_cfrac(r, Form.STANDARD).digits
    components = [replace(base, stab_budget=abs(digits[0] + 1))]
    for d in digits[1:]:
        components.append(replace(components[-1], stab_budget=abs(d + 2)))
    return LegendrianChain(tuple(components), r)


def stabilization_tuples(chain: LegendrianChain) -> list[StabilizationTuple]:
    """Every way to spend the budgets, as per-component rotation numbers.

    Components choose independently, so the list has Π(budget + 1)
    entries, ordered lattice-fashion with each slot ascending.
    """
    choices = [component.rot_choices() for component in chain.components]
    return [StabilizationTuple(tuple(combo)) for combo in itertools.product(*choices)]


def chain_budgets(r_contact: Fraction | int) -> tuple[int, ...]:
    """The stabilization budgets of the chain for contact r-surgery, r < 0."""
    r = Fraction(r_contact)
    if r >= 0:
        raise ValueError(f"contact coefficient must be negative, got {r}")
    digits = neg_cfrac(r, Form.STANDARD).digits
    return (abs(digits[0] + 1), *(abs(d + 2) for d in digits[1:]))


def choice_count(r_contact: Fraction | int) -> int:
    """Number of stabilization choices for contact r-surgery, r < 0."""
    return math.prod(b + 1 for b in chain_budgets(r_contact))


def phi_family_tuples(r: Fraction, n: int) -> list[StabilizationTuple]:
    """Rotation tuples distinguishing the overtwisted-background structures.

    For non-integral r in the window (n, n+1) with n ≤ −1, the two
    candidate knots arise as the stabilizations of a virtual rot = 0 knot,
    so the whole family is the stabilization lattice of the chain for
    contact −1/(1−s)-surgery on that virtual base, where s = n + 1 − r.
    The first budget is then at least 1 and the list has Φ(r) entries.
    """
    r = Fraction(r)
    if r.denominator == 1:
        raise ValueError(f"integral coefficient {r} has no fractional window")
    if n > -1:
        raise ValueError(f"window integer must be at most -1, got {n}")
    if not n < r < n + 1:
        raise ValueError(f"{r} is not in the window ({n}, {n + 1})")
    s = n + 1 - r
    virtual_base = LegendrianComponent(
        tb=Fraction(1), base_rot=Fraction(0), stab_budget=0, homology_order=abs(n)
    )
    return stabilization_tuples(ding_geiges(-1 / (1 - s), virtual_base))


def chern_certificate(family: Family, tup: StabilizationTuple, scale: int) -> ChernCertificate:
    """Scale a rotation tuple into Chern evaluations.

    The scale is the homology order |n| for the overtwisted-background
    family and must be 1 for the other two.
    """
    if scale < 1:
        raise ValueError("scale must be positive")
    if family is not Family.PHI_OVERTWISTED and scale != 1:
        raise ValueError(f"family {family.value} does not scale evaluations")
    return ChernCertificate(family, tuple(scale * rot for rot in tup.rots), scale)


def smooth_framing_check(r: Fraction | int) -> bool:
    """Replay the Kirby moves identifying the positive-r diagram with M(r).

    Checks, with exact fractions: the contact-to-smooth conversions
    (contact 1/(1−r) on tb = −1 gives smooth r/(1−r); contact −2 on
    tb = 1 gives smooth −1), the right-handed Rolfsen twist returning
    r/(1−r) to r, the blowdown of the −1-framed algebraically unlinked
    component, and the first-homology order |det| = |numerator of r|.
    For r = 1 the twisting component is erased and only the rest applies.
    """
    r = Fraction(r)
    if r < 1:
        raise ValueError(f"the positive-coefficient diagram needs r >= 1, got {r}")
    checks = [Fraction(-2) + 1 == Fraction(-1)]  # contact −2 on tb = 1
    if r == 1:
        # Only the −1-framed unknot remains; blowing it down leaves the
        # surgery coefficient 1 untouched (linking number zero).
        determinant = r.numerator * -1
    else:
        smooth = 1 / (1 - r) + (-1)  # contact coefficient plus tb
        checks.append(smooth == r / (1 - r))
        twisted = Fraction(smooth.numerator, smooth.denominator + smooth.numerator)
        checks.append(twisted == r)
        # The companion is algebraically unlinked, so the twist keeps its
        # framing at −1 and the blowdown shifts nothing: lk² = 0.
        checks.append(twisted + 0 == r)
        determinant = smooth.numerator * -1
    checks.append(abs(determinant) == abs(r.numerator))
    return all(checks)


def component_as_json(component: LegendrianComponent) -> dict[str, object]:
    return {
        "tb": str(component.tb),
        "rot": str(component.base_rot),
        "budget": component.stab_budget,
    }


def chain_as_json(chain: LegendrianChain) -> list[dict[str, object]]:
    return [component_as_json(c) for c in chain.components]


def tuple_as_json(tup: StabilizationTuple) -> list[str]:
    return [str(rot) for rot in tup.rots]
