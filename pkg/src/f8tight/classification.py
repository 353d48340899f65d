"""Classification verdicts for rational surgeries on the figure-eight knot.

M(r) denotes r-surgery.  The coefficients 0 and ±4 give toroidal
manifolds with infinitely many tight structures; ±1, ±2, ±3 are small
Seifert fibered; everything else is hyperbolic.  On the classified range

    R = ([1, 4) ∪ [5, ∞) ∪ (−∞, −4) ∪ [−3, 0)) ∩ Q

the tight structures are counted exactly: 2Φ(r) for positive r and
Φ(r) + Ψ(r) for negative r, and each one is distinguished by a Chern
evaluation certificate produced here.  On the three gap intervals the
same formulas are only a lower bound and no certificates are emitted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .cfrac import phi, psi
from .slope import Slope
from .surgery_enum import (
    ChernCertificate,
    Family,
    StabilizationTuple,
    chain_budgets,
    chern_certificate,
    ding_geiges,
    figure_eight_standard,
    phi_family_tuples,
    positive_surgery_pair,
    stabilization_tuples,
)

TOROIDAL_COEFFICIENTS = (Fraction(0), Fraction(4), Fraction(-4))


class Geometry(Enum):
    TOROIDAL = "Toroidal"
    SMALL_SEIFERT = "SmallSeifert"
    HYPERBOLIC = "Hyperbolic"


class CountKind(Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    LOWER_BOUND = "lower_bound"


class SteinTag(Enum):
    YES = "Yes"
    UNKNOWN = "Unknown"


class UTTag(Enum):
    YES = "Yes"
    NO = "No"
    CANDIDATE_PAIR = "CandidatePair"


@dataclass(frozen=True)
class TightCount:
    kind: CountKind
    value: int | None = None

    def __post_init__(self) -> None:
        if self.kind is CountKind.INFINITE:
            if self.value is not None:
                raise ValueError("an infinite count carries no value")
        elif self.value is None or self.value < 0:
            raise ValueError(f"{self.kind.value} count needs a non-negative value")


@dataclass(frozen=True)
class ContactStructureCert:
    """One tight structure: its certificate and fillability tags."""

    family: Family
    certificate: ChernCertificate
    stein: SteinTag
    strong: str
    universally_tight: UTTag

    def __post_init__(self) -> None:
        if self.strong != "Yes":
            raise ValueError("every classified structure is strongly fillable")
        if self.family is not self.certificate.family:
            raise ValueError("certificate family mismatch")
        if self.family is Family.PSI_STD and self.universally_tight is not UTTag.NO:
            raise ValueError("structures in the PsiStd family are never universally tight")


@dataclass(frozen=True)
class ClassificationResult:
    coefficient: Slope
    verdict: Geometry
    count: TightCount
    structures: tuple[ContactStructureCert, ...]

    def __post_init__(self) -> None:
        f = self.coefficient.as_fraction()
        if self.count.kind is CountKind.INFINITE and f not in TOROIDAL_COEFFICIENTS:
            raise ValueError("only 0 and ±4 have infinitely many tight structures")
        if self.count.kind is CountKind.LOWER_BOUND and (in_classified_range(f) or f in TOROIDAL_COEFFICIENTS):
            raise ValueError("lower bounds only occur off the classified range")
        if self.count.kind is CountKind.FINITE and self.count.value != len(self.structures):
            raise ValueError("finite count must equal the number of certificates")
        if self.count.kind is not CountKind.FINITE and self.structures:
            raise ValueError("certificates are only attached to finite counts")


def in_classified_range(r: Fraction) -> bool:
    """Membership in R = [1, 4) ∪ [5, ∞) ∪ (−∞, −4) ∪ [−3, 0)."""
    return (1 <= r < 4) or r >= 5 or r < -4 or (-3 <= r < 0)


def geometry_of(r: Slope) -> Geometry:
    """Geometric type of M(r): toroidal, small Seifert fibered, or hyperbolic."""
    f = r.as_fraction()
    if f in TOROIDAL_COEFFICIENTS:
        return Geometry.TOROIDAL
    if f.denominator == 1 and abs(f) <= 3:
        return Geometry.SMALL_SEIFERT
    return Geometry.HYPERBOLIC


def tight_count(r: Slope) -> TightCount:
    """How many tight structures M(r) supports.

    Exact on the classified range (2Φ for positive r, Φ + Ψ for negative),
    infinite at the toroidal coefficients, and otherwise a lower bound
    from the same formulas.
    """
    f = r.as_fraction()
    if f in TOROIDAL_COEFFICIENTS:
        return TightCount(CountKind.INFINITE)
    formula = 2 * phi(f) if f > 0 else phi(f) + psi(f)
    if in_classified_range(f):
        return TightCount(CountKind.FINITE, formula)
    return TightCount(CountKind.LOWER_BOUND, formula)


def _psi_certificates(f: Fraction) -> list[ChernCertificate]:
    """Certificates of the standard-background family, all Ψ(f) of them."""
    chain = ding_geiges(f + 3, figure_eight_standard())
    return [chern_certificate(Family.PSI_STD, t, 1) for t in stabilization_tuples(chain)]


def _phi_certificates(f: Fraction) -> list[ChernCertificate]:
    """Certificates of the overtwisted-background family, all Φ(f) of them."""
    if f.denominator == 1:
        # The two integral candidate surgeries give isotopic structures, so
        # the family is the single fixed point of the sign involution.
        single = StabilizationTuple((Fraction(0),))
        return [chern_certificate(Family.PHI_OVERTWISTED, single, abs(int(f)))]
    n = math.floor(f)
    scale = abs(n)
    return [chern_certificate(Family.PHI_OVERTWISTED, t, scale) for t in phi_family_tuples(f, n)]


def _positive_certificates(f: Fraction) -> list[ChernCertificate]:
    """Certificates for positive coefficients: a sign on L′ times the chain on L."""
    l_component, _ = positive_surgery_pair()
    if f == 1:
        chain_tuples = [StabilizationTuple(())]  # L is erased from the diagram
    else:
        chain = ding_geiges(1 / (1 - f), l_component)
        chain_tuples = stabilization_tuples(chain)
    certificates = []
    for l_prime_rot in (Fraction(-1), Fraction(1)):
        for t in chain_tuples:
            evaluations = StabilizationTuple((l_prime_rot, *t.rots))
            certificates.append(chern_certificate(Family.POSITIVE_R, evaluations, 1))
    return certificates


def _budgets_of(f: Fraction, family: Family) -> tuple[int, ...]:
    """Stabilization budgets behind a family's tuples, for extremality tests."""
    if family is Family.PHI_OVERTWISTED:
        if f.denominator == 1:
            return (0,)
        s = math.floor(f) + 1 - f
        return chain_budgets(-1 / (1 - s))
    if family is Family.POSITIVE_R:
        if f == 1:
            return ()
        return chain_budgets(1 / (1 - f))
    raise ValueError(f"no budget reconstruction for family {family.value}")


def universal_tightness_tag(cert: ChernCertificate, r: Slope) -> UTTag:
    """Tag a certificate as universally tight, not, or an unresolved pair.

    Uniform-sign tuples (every component at an extremal rotation number,
    all nonzero evaluations sharing one sign) are the candidates; they are
    definitely universally tight for negative r and for integral positive
    r, and an unresolved 2-or-4 pair for non-integral positive r.  The
    standard-background family is always virtually overtwisted.
    """
    if cert.family is Family.PSI_STD:
        return UTTag.NO
    f = r.as_fraction()
    rots = [e / cert.scale for e in cert.evaluations]
    if cert.family is Family.POSITIVE_R:
        rots = rots[1:]  # the sign on L′ does not affect universal tightness
    budgets = _budgets_of(f, cert.family)
    extremal = all(abs(rot) == b for rot, b in zip(rots, budgets))
    signs = {1 if rot > 0 else -1 for rot in rots if rot != 0}
    if not extremal or len(signs) > 1:
        return UTTag.NO
    if f < 0 or f.denominator == 1:
        return UTTag.YES
    return UTTag.CANDIDATE_PAIR


def _stein_tag(family: Family, f: Fraction) -> SteinTag:
    if family is Family.PSI_STD or f >= -9:
        return SteinTag.YES
    return SteinTag.UNKNOWN


def enumerate_structures(r: Slope) -> list[ContactStructureCert]:
    """All tight structures on M(r) for r in the classified range.

    Negative coefficients list the standard-background family first, then
    the overtwisted-background one; positive coefficients list the L′ sign
    choices outermost.  The length always equals the finite count.
    """
    f = r.as_fraction()
    if not in_classified_range(f):
        raise ValueError(f"coefficient {r} is outside the classified range")
    if f > 0:
        certificates = _positive_certificates(f)
    else:
        certificates = _psi_certificates(f) if f < -3 else []
        certificates += _phi_certificates(f)
    return [
        ContactStructureCert(
            family=c.family,
            certificate=c,
            stein=_stein_tag(c.family, f),
            strong="Yes",
            universally_tight=universal_tightness_tag(c, r),
        )
        for c in certificates
    ]


def involution(cert: ContactStructureCert) -> ContactStructureCert:
    """The contactomorphism flipping every stabilization choice.

    Negates all evaluations and keeps the family and tags; on each full
    enumeration it acts as a permutation.
    """
    negated = replace(cert.certificate, evaluations=tuple(-e for e in cert.certificate.evaluations))
    return replace(cert, certificate=negated)


def classify(r: Slope) -> ClassificationResult:
    """Full verdict for M(r): geometry, count, and certificates if exact."""
    count = tight_count(r)
    structures: tuple[ContactStructureCert, ...] = ()
    if count.kind is CountKind.FINITE:
        structures = tuple(enumerate_structures(r))
    return ClassificationResult(r, geometry_of(r), count, structures)


def count_as_json(count: TightCount) -> dict[str, object]:
    payload: dict[str, object] = {"kind": count.kind.value}
    if count.value is not None:
        payload["value"] = count.value
    return payload


def structure_as_json(cert: ContactStructureCert) -> dict[str, object]:
    return {
        "family": cert.family.value,
        "evaluations": [str(e) for e in cert.certificate.evaluations],
        "scale": cert.certificate.scale,
        "stein": cert.stein.value,
        "strong": cert.strong,
        "universally_tight": cert.universally_tight.value,
    }


def result_as_json(result: ClassificationResult) -> dict[str, object]:
    """The fixed-field-order JSON form used by the command line."""
    return {
        "coefficient": str(result.coefficient),
        "geometry": result.verdict.value,
        "count": count_as_json(result.count),
        "structures": [structure_as_json(s) for s in result.structures],
    }
