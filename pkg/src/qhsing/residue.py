"""Sufficient criteria for lifting the residue class.

Three independent tests are combined:

* kappa > 1: the residue form is L_p-integrable for a conelike metric built
  from the weights, which gives a lift to intersection homology (p = 2) and
  to cohomology (p large);
* 0 not a spectral number: the residue class lifts to intersection homology;
* Delta(1) != 0: the link is a rational homology sphere, so Poincare duality
  is an isomorphism and every residue class lifts to cohomology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import NoLift, OutOfRange
from .linktopo import delta_at_one, recognize_type
from .milnor import CycloFactorization, Spectrum
from .weights import WeightSystem


class Target(str, Enum):
    BOREL_MOORE = "BorelMooreHomology"
    IMAGE_PD = "ImagePD"
    COHOMOLOGY = "Cohomology"


@dataclass(frozen=True)
class TargetGroup:
    tag: Target
    p: Fraction
    n: int


@dataclass
class LiftReport:
    kappa: Fraction
    kappa_criterion: bool
    spectrum_criterion: bool
    rational_sphere_criterion: bool
    lifts_to_IH: str = "unknown"
    lifts_to_cohomology: str = "unknown"
    chosen_m: int | None = None
    alpha: Fraction | None = None
    chosen_m_corollary: int | None = None
    target: TargetGroup | None = None
    p: Fraction = Fraction(2)
    notes: list[str] = field(default_factory=list)


def lp_exponent(p: Fraction | int, m: int, kappa: Fraction | int, n: int) -> Fraction:
    """Homogeneity degree of the integral of |r|^p over the sphere of radius t in u-space."""
    p, kappa = Fraction(p), Fraction(kappa)
    return p * m * (kappa - 1) + (2 - p) * n - 1


def _smallest_m_above(bound: Fraction) -> int:
    """Smallest integer m >= 1 with m > bound."""
    return max(1, math.floor(bound) + 1)


def min_scaling(p: Fraction | int, kappa: Fraction | int, n: int) -> int:
    """Smallest integer scaling m >= 1 making lp_exponent exceed -1."""
    p, kappa = Fraction(p), Fraction(kappa)
    if kappa <= 1:
        raise NoLift(f"kappa = {kappa} <= 1: no scaling makes the residue form L_p-integrable")
    if p < 1:
        raise OutOfRange("p must be at least 1")
    # alpha > -1  <=>  p m (kappa - 1) > (p - 2) n
    m = _smallest_m_above((p - 2) * n / (p * (kappa - 1)))
    assert lp_exponent(p, m, kappa, n) > -1
    return m


def corollary_scaling(p: Fraction | int, kappa: Fraction | int, n: int) -> int:
    """Smallest m >= 1 with m (kappa - 1) > (p - 2) n; stronger than min_scaling by a factor p."""
    p, kappa = Fraction(p), Fraction(kappa)
    if kappa <= 1:
        raise NoLift(f"kappa = {kappa} <= 1")
    return _smallest_m_above((p - 2) * n / (kappa - 1))


def perversity_thresholds(n: int) -> tuple[Fraction, Fraction, Fraction]:
    if n < 2:
        raise OutOfRange(f"the perversity ranges need n >= 2, got n={n}")
    return Fraction(1) + Fraction(1, 2 * n - 1), Fraction(2), 2 + Fraction(2, n - 1)


def perversity_target(p: Fraction | int, n: int) -> TargetGroup:
    """Which group the L_p-cohomology in degree n computes for a conelike metric."""
    p = Fraction(p)
    low, mid, high = perversity_thresholds(n)
    if p < low:
        raise OutOfRange(f"p = {p} is below 1 + 1/(2n-1) = {low}")
    if p < mid:
        tag = Target.BOREL_MOORE
    elif p < high:
        tag = Target.IMAGE_PD
    else:
        tag = Target.COHOMOLOGY
    return TargetGroup(tag, p, n)


# Germs for which a residue class is known not to lift to intersection homology.
KNOWN_NON_LIFTING = {("P8", 2)}


def lift_verdict(
    w: WeightSystem,
    spec: Spectrum,
    delta: CycloFactorization,
    n: int,
    p: Fraction | int = 2,
) -> LiftReport:
    p = Fraction(p)
    kappa = w.kappa
    report = LiftReport(
        kappa=kappa,
        kappa_criterion=kappa > 1,
        spectrum_criterion=0 not in spec,
        rational_sphere_criterion=delta_at_one(delta) != 0,
        p=p,
    )
    notes = report.notes

    if n >= 2:
        try:
            report.target = perversity_target(p, n)
        except OutOfRange as exc:
            notes.append(f"no target group for p={p}: {exc}")
    else:
        notes.append("perversity ranges need n >= 2 (take the normalization for n = 1)")

    if report.kappa_criterion:
        if p >= 1:
            report.chosen_m = min_scaling(p, kappa, n)
            report.alpha = lp_exponent(p, report.chosen_m, kappa, n)
            report.chosen_m_corollary = corollary_scaling(p, kappa, n)
            notes.append(
                f"kappa = {kappa} > 1: residue form is L_{p}-integrable with scaling m = "
                f"{report.chosen_m} (alpha = {report.alpha} > -1); m(kappa-1) > (p-2)n holds from m = "
                f"{report.chosen_m_corollary}"
            )
    if report.spectrum_criterion:
        notes.append("0 is not a spectral number")
    if report.rational_sphere_criterion:
        notes.append(f"Delta(1) = {delta_at_one(delta)} != 0: the link is a rational homology sphere")

    ih_reasons = []
    if report.kappa_criterion:
        ih_reasons.append("kappa")
    if report.spectrum_criterion:
        ih_reasons.append("spectrum")
    if ih_reasons:
        report.lifts_to_IH = "yes"
        notes.append("lift to intersection homology by: " + ", ".join(ih_reasons))

    co_reasons = []
    if report.kappa_criterion:
        if n >= 2:
            p_co = perversity_thresholds(n)[2]
            co_reasons.append(f"kappa (p >= {p_co}, m = {min_scaling(max(p, p_co), kappa, n)})")
        else:
            co_reasons.append("kappa")
    if report.rational_sphere_criterion:
        co_reasons.append("rational homology sphere")
    if co_reasons:
        report.lifts_to_cohomology = "yes"
        notes.append("lift to cohomology by: " + ", ".join(co_reasons))

    if not (ih_reasons or co_reasons):
        notes.append("no criterion applies")
    if not ih_reasons:
        tag = recognize_type(w, delta.mu)
        if (tag.family, n) in KNOWN_NON_LIFTING:
            report.lifts_to_IH = "no"
            notes.append(f"{tag} at n={n}: the class of Res(dz/s) does not lift to intersection homology")
    return report
