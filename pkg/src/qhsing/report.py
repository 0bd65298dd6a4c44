"""Full analysis pipeline and its serialized report."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .catalog import TypeTag
from .errors import NotIsolated, OutOfRange
from .exactpoly import IntPoly, Poly, format_rat, parse_polynomial
from .linktopo import LinkClass, classify_link, delta_at_one, recognize_type
from .milnor import (
    CycloFactorization,
    Spectrum,
    characteristic_polynomial,
    is_isolated,
    milnor_number,
    poincare_polynomial,
    spectrum,
)
from .residue import LiftReport, lift_verdict
from .weights import WeightSystem, find_weights, newton_distance


@dataclass(frozen=True)
class AnalysisReport:
    text: str
    variables: tuple[str, ...]
    poly: Poly
    p: Fraction
    weights: WeightSystem
    mu: int
    poincare: IntPoly
    spectrum: Spectrum
    delta: CycloFactorization
    link: LinkClass
    type_tag: TypeTag
    lift: LiftReport

    @property
    def n(self) -> int:
        return len(self.variables) - 1

    def to_dict(self) -> dict[str, Any]:
        w = self.weights
        lift = self.lift
        return {
            "input": {
                "polynomial": self.text,
                "canonical": self.poly.to_string(self.variables),
                "variables": list(self.variables),
                "n": self.n,
                "p": format_rat(self.p),
            },
            "weights": {
                "a": [format_rat(x) for x in w.a],
                "d": w.d,
                "q": list(w.q),
                "Q": w.Q,
                "kappa": format_rat(w.kappa),
                "newton_distance": format_rat(newton_distance(w)),
                "unique": w.unique,
            },
            "invariants": {
                "type": str(self.type_tag),
                "milnor_number": self.mu,
                "poincare_polynomial": self.poincare.to_string(),
                "poincare_coefficients": list(self.poincare.coeffs),
                "spectrum": [
                    {"value": format_rat(a), "multiplicity": m} for a, m in self.spectrum.entries
                ],
                "characteristic_polynomial": {
                    "factors": [{"k": k, "multiplicity": m} for k, m in self.delta.factors],
                    "factored": self.delta.to_string(),
                    "expanded": self.delta.expand().to_string(),
                    "coefficients": list(self.delta.expand().coeffs),
                },
            },
            "link": {
                "n": self.link.n,
                "delta_at_one": self.link.delta_at_one,
                "sphere": self.link.sphere,
                "sphere_reason": self.link.sphere_reason,
                "rational_sphere": self.link.rational_sphere,
            },
            "lift": {
                "p": format_rat(lift.p),
                "kappa": format_rat(lift.kappa),
                "kappa_criterion": lift.kappa_criterion,
                "spectrum_criterion": lift.spectrum_criterion,
                "rational_sphere_criterion": lift.rational_sphere_criterion,
                "lifts_to_IH": lift.lifts_to_IH,
                "lifts_to_cohomology": lift.lifts_to_cohomology,
                "chosen_m": lift.chosen_m,
                "alpha": None if lift.alpha is None else format_rat(lift.alpha),
                "chosen_m_corollary": lift.chosen_m_corollary,
                "target_group": None if lift.target is None else lift.target.tag.value,
                "notes": list(lift.notes),
            },
            "meta": {"tool": "qhsing", "version": __version__},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_markdown(self) -> str:
        doc = self.to_dict()
        inv = doc["invariants"]
        wts = doc["weights"]
        lift = doc["lift"]
        link = doc["link"]
        spec = ", ".join(
            e["value"] if e["multiplicity"] == 1 else f"{e['value']} (x{e['multiplicity']})"
            for e in inv["spectrum"]
        )
        lines = [
            f"# Singularity report: `{doc['input']['canonical']}`",
            "",
            f"- variables: {', '.join(doc['input']['variables'])} (n = {doc['input']['n']})",
            f"- type: {inv['type']}",
            "",
            "## Weights",
            "",
            f"- a = ({', '.join(wts['a'])}){'' if wts['unique'] else ' [not unique: minimum-norm choice]'}",
            f"- d = {wts['d']}, q = ({', '.join(map(str, wts['q']))}), Q = {wts['Q']}",
            f"- kappa = {wts['kappa']}, Newton distance = {wts['newton_distance']}",
            "",
            "## Invariants",
            "",
            f"- Milnor number: {inv['milnor_number']}",
            f"- Poincare polynomial: {inv['poincare_polynomial']}",
            f"- spectrum: {spec}",
            f"- Delta(t) = {inv['characteristic_polynomial']['factored']}"
            f" = {inv['characteristic_polynomial']['expanded']}",
            "",
            "## Link",
            "",
            f"- Delta(1) = {link['delta_at_one']}",
            f"- sphere: {link['sphere']} ({link['sphere_reason']})",
            f"- rational homology sphere: {'yes' if link['rational_sphere'] else 'no'}",
            "",
            f"## Residue lift (p = {lift['p']})",
            "",
            f"- kappa > 1: {_yn(lift['kappa_criterion'])}",
            f"- 0 not in spectrum: {_yn(lift['spectrum_criterion'])}",
            f"- Delta(1) != 0: {_yn(lift['rational_sphere_criterion'])}",
            f"- lifts to intersection homology: {lift['lifts_to_IH']}",
            f"- lifts to cohomology: {lift['lifts_to_cohomology']}",
        ]
        if lift["chosen_m"] is not None:
            lines.append(f"- scaling m = {lift['chosen_m']}, alpha = {lift['alpha']}")
        if lift["target_group"] is not None:
            lines.append(f"- L_p-cohomology computes: {lift['target_group']}")
        lines += ["", "Notes:", ""] + [f"- {note}" for note in lift["notes"]]
        lines += ["", f"_{doc['meta']['tool']} {doc['meta']['version']}_", ""]
        return "\n".join(lines)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _natural_key(name: str) -> list:
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name)]


def infer_variables(text: str) -> list[str]:
    """Identifiers occurring in ``text``, in natural sort order (z2 before z10)."""
    names = set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text))
    return sorted(names, key=_natural_key)


def analyze(text: str, variables: Sequence[str] | None = None, p: Fraction | int | str = 2) -> AnalysisReport:
    """Run parse -> weights -> isolatedness -> Milnor algebra -> link -> residue lift."""
    variables = tuple(variables) if variables else tuple(infer_variables(text))
    p = Fraction(p)
    poly = parse_polynomial(text, variables)
    w = find_weights(poly)
    if len(variables) < 2:
        raise OutOfRange("the analysis needs at least two variables (n >= 1)")
    if not is_isolated(poly, w):
        raise NotIsolated("the origin is not an isolated critical point")
    mu = milnor_number(w)
    poincare = poincare_polynomial(w)
    spec = spectrum(w)
    delta = characteristic_polynomial(w)
    if not (poincare(1) == mu == delta.mu == spec.mu):
        raise AssertionError("Milnor number, Poincare polynomial and Delta disagree")
    n = w.n
    link = classify_link(delta, n)
    tag = recognize_type(w, mu)
    lift = lift_verdict(w, spec, delta, n, p)
    return AnalysisReport(text, variables, poly, p, w, mu, poincare, spec, delta, link, tag, lift)
