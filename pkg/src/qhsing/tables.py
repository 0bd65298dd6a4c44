"""Regenerate the characteristic-polynomial and weights tables from the normal forms.

Every row is computed: normal form -> weights -> Milnor algebra -> Delta(t).
Nothing is read back from stored answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .catalog import CATALOG, PARABOLIC, TypeTag, catalog_normal_form
from .errors import OutOfRange
from .exactpoly import format_rat
from .linktopo import delta_at_one, table_answers
from .milnor import CycloFactorization, characteristic_polynomial
from .weights import find_weights

DEFAULT_K_RANGE = range(1, 9)


@dataclass(frozen=True)
class DeltaRow:
    tag: TypeTag
    n: int
    modulus: Optional[Fraction]
    delta: CycloFactorization
    sphere: bool             # a) |Delta(1)| = 1
    rational_sphere: bool    # b) Delta(1) != 0

    def as_dict(self) -> dict:
        expanded = self.delta.expand()
        return {
            "type": str(self.tag),
            "n": self.n,
            "modulus": None if self.modulus is None else format_rat(self.modulus),
            "factored": self.delta.to_string(),
            "expanded": expanded.to_string(),
            "coefficients": list(expanded.coeffs),
            "delta_at_one": delta_at_one(self.delta),
            "a": "yes" if self.sphere else "no",
            "b": "yes" if self.rational_sphere else "no",
        }


@dataclass(frozen=True)
class WeightsRow:
    tag: TypeTag
    n: int
    weights: tuple[Fraction, ...]
    kappa: Fraction

    @property
    def kappa_offset(self) -> Fraction:
        return self.kappa - Fraction(self.n, 2)

    def as_dict(self) -> dict:
        off = self.kappa_offset
        formula = "n/2" if off == 0 else f"n/2 + {format_rat(off)}"
        return {
            "type": str(self.tag),
            "n": self.n,
            "weights": [format_rat(a) for a in self.weights],
            "kappa": format_rat(self.kappa),
            "kappa_formula": formula,
        }


def parse_k_range(text: str) -> range:
    """Accept ``"3"``, ``"1..8"`` or ``"1-8"`` (inclusive)."""
    text = text.strip()
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return range(int(lo), int(hi) + 1)
    k = int(text)
    return range(k, k + 1)


def _tags_in_range(k_range: Iterable[int]) -> list[TypeTag]:
    ks = list(k_range)
    if not ks:
        raise OutOfRange("empty k range")
    if min(ks) < 1:
        raise OutOfRange("A_k needs k >= 1")
    tags = [TypeTag("A", k) for k in ks]
    tags += [TypeTag("D", k) for k in ks if k >= 4]
    return tags


def delta_row(tag: TypeTag, n: int, modulus: Fraction | int | None = None) -> DeltaRow:
    poly = catalog_normal_form(tag, n, modulus)
    delta = characteristic_polynomial(find_weights(poly))
    a, b = table_answers(delta)
    mod = None if CATALOG[tag.family].forbidden is None else Fraction(modulus or 0)
    return DeltaRow(tag, n, mod, delta, a, b)


def simple_table(n: int, k_range: Iterable[int] = DEFAULT_K_RANGE) -> list[DeltaRow]:
    if n < 1:
        raise OutOfRange("n must be at least 1")
    tags = _tags_in_range(k_range) + [TypeTag("E6"), TypeTag("E7"), TypeTag("E8")]
    return [delta_row(tag, n) for tag in tags]


def parabolic_table(n: int, modulus: Fraction | int | None = None) -> list[DeltaRow]:
    if n < 1:
        raise OutOfRange("n must be at least 1")
    rows = []
    for fam in PARABOLIC:
        if n >= CATALOG[fam].min_n():
            rows.append(delta_row(TypeTag(fam), n, modulus))
    return rows


def weights_table(n: int, k_range: Iterable[int] = DEFAULT_K_RANGE) -> list[WeightsRow]:
    if n < 1:
        raise OutOfRange("n must be at least 1")
    tags = _tags_in_range(k_range) + [TypeTag(f) for f in ("E6", "E7", "E8", "P8", "X9", "J10")]
    rows = []
    for tag in tags:
        if n < CATALOG[tag.family].min_n():
            continue
        w = find_weights(catalog_normal_form(tag, n))
        rows.append(WeightsRow(tag, n, w.a, w.kappa))
    return rows


def emit_tables(
    which: str, n: int, k_range: Iterable[int] | None = None, modulus: Fraction | int | None = None
) -> list[dict]:
    k_range = DEFAULT_K_RANGE if k_range is None else k_range
    if which == "simple":
        rows = simple_table(n, k_range)
    elif which == "parabolic":
        rows = parabolic_table(n, modulus)
    elif which == "weights":
        rows = weights_table(n, k_range)
    else:
        raise OutOfRange(f"unknown table {which!r}; choose simple, parabolic or weights")
    return [row.as_dict() for row in rows]


def render_markdown(which: str, rows: list[dict]) -> str:
    if which == "weights":
        header = ["type", "n", "weights", "kappa", "kappa formula"]
        body = [
            [r["type"], str(r["n"]), ", ".join(r["weights"]), r["kappa"], r["kappa_formula"]]
            for r in rows
        ]
    else:
        header = ["type", "n", "Delta(t)", "factored", "Delta(1)", "a)", "b)"]
        body = [
            [r["type"] + ("" if r["modulus"] is None else f" (a={r['modulus']})"), str(r["n"]),
             r["expanded"], r["factored"], str(r["delta_at_one"]), r["a"], r["b"]]
            for r in rows
        ]
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(row) + " |" for row in body]
    return "\n".join(lines) + "\n"
