"""Normal forms of the simple and unimodal parabolic singularities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import ForbiddenModulus, OutOfRange
from .exactpoly import Poly, parse_polynomial

FAMILIES = ("A", "D", "E6", "E7", "E8", "P8", "X9", "J10")
SIMPLE = ("A", "D", "E6", "E7", "E8")
PARABOLIC = ("P8", "X9", "J10")
HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class TypeTag:
    family: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES + ("Unknown",):
            raise ValueError(f"unknown family {self.family!r}")
        if (self.k is not None) != (self.family in ("A", "D")):
            raise ValueError(f"family {self.family} {'needs' if self.k is None else 'takes no'} parameter k")

    def __str__(self) -> str:
        return self.family if self.k is None else f"{self.family}{self.k}"

    @classmethod
    def parse(cls, text: str) -> TypeTag:
        text = text.strip().upper()
        for fam in ("A", "D"):
            if text.startswith(fam) and text[1:].isdigit():
                return cls(fam, int(text[1:]))
        if text == "UNKNOWN":
            return cls("Unknown")
        return cls(text)


def variable_names(n: int) -> list[str]:
    return [f"z{i}" for i in range(1, n + 2)]


def _squares(start: int, n: int) -> str:
    return "".join(f"+z{i}^2" for i in range(start, n + 2))


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    k_min: Optional[int]              # None for families without a parameter
    main_vars: int                    # variables before the padding squares
    mu: Callable[[Optional[int]], int]
    core_weights: Callable[[Optional[int]], tuple[Fraction, ...]]
    kappa_offset: Callable[[Optional[int]], Fraction]   # kappa - n/2
    template: Callable[[Optional[int], str], str]        # (k, modulus text) -> core polynomial
    forbidden: Optional[Callable[[Fraction], bool]] = None
    constraint: str = ""

    def min_n(self) -> int:
        return max(self.main_vars - 1, 1)

    def weights(self, n: int, k: Optional[int] = None) -> tuple[Fraction, ...]:
        core = self.core_weights(k)
        return core + (HALF,) * (n + 1 - len(core))


def _mod(a: str, monomial: str) -> str:
    return "" if a == "0" else f"+{a}*{monomial}"


CATALOG: dict[str, CatalogEntry] = {
    "A": CatalogEntry(
        "A", 1, 1,
        mu=lambda k: k,
        core_weights=lambda k: (Fraction(1, k + 1),),
        kappa_offset=lambda k: Fraction(1, k + 1),
        template=lambda k, a: f"z1^{k + 1}",
    ),
    "D": CatalogEntry(
        "D", 4, 2,
        mu=lambda k: k,
        core_weights=lambda k: (Fraction(k - 2, 2 * k - 2), Fraction(1, k - 1)),
        kappa_offset=lambda k: Fraction(1, 2 * (k - 1)),
        template=lambda k, a: f"z1^2*z2+z2^{k - 1}",
    ),
    "E6": CatalogEntry(
        "E6", None, 2,
        mu=lambda k: 6,
        core_weights=lambda k: (Fraction(1, 3), Fraction(1, 4)),
        kappa_offset=lambda k: Fraction(1, 12),
        template=lambda k, a: "z1^3+z2^4",
    ),
    "E7": CatalogEntry(
        "E7", None, 2,
        mu=lambda k: 7,
        core_weights=lambda k: (Fraction(1, 3), Fraction(2, 9)),
        kappa_offset=lambda k: Fraction(1, 18),
        template=lambda k, a: "z1^3+z1*z2^3",
    ),
    "E8": CatalogEntry(
        "E8", None, 2,
        mu=lambda k: 8,
        core_weights=lambda k: (Fraction(1, 3), Fraction(1, 5)),
        kappa_offset=lambda k: Fraction(1, 30),
        template=lambda k, a: "z1^3+z2^5",
    ),
    "P8": CatalogEntry(
        "P8", None, 3,
        mu=lambda k: 8,
        core_weights=lambda k: (Fraction(1, 3),) * 3,
        kappa_offset=lambda k: Fraction(0),
        template=lambda k, a: "z1^3+z2^3+z3^3" + _mod(a, "z1*z2*z3"),
        forbidden=lambda a: a**3 + 27 == 0,
        constraint="a^3+27 != 0",
    ),
    "X9": CatalogEntry(
        "X9", None, 2,
        mu=lambda k: 9,
        core_weights=lambda k: (Fraction(1, 4),) * 2,
        kappa_offset=lambda k: Fraction(0),
        template=lambda k, a: "z1^4+z2^4" + _mod(a, "z1^2*z2^2"),
        forbidden=lambda a: a**2 == 4,
        constraint="a^2 != 4",
    ),
    "J10": CatalogEntry(
        "J10", None, 2,
        mu=lambda k: 10,
        core_weights=lambda k: (Fraction(1, 3), Fraction(1, 6)),
        kappa_offset=lambda k: Fraction(0),
        template=lambda k, a: "z1^3+z2^6" + _mod(a, "z1^2*z2^2"),
        forbidden=lambda a: 4 * a**3 + 27 == 0,
        constraint="4*a^3+27 != 0",
    ),
}


def _format_modulus(a: Fraction) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def normal_form_text(tag: TypeTag, n: int, a: Fraction | int | None = None) -> str:
    entry = CATALOG[tag.family]
    if n < entry.min_n():
        raise OutOfRange(f"{tag.family} needs n >= {entry.min_n()}, got n={n}")
    if entry.k_min is not None and (tag.k is None or tag.k < entry.k_min):
        raise OutOfRange(f"{tag.family}_k needs k >= {entry.k_min}")
    a = Fraction(0 if a is None else a)
    if entry.forbidden is None:
        if a != 0:
            raise ValueError(f"{tag.family} has no modulus")
    elif entry.forbidden(a):
        raise ForbiddenModulus(f"modulus a={a} violates {entry.constraint} for {tag.family}")
    core = entry.template(tag.k, _format_modulus(a))
    # Modulus terms may carry a negative sign: fold "+-" into "-".
    return (core + _squares(entry.main_vars + 1, n)).replace("+-", "-")


def catalog_normal_form(tag: TypeTag, n: int, a: Fraction | int | None = None) -> Poly:
    """Instantiate the normal form of ``tag`` in the n+1 variables z1..z_{n+1}.

    Unimodal families default to modulus a = 0.
    """
    return parse_polynomial(normal_form_text(tag, n, a), variable_names(n))


def catalog_weights(tag: TypeTag, n: int) -> tuple[Fraction, ...]:
    return CATALOG[tag.family].weights(n, tag.k)


def catalog_kappa(tag: TypeTag, n: int) -> Fraction:
    return Fraction(n, 2) + CATALOG[tag.family].kappa_offset(tag.k)


def catalog_mu(tag: TypeTag) -> int:
    return CATALOG[tag.family].mu(tag.k)


def candidate_tags(mu: int) -> list[TypeTag]:
    tags = [TypeTag("A", mu)] if mu >= 1 else []
    if mu >= 4:
        tags.append(TypeTag("D", mu))
    for fam in ("E6", "E7", "E8", "P8", "X9", "J10"):
        if CATALOG[fam].mu(None) == mu:
            tags.append(TypeTag(fam))
    return tags
