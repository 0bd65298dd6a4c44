"""Topology of the link and recognition of catalog types."""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import TypeTag, catalog_weights, candidate_tags, CATALOG
from .milnor import CycloFactorization
from .weights import WeightSystem


@dataclass(frozen=True)
class LinkClass:
    n: int
    delta_at_one: int
    sphere: str           # "yes", "no" or "not-applicable"
    sphere_reason: str
    rational_sphere: bool


def _prime_power_base(k: int) -> int | None:
    """Return p if k = p^r for a prime p and r >= 1, else None."""
    if k < 2:
        return None
    p = next(f for f in range(2, k + 1) if k % f == 0)
    while k % p == 0:
        k //= p
    return p if k == 1 else None


def cyclotomic_at_one(k: int) -> int:
    if k == 1:
        return 0
    p = _prime_power_base(k)
    return p if p is not None else 1


def delta_at_one(delta: CycloFactorization) -> int:
    value = 1
    for k, m in delta.factors:
        value *= cyclotomic_at_one(k) ** m
    return value


def table_answers(delta: CycloFactorization) -> tuple[bool, bool]:
    """The two yes/no columns of the characteristic polynomial tables.

    a) |Delta(1)| = 1 (sphere, or homology sphere for n = 2); b) Delta(1) != 0.
    """
    value = delta_at_one(delta)
    return abs(value) == 1, value != 0


def classify_link(delta: CycloFactorization, n: int) -> LinkClass:
    if n < 1:
        raise ValueError("the link is only defined for n >= 1")
    value = delta_at_one(delta)
    unit = abs(value) == 1
    if n == 1:
        sphere = "not-applicable"
        reason = "the sphere criterion needs n > 2; for n = 1 the link is a union of circles"
    elif n == 2:
        sphere = "yes" if unit else "no"
        reason = "integral homology sphere" if unit else "not an integral homology sphere"
    else:
        sphere = "yes" if unit else "no"
        reason = "homeomorphic to a sphere" if unit else "not homeomorphic to a sphere"
    return LinkClass(n, value, sphere, reason, value != 0)


def recognize_type(w: WeightSystem, mu: int) -> TypeTag:
    """Match the weights (padded with 1/2's) and the Milnor number against the catalog."""
    n = w.n
    target = sorted(w.a)
    for tag in candidate_tags(mu):
        if n < CATALOG[tag.family].min_n():
            continue
        if sorted(catalog_weights(tag, n)) == target:
            return tag
    if mu == 1:
        # mu = 1 characterizes the Morse point whatever coordinates are used
        return TypeTag("A", 1)
    return TypeTag("Unknown")
