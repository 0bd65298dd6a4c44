"""Quasihomogeneous weight systems.

A polynomial is quasihomogeneous with weights ``a`` when every monomial
``z^k`` in it satisfies ``sum(k_i * a_i) == 1``.  Clearing denominators gives
an integer grading: ``z_i`` has degree ``q_i = d * a_i`` and the polynomial
is homogeneous of degree ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from .errors import DegenerateWeights, NotQuasihomogeneous, UnusedVariable
from .exactpoly import Poly, weighted_degree
from .ratlinalg import solve_affine


@dataclass(frozen=True)
class WeightSystem:
    a: tuple[Fraction, ...]
    d: int
    q: tuple[int, ...]
    unique: bool = True

    def __post_init__(self):
        if len(self.a) != len(self.q):
            raise ValueError("weights and grading have different lengths")
        for ai, qi in zip(self.a, self.q):
            if Fraction(qi, self.d) != ai:
                raise ValueError(f"grading {qi}/{self.d} does not match weight {ai}")

    @classmethod
    def from_weights(cls, weights: Sequence[Fraction | int | str], unique: bool = True) -> WeightSystem:
        a = tuple(Fraction(x) for x in weights)
        if not a:
            raise ValueError("empty weight system")
        d = reduce(lcm, (x.denominator for x in a), 1)
        q = [int(x * d) for x in a]
        g = reduce(gcd, q, d)
        return cls(a, d // g, tuple(x // g for x in q), unique)

    @property
    def nvars(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        """Complex dimension of the hypersurface."""
        return len(self.a) - 1

    @property
    def Q(self) -> int:
        return sum(self.q)

    @property
    def kappa(self) -> Fraction:
        return sum(self.a, Fraction(0))

    @property
    def s_max(self) -> int:
        """Top degree of the graded Milnor algebra (the socle degree)."""
        return sum(self.d - 2 * qi for qi in self.q)

    def permuted(self, perm: Sequence[int]) -> WeightSystem:
        a = [Fraction(0)] * self.nvars
        for i, target in enumerate(perm):
            a[target] = self.a[i]
        return WeightSystem.from_weights(a, self.unique)


def find_weights(p: Poly) -> WeightSystem:
    """Solve the weight equations of ``p`` exactly.

    If the equations leave a family of solutions, the one of smallest
    Euclidean norm is returned with ``unique=False``.
    """
    if p.is_zero():
        raise NotQuasihomogeneous("the zero polynomial has no weight system")
    if p.nvars == 0:
        raise NotQuasihomogeneous("a constant has no weight system")
    monos = p.monomials()
    for i in range(p.nvars):
        if all(m[i] == 0 for m in monos):
            raise UnusedVariable(f"variable {i} does not occur in any monomial")
    a, unique = solve_affine(monos, [1] * len(monos))
    if a is None:
        raise NotQuasihomogeneous("monomials admit no common weight system")
    for i, ai in enumerate(a):
        if not 0 < ai < 1:
            raise DegenerateWeights(f"weight of variable {i} is {ai}, outside (0, 1)")
    for m in monos:
        assert weighted_degree(m, a) == 1
    return WeightSystem.from_weights(a, unique)


def newton_distance(w: WeightSystem) -> Fraction:
    return -w.kappa
