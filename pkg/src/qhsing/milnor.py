"""Invariants of the graded Milnor algebra of a quasihomogeneous germ.

The Milnor algebra C[z]/(ds) is graded by the weighted degree; its Poincare
polynomial is prod(1 - t^(d-q_i)) / prod(1 - t^(q_i)).  A basis monomial of
degree s contributes the spectral number (s+Q)/d - 1 and the monodromy
eigenvalue exp(2 pi i (s+Q)/d).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import GaloisOrbitNonUniform, InexactDivision, NonIntegerMilnorNumber
from .exactpoly import IntPoly, Monomial, Poly, cyclotomic, gradient
from .ratlinalg import rank
from .weights import WeightSystem


@dataclass(frozen=True)
class Spectrum:
    """Spectral numbers with multiplicities, sorted ascending."""

    entries: tuple[tuple[Fraction, int], ...]

    @property
    def mu(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def minimum(self) -> Fraction:
        return self.entries[0][0]

    def __contains__(self, value: object) -> bool:
        return any(alpha == value for alpha, _ in self.entries)

    def multiplicity(self, value: Fraction | int) -> int:
        return dict(self.entries).get(Fraction(value), 0)

    def as_counter(self) -> Counter:
        return Counter(dict(self.entries))


def totient(k: int) -> int:
    return sum(1 for j in range(1, k + 1) if gcd(j, k) == 1)


@dataclass(frozen=True)
class CycloFactorization:
    """Delta(t) = prod Phi_k(t)^m_k, stored as sorted (k, m_k) pairs."""

    factors: tuple[tuple[int, int], ...]

    @property
    def mu(self) -> int:
        return sum(m * totient(k) for k, m in self.factors)

    def multiplicity(self, k: int) -> int:
        return dict(self.factors).get(k, 0)

    def expand(self) -> IntPoly:
        poly = IntPoly([1])
        for k, m in self.factors:
            poly = poly * cyclotomic(k) ** m
        return poly

    def to_string(self) -> str:
        """Factored form, e.g. ``Phi1^2*Phi3^3``."""
        if not self.factors:
            return "1"
        return "*".join(f"Phi{k}" if m == 1 else f"Phi{k}^{m}" for k, m in self.factors)


def poincare_polynomial(w: WeightSystem) -> IntPoly:
    # Divide full products; single factors need not divide one another (E7: d=18, q=(6,4,9)).
    num = IntPoly([1])
    den = IntPoly([1])
    for qi in w.q:
        if not 0 < qi < w.d:
            raise InexactDivision(f"grading degree {qi} is not strictly between 0 and {w.d}")
        num = num * (IntPoly([1]) - IntPoly.monomial(w.d - qi))
        den = den * (IntPoly([1]) - IntPoly.monomial(qi))
    return num.exact_div(den)


def milnor_number(w: WeightSystem) -> int:
    mu = Fraction(1)
    for ai in w.a:
        mu *= 1 / ai - 1
    if mu.denominator != 1 or mu <= 0:
        raise NonIntegerMilnorNumber(f"prod(1/a_i - 1) = {mu} is not a positive integer")
    return int(mu)


def spectrum(w: WeightSystem) -> Spectrum:
    poly = poincare_polynomial(w)
    entries = [
        (Fraction(s + w.Q, w.d) - 1, c) for s, c in enumerate(poly.coeffs) if c
    ]
    return Spectrum(tuple(sorted(entries)))


def eigenvalue_residues(w: WeightSystem) -> Counter:
    """Multiplicity of exp(2 pi i e/d) for each residue e mod d."""
    residues: Counter = Counter()
    for s, c in enumerate(poincare_polynomial(w).coeffs):
        if c:
            residues[(s + w.Q) % w.d] += c
    return residues


def characteristic_polynomial(w: WeightSystem) -> CycloFactorization:
    d = w.d
    residues = eigenvalue_residues(w)
    factors = []
    for k in range(1, d + 1):
        if d % k:
            continue
        # exp(2 pi i e/d) is a primitive k-th root exactly when gcd(e, d) = d/k
        orbit = [e for e in range(d) if gcd(e, d) == d // k]
        mults = {residues.get(e, 0) for e in orbit}
        if len(mults) != 1:
            raise GaloisOrbitNonUniform(
                f"eigenvalue multiplicities {sorted(mults)} on the primitive {k}-th roots"
            )
        m = mults.pop()
        if m:
            factors.append((k, m))
    return CycloFactorization(tuple(factors))


# brute-force oracle for the Milnor algebra

def monomials_of_degree(q: tuple[int, ...], s: int) -> list[Monomial]:
    """All exponent vectors k >= 0 with sum(k_i * q_i) == s."""
    if s < 0:
        return []
    out: list[Monomial] = []

    def rec(i: int, remaining: int, prefix: list[int]) -> None:
        if i == len(q) - 1:
            if remaining % q[i] == 0:
                out.append(tuple(prefix + [remaining // q[i]]))
            return
        for k in range(remaining // q[i] + 1):
            rec(i + 1, remaining - k * q[i], prefix + [k])

    rec(0, s, [])
    return out


def _jacobian_dim(partials: list[Poly], q: tuple[int, ...], d: int, s: int) -> int:
    basis = monomials_of_degree(q, s)
    if not basis:
        return 0
    index = {m: j for j, m in enumerate(basis)}
    rows: list[list[Fraction]] = []
    for i, dp in enumerate(partials):
        if dp.is_zero():
            continue
        for mult in monomials_of_degree(q, s - (d - q[i])):
            row = [Fraction(0)] * len(basis)
            for mono, c in dp:
                row[index[tuple(a + b for a, b in zip(mono, mult))]] += c
            rows.append(row)
    if not rows:
        return len(basis)
    denom = 1
    for row in rows:
        for x in row:
            denom = denom * x.denominator // gcd(denom, x.denominator)
    int_rows = [[int(x * denom) for x in row] for row in rows]
    return len(basis) - rank(int_rows)


def jacobian_quotient_dims(p: Poly, w: WeightSystem, s_limit: int) -> list[int]:
    """Dimensions of the graded pieces of C[z]/(dp) in degrees 0..s_limit, by exact rank."""
    partials = gradient(p)
    return [_jacobian_dim(partials, w.q, w.d, s) for s in range(s_limit + 1)]


def is_isolated(p: Poly, w: WeightSystem) -> bool:
    """True when the Jacobian quotient vanishes on the degree window above the socle."""
    top = w.s_max
    if top < 0:
        return False
    dims = jacobian_quotient_dims(p, w, top + max(w.q))
    if any(dims[top + 1:]):
        return False
    return True
