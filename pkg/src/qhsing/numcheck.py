"""Floating-point checks of closed-form residue computations.

Points are complex numpy vectors.  All quadratures are composite trapezoid
rules on [0, 2 pi), which converge geometrically for smooth periodic
integrands; sums run in a fixed order so results are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from .errors import (
    BaseNotOnCurve,
    FrameDegenerate,
    NotOnHypersurface,
    NotTangent,
    OffHypersurface,
    SingularPoint,
)
from .exactpoly import Poly, evaluate_complex, evaluation_scale, gradient, weighted_degree
from .weights import WeightSystem

ON_SURFACE_TOL = 1e-9
TANGENT_TOL = 1e-9
NORM_TOL = 1e-10
DEFAULT_NODES = 2048

# <e, [L/S^1]> for the P8 link fibration: the degree of the cubic.
P8_EULER_PAIRING = 3


@dataclass(frozen=True)
class NumResult:
    value: complex | float
    reference: complex | float
    abs_error: float
    nodes: int = 0
    coarse_value: complex | float | None = None   # same quadrature at half the nodes

    @property
    def refinement_change(self) -> float | None:
        if self.coarse_value is None:
            return None
        return abs(self.value - self.coarse_value)


def _point(z: Sequence[complex]) -> np.ndarray:
    return np.asarray(z, dtype=complex)


def _grad_values(partials: list[Poly], z: np.ndarray) -> np.ndarray:
    return np.array([evaluate_complex(dp, z) for dp in partials])


def _check_on_surface(s: Poly, z: np.ndarray, exc: type = NotOnHypersurface) -> None:
    value = evaluate_complex(s, z)
    scale = evaluation_scale(s, z)
    if abs(value) > ON_SURFACE_TOL * max(scale, 1e-300):
        raise exc(f"|s(z)| = {abs(value):.3e} exceeds {ON_SURFACE_TOL:g} x scale {scale:.3e}")


def _form_value(grad: np.ndarray, gval: complex, vectors: np.ndarray, pivot: int) -> complex:
    # (-1)^pivot * g / (ds/dz_pivot) * det(components of the vectors off the pivot row)
    rows = [j for j in range(len(grad)) if j != pivot]
    minor = vectors[:, rows].T if len(rows) else np.zeros((0, 0))
    det = np.linalg.det(minor) if len(rows) else 1.0
    sign = -1.0 if pivot % 2 else 1.0
    return complex(sign * gval / grad[pivot] * det)


def residue_value(
    s: Poly,
    g: Poly,
    z: Sequence[complex],
    v: Sequence[Sequence[complex]],
    pivot: int | None = None,
) -> complex:
    """Evaluate the residue form of (g/s) dz_1..dz_{n+1} at ``z`` on n tangent vectors.

    The pivot defaults to the coordinate with the largest |ds/dz_i|; any pivot
    with a nonzero partial gives the same value on tangent vectors.
    """
    z = _point(z)
    vectors = np.atleast_2d(np.asarray(v, dtype=complex))
    if len(z) != s.nvars:
        raise ValueError("point dimension does not match the polynomial")
    if vectors.shape != (s.nvars - 1, s.nvars):
        raise ValueError(f"need {s.nvars - 1} tangent vectors of length {s.nvars}")
    grad = _grad_values(gradient(s), z)
    gnorm = float(np.linalg.norm(grad))
    if gnorm == 0.0:
        raise SingularPoint("all partial derivatives vanish")
    _check_on_surface(s, z)
    for vec in vectors:
        if abs(grad @ vec) > TANGENT_TOL * gnorm * max(float(np.linalg.norm(vec)), 1e-300):
            raise NotTangent(f"ds(v) = {abs(grad @ vec):.3e} is not zero")
    if pivot is None:
        pivot = int(np.argmax(np.abs(grad)))
    elif grad[pivot] == 0:
        raise SingularPoint(f"ds/dz_{pivot + 1} vanishes; cannot use it as pivot")
    return _form_value(grad, evaluate_complex(g, z), vectors, pivot)


def unitary_kernel_frame(covector: np.ndarray) -> np.ndarray:
    """Rows form a Hermitian-orthonormal basis of {v : covector . v = 0}."""
    _, _, vh = np.linalg.svd(covector.reshape(1, -1))
    return vh[1:].conj()


def residue_norm_check(s: Poly, g: Poly, z: Sequence[complex]) -> NumResult:
    z = _point(z)
    grad = _grad_values(gradient(s), z)
    frame = unitary_kernel_frame(grad)
    value = abs(residue_value(s, g, z, frame))
    reference = abs(evaluate_complex(g, z)) / float(np.linalg.norm(grad))
    return NumResult(value, reference, abs(value - reference))


def _trapezoid(f: Callable[[np.ndarray], np.ndarray], nodes: int) -> complex:
    theta = 2 * np.pi * np.arange(nodes) / nodes
    return complex(np.sum(f(theta)) * (2 * np.pi / nodes))


def p8_fiber_integral(
    y2: complex, y3: complex, v: Sequence[complex], nodes: int = DEFAULT_NODES
) -> NumResult:
    """Integrate r = dz2 dz3 / (3 z1^2) along the circle fiber over [1 : y2 : y3].

    The fiber is z(theta) = y1 (1, y2, y3) with y1 = rho e^(i theta) on the unit
    sphere; the second argument of r is the horizontal lift of the base vector v.
    """
    y2, y3 = complex(y2), complex(y3)
    v2, v3 = (complex(x) for x in v)
    if abs(1 + y2**3 + y3**3) > ON_SURFACE_TOL * (1 + abs(y2) ** 3 + abs(y3) ** 3):
        raise BaseNotOnCurve(f"1 + y2^3 + y3^3 = {1 + y2**3 + y3**3} is not zero")
    rho = (1 + abs(y2) ** 2 + abs(y3) ** 2) ** -0.5

    def integrand(theta: np.ndarray) -> np.ndarray:
        y1 = rho * np.exp(1j * theta)
        dz = 1j * y1  # d/dtheta of (y1, y1 y2, y1 y3), first coordinate
        tangent = (dz, dz * y2, dz * y3)
        lift = (np.zeros_like(y1), y1 * v2, y1 * v3)
        return (tangent[1] * lift[2] - tangent[2] * lift[1]) / (3 * y1**2)

    value = _trapezoid(integrand, nodes)
    coarse = _trapezoid(integrand, nodes // 2)
    reference = 2j * np.pi / 3 * (y2 * v3 - y3 * v2)
    return NumResult(value, complex(reference), abs(value - reference), nodes, coarse)


def circle_integral(form: str, radius: float, nodes: int = DEFAULT_NODES) -> NumResult:
    """Integrate dy/y or dy/y^2 over the circle |y| = radius."""
    if radius <= 0:
        raise ValueError("radius must be positive")
    powers = {"dy/y": 1, "dy/y^2": 2, "dy/y2": 2}
    if form not in powers:
        raise ValueError(f"unknown form {form!r}; use 'dy/y' or 'dy/y^2'")
    k = powers[form]

    def integrand(theta: np.ndarray) -> np.ndarray:
        y = radius * np.exp(1j * theta)
        return 1j * y / y**k

    value = _trapezoid(integrand, nodes)
    coarse = _trapezoid(integrand, nodes // 2)
    reference = 2j * np.pi if k == 1 else 0j
    return NumResult(value, reference, abs(value - reference), nodes, coarse)


# the weighted parametrization u -> (u_i |u_i|^(m a_i - 1))

def phi_map(w: WeightSystem, m: int, u: Sequence[complex]) -> np.ndarray:
    u = _point(u)
    beta = np.array([float(m * a) for a in w.a])
    return u * np.abs(u) ** (beta - 1)


def phi_inverse(w: WeightSystem, m: int, z: Sequence[complex]) -> np.ndarray:
    z = _point(z)
    beta = np.array([float(m * a) for a in w.a])
    return z * np.abs(z) ** (1 / beta - 1)


def _phi_partials(beta: np.ndarray, u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    r = np.abs(u)
    base = r ** (beta - 1)
    extra = (beta - 1) * u * r ** (beta - 3)
    return base + extra * u.real, 1j * base + extra * u.imag


def _tangent_frame(s_partials: list[Poly], w: WeightSystem, m: int, u: np.ndarray) -> np.ndarray:
    """Complex images under dPhi of a real orthonormal frame of T(Phi^-1(K)) at u."""
    beta = np.array([float(m * a) for a in w.a])
    z = u * np.abs(u) ** (beta - 1)
    dx, dy = _phi_partials(beta, u)
    grad = _grad_values(s_partials, z)
    row = np.empty(2 * len(u), dtype=complex)
    row[0::2] = grad * dx
    row[1::2] = grad * dy
    real_jac = np.vstack([row.real, row.imag])
    _, sigma, vt = np.linalg.svd(real_jac)
    if sigma[0] == 0 or sigma[1] < 1e-12 * sigma[0]:
        raise FrameDegenerate(f"real Jacobian of s o Phi has singular values {sigma}")
    frame = vt[2:]
    return frame[:, 0::2] * dx + frame[:, 1::2] * dy


def pulled_back_norm(s: Poly, g: Poly, w: WeightSystem, m: int, u: Sequence[complex]) -> float:
    """Root-sum-square of Phi^* r over all n-subsets of an orthonormal real tangent frame."""
    u = _point(u)
    if np.any(u == 0):
        raise FrameDegenerate("Phi is not smooth where a coordinate vanishes")
    partials = gradient(s)
    z = phi_map(w, m, u)
    _check_on_surface(s, z, OffHypersurface)
    images = _tangent_frame(partials, w, m, u)
    grad = _grad_values(partials, z)
    pivot = int(np.argmax(np.abs(grad)))
    gval = evaluate_complex(g, z)
    n = s.nvars - 1
    total = 0.0
    for subset in combinations(range(len(images)), n):
        total += abs(_form_value(grad, gval, images[list(subset)], pivot)) ** 2
    return math.sqrt(total)


def _homogeneous_degree(g: Poly, w: WeightSystem) -> Fraction:
    degrees = {weighted_degree(mono, w.a) for mono in g.monomials()}
    if len(degrees) > 1:
        raise ValueError("g is not quasihomogeneous for these weights")
    return degrees.pop() if degrees else Fraction(0)


def orbit_slope(
    s: Poly,
    w: WeightSystem,
    g: Poly,
    m: int,
    u0: Sequence[complex],
    t_grid: Sequence[float],
) -> NumResult:
    """Fit the log-log slope of |Phi^* r| along the ray t * u0 in the conical set Phi^-1(K)."""
    ts = np.asarray(t_grid, dtype=float)
    if len(ts) < 6 or np.any(ts <= 0) or np.any(ts > 1):
        raise ValueError("t_grid needs at least 6 points in (0, 1]")
    u0 = _point(u0)
    _check_on_surface(s, phi_map(w, m, u0), OffHypersurface)
    norms = np.array([pulled_back_norm(s, g, w, m, t * u0) for t in ts])
    slope = float(np.polyfit(np.log(ts), np.log(norms), 1)[0])
    reference = float(m * (w.kappa - 1) - w.n + m * _homogeneous_degree(g, w))
    return NumResult(slope, reference, abs(slope - reference), len(ts))


# sampling

def sample_smooth_points(
    s: Poly, count: int, rng: np.random.Generator, bound: float = 10.0, solve_for: int | None = None
) -> list[np.ndarray]:
    """Random smooth points of {s = 0} with all coordinates of modulus <= bound.

    All coordinates but one are drawn at random; the remaining one is a root
    of the resulting univariate polynomial.
    """
    partials = gradient(s)
    points: list[np.ndarray] = []
    attempts = 0
    while len(points) < count:
        attempts += 1
        if attempts > 1000 * count:
            raise RuntimeError("could not sample enough smooth points")
        j = int(rng.integers(s.nvars)) if solve_for is None else solve_for
        z = (rng.uniform(-1, 1, s.nvars) + 1j * rng.uniform(-1, 1, s.nvars)) * bound / 2
        coeffs: dict[int, complex] = {}
        for mono, c in s:
            term = complex(c)
            for i, k in enumerate(mono):
                if i != j:
                    term *= z[i] ** k
            coeffs[mono[j]] = coeffs.get(mono[j], 0) + term
        top = max(coeffs)
        if top == 0:
            continue
        roots = np.roots([coeffs.get(k, 0) for k in range(top, -1, -1)])
        roots = roots[np.abs(roots) <= bound]
        if len(roots) == 0:
            continue
        z[j] = roots[int(rng.integers(len(roots)))]
        grad = _grad_values(partials, z)
        if np.linalg.norm(grad) < 1e-6 * max(evaluation_scale(s, z), 1.0):
            continue
        try:
            _check_on_surface(s, z)
        except NotOnHypersurface:
            continue
        points.append(z)
    return points
