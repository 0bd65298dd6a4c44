"""End-to-end acceptance checks, one test per criterion, each with its time budget."""

import math
import random
import time
from collections import Counter
from fractions import Fraction as F
from math import gcd

import numpy as np

from qhsing.catalog import CATALOG, PARABOLIC, TypeTag, catalog_normal_form
from qhsing.exactpoly import parse_polynomial
from qhsing.linktopo import classify_link, table_answers
from qhsing.milnor import (
    characteristic_polynomial,
    eigenvalue_residues,
    jacobian_quotient_dims,
    milnor_number,
    poincare_polynomial,
    spectrum,
)
from qhsing.numcheck import (
    circle_integral,
    orbit_slope,
    p8_fiber_integral,
    phi_inverse,
    residue_norm_check,
    sample_smooth_points,
)
from qhsing.report import analyze
from qhsing.residue import lift_verdict
from qhsing.weights import WeightSystem, find_weights

from conftest import P, random_admissible_germ
from golden import parabolic_row, same_up_to_sign, simple_row, weights_row


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.2f}s, budget {self.seconds}s"


def _simple_tags():
    tags = [TypeTag("A", k) for k in range(1, 9)] + [TypeTag("D", k) for k in range(4, 9)]
    return tags + [TypeTag("E6"), TypeTag("E7"), TypeTag("E8")]


def test_criterion_01_characteristic_polynomial_tables():
    checked = 0
    with Budget(5):
        for n in range(1, 5):
            for tag in _simple_tags():
                delta = characteristic_polynomial(find_weights(catalog_normal_form(tag, n)))
                expected, a, b = simple_row(tag.family, tag.k, n)
                coeffs = list(delta.expand().coeffs)
                if expected is None:
                    assert len(coeffs) - 1 == tag.k
                else:
                    assert same_up_to_sign(coeffs, expected), (str(tag), n)
                assert table_answers(delta) == (a, b), (str(tag), n)
                checked += 1
        for n in range(2, 5):
            for fam in PARABOLIC:
                for modulus in (0, 1):
                    poly = catalog_normal_form(TypeTag(fam), n, modulus)
                    delta = characteristic_polynomial(find_weights(poly))
                    expected, a, b = parabolic_row(fam, n)
                    assert same_up_to_sign(list(delta.expand().coeffs), expected), (fam, n)
                    assert table_answers(delta) == (a, b), (fam, n)
                    # the n = 2 reading: a) asks for a homology sphere
                    link = classify_link(delta, n)
                    assert (link.sphere == "yes") == a
                    checked += 1
    assert checked == 4 * 16 + 3 * 3 * 2


def test_criterion_02_weights_and_kappa_table():
    with Budget(1):
        for n in range(1, 5):
            for tag in _simple_tags() + [TypeTag(f) for f in PARABOLIC]:
                if n < CATALOG[tag.family].min_n():
                    continue
                w = find_weights(catalog_normal_form(tag, n))
                weights, kappa = weights_row(tag.family, tag.k, n)
                assert list(w.a) == weights
                assert w.kappa == kappa
        e8 = find_weights(catalog_normal_form(TypeTag("E8"), 3))
        assert e8.kappa == F(3, 2) + F(1, 30)


def test_criterion_03_milnor_number_oracle():
    cases = [
        ("z1^3+z2^3+z3^3", 8),
        ("z1^3+z2^4+z3^2", 6),
        ("z1^3+z1*z2^3+z3^2", 7),
        ("z1^5+z2^2+z3^2", 4),
        ("z1^2*z2+z2^3+z3^2", 4),
    ]
    with Budget(30):
        for text, mu in cases:
            s = P(text)
            w = find_weights(s)
            poincare = list(poincare_polynomial(w).coeffs)
            limit = w.s_max + max(w.q)
            dims = jacobian_quotient_dims(s, w, limit)
            assert dims == poincare + [0] * (limit + 1 - len(poincare)), text
            product = math.prod(1 / a - 1 for a in w.a)
            assert sum(dims) == product == milnor_number(w) == mu, text


def test_criterion_04_p8_spectrum_and_lift():
    with Budget(1):
        for n, kappa, verdict in [(2, F(1), "no"), (3, F(3, 2), "yes")]:
            w = find_weights(catalog_normal_form(TypeTag("P8"), n))
            spec, delta = spectrum(w), characteristic_polynomial(w)
            lift = lift_verdict(w, spec, delta, n, 2)
            assert w.kappa == kappa
            assert lift.lifts_to_IH == verdict
            if n == 2:
                assert 0 in spec and spec.multiplicity(0) == 1
                assert classify_link(delta, n).delta_at_one == 0
            else:
                assert lift.kappa_criterion


def test_criterion_05_coordinate_invariance():
    names = ["x", "y", "z", "t"]
    with Budget(1):
        weights = []
        for text in ("x*y+y^100+z^2+t^2", "x^2+y^2+z^2+t^2"):
            report = analyze(text, names)
            assert report.mu == 1
            assert report.delta.factors == ((1, 1),)
            assert list(report.delta.expand().coeffs) == [-1, 1]
            assert report.spectrum.entries == ((1, 1),)
            assert report.weights.kappa == 2
            weights.append(report.weights.a)
        assert weights[0] != weights[1]


def test_criterion_06_fiber_integral():
    with Budget(1):
        for base, v, sign in [((-1, 0), (0, 1), -1), ((0, -1), (1, 0), 1)]:
            r = p8_fiber_integral(*base, v, nodes=2048)
            assert r.nodes == 2048
            assert abs(r.reference - sign * 2j * math.pi / 3) < 1e-15
            assert r.abs_error < 1e-8


def test_criterion_07_residue_norm_identity():
    surfaces = [
        P("z1^3+z2^3+z3^3"),
        P("z1^2+z2^2+z3^2"),
        parse_polynomial("x*y", ["x", "y"]),
    ]
    with Budget(5):
        rng = np.random.default_rng(20261018)
        for s in surfaces:
            g = parse_polynomial("1", [f"v{i}" for i in range(s.nvars)])
            points = sample_smooth_points(s, 100, rng, bound=10)
            assert len(points) == 100
            for z in points:
                assert np.max(np.abs(z)) <= 10
                r = residue_norm_check(s, g, z)
                assert r.abs_error < 1e-10


def test_criterion_08_orbit_slopes():
    a1 = WeightSystem.from_weights(["1/2"] * 3)
    p8 = WeightSystem.from_weights(["1/3"] * 3)
    quadric, cubic, one = P("z1^2+z2^2+z3^2"), P("z1^3+z2^3+z3^3"), P("1")
    on_quadric = [1, 1, 1j * math.sqrt(2)]
    on_cubic = [1, -0.5, -(0.875 ** (1 / 3))]
    grid = np.geomspace(0.05, 1, 8)
    with Budget(5):
        for s, w, m, z0 in [(quadric, a1, 2, on_quadric), (quadric, a1, 4, on_quadric), (cubic, p8, 3, on_cubic)]:
            r = orbit_slope(s, w, one, m, phi_inverse(w, m, z0), grid)
            expected = m * (w.kappa - 1) - w.n
            assert r.reference == expected
            assert abs(r.value - float(expected)) < 1e-3


def test_criterion_09_circle_integral():
    with Budget(1):
        for radius in (1.0, 0.01):
            r = circle_integral("dy/y", radius)
            assert abs(r.value - 2j * math.pi) < 1e-10


def _galois_uniform(residues: Counter, d: int) -> bool:
    for k in range(1, d + 1):
        if d % k == 0:
            orbit = [e for e in range(d) if gcd(e, d) == d // k]
            if len({residues.get(e, 0) for e in orbit}) != 1:
                return False
    return True


SAMPLE_T = (2, 3, -2)   # integers: the expanded side is evaluated exactly


def test_criterion_10_property_suite():
    rng = random.Random(60)
    with Budget(10):
        for _ in range(200):
            text, names, expected = random_admissible_germ(rng, max_d=60)
            w = find_weights(parse_polynomial(text, names))
            assert w.a == expected and w.d <= 60
            poincare = poincare_polynomial(w)
            coeffs = list(poincare.coeffs)
            assert coeffs == coeffs[::-1]

            spec = spectrum(w)
            counts = spec.as_counter()
            assert counts == Counter({(w.n - 1) - a: m for a, m in counts.items()})
            assert spec.minimum == w.kappa - 1

            mu = milnor_number(w)
            delta = characteristic_polynomial(w)
            assert delta.expand().degree == mu == poincare(1) == sum(coeffs)

            residues = eigenvalue_residues(w)
            assert _galois_uniform(residues, w.d)
            # prod (t - eigenvalue)^m agrees with the expanded Delta at sample points
            expanded = delta.expand()
            for t in SAMPLE_T:
                exact = expanded(t)
                factors = [(t - np.exp(2j * np.pi * e / w.d), m) for e, m in residues.items()]
                log_abs = sum(m * math.log(abs(f)) for f, m in factors)
                phase = sum(m * np.angle(f) for f, m in factors)
                assert abs(math.log(abs(exact)) - log_abs) <= 1e-9 * max(1.0, abs(log_abs))
                assert abs(np.exp(1j * phase) - (1 if exact > 0 else -1)) < 1e-6
