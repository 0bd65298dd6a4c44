from __future__ import annotations

import random
from fractions import Fraction
from math import lcm

import pytest

from qhsing.exactpoly import Poly, parse_polynomial


def P(text: str, names: str = "z1,z2,z3") -> Poly:
    return parse_polynomial(text, names.split(","))


def random_admissible_germ(rng: random.Random, max_d: int = 60, max_vars: int = 5):
    """A Thom-Sebastiani sum of Fermat, chain and loop blocks in disjoint variables.

    Each block has an isolated critical point, hence so does the sum.
    Returns (text, names, expected weights).
    """
    while True:
        pieces, weights = [], []
        nvars = rng.randint(2, max_vars)
        i = 1
        while i <= nvars:
            kind = rng.choice(["fermat", "chain", "loop"]) if i < nvars else "fermat"
            if kind == "fermat":
                k = rng.randint(2, 8)
                pieces.append(f"z{i}^{k}")
                weights.append(Fraction(1, k))
                i += 1
            elif kind == "chain":
                p, q = rng.randint(1, 5), rng.randint(2, 6)
                pieces.append(f"z{i}^{p}*z{i + 1} + z{i + 1}^{q}")
                weights += [Fraction(q - 1, p * q), Fraction(1, q)]
                i += 2
            else:
                p, q = rng.randint(2, 5), rng.randint(2, 5)
                pieces.append(f"z{i}^{p}*z{i + 1} + z{i + 1}^{q}*z{i}")
                weights += [Fraction(q - 1, p * q - 1), Fraction(p - 1, p * q - 1)]
                i += 2
        d = lcm(*(w.denominator for w in weights))
        if d <= max_d:
            names = [f"z{j}" for j in range(1, len(weights) + 1)]
            return " + ".join(pieces), names, tuple(weights)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261018)


# one line per acceptance criterion at the end of the run

_acceptance: list[tuple[str, str, float]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::")[-1].removeprefix("test_")
        _acceptance.append((name, report.outcome.upper(), report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in sorted(_acceptance):
        status = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({duration:.2f}s)")
