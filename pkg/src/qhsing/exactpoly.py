"""Exact sparse multivariate polynomials over Q and dense integer polynomials in t.

A :class:`Poly` maps exponent tuples to nonzero :class:`fractions.Fraction`
coefficients.  Terms are kept in graded-lexicographic order (highest first),
so two polynomials are equal exactly when their term tuples are equal.

Polynomial text follows a small LL(1) grammar::

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := var ('^' uint)?
    coeff  := int ('/' uint)?

Products need an explicit ``*``; there are no parentheses.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InexactDivision, ParseError, UnknownVariable

Rat = Fraction
Monomial = tuple[int, ...]


def _grlex_key(mono: Monomial) -> tuple[int, Monomial]:
    return (sum(mono), mono)


def format_rat(x: Fraction | int) -> str:
    """Canonical text for a rational: ``"p"`` or ``"p/q"`` with q > 0."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Poly:
    """Immutable sparse polynomial with rational coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction | int] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(k) for k in mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} exponents")
            if any(k < 0 for k in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = Fraction(coeff)
            if c != 0:
                clean[mono] = c
        self.nvars = nvars
        self._terms = tuple(sorted(clean.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True))
        self._hash = None

    # construction helpers

    @classmethod
    def constant(cls, nvars: int, value: Fraction | int) -> Poly:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, i: int) -> Poly:
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, {tuple(mono): 1})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: Fraction | int = 1) -> Poly:
        return cls(len(exponents), {tuple(exponents): coeff})

    # container protocol

    @property
    def terms(self) -> tuple[tuple[Monomial, Fraction], ...]:
        return self._terms

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self._terms]

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return dict(self._terms).get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms)

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self._terms), default=-1)

    # equality

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self._terms))
        return self._hash

    # arithmetic

    def _coerce(self, other: object) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other: object) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for mono, c in other._terms:
            acc[mono] = acc.get(mono, 0) + c
        return Poly(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.nvars, {m: -c for m, c in self._terms})

    def __sub__(self, other: object) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> Poly:
        return (-self) + other

    def __mul__(self, other: object) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms:
            for m2, c2 in other._terms:
                mono = tuple(a + b for a, b in zip(m1, m2))
                acc[mono] = acc.get(mono, 0) + c1 * c2
        return Poly(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def permute(self, perm: Sequence[int]) -> Poly:
        """Rename variable ``i`` to ``perm[i]``."""
        out = {}
        for mono, c in self._terms:
            new = [0] * self.nvars
            for i, k in enumerate(mono):
                new[perm[i]] = k
            out[tuple(new)] = c
        return Poly(self.nvars, out)

    # printing

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if len(names) != self.nvars:
            raise ValueError("wrong number of variable names")
        if not self._terms:
            return "0"
        out: list[str] = []
        for idx, (mono, c) in enumerate(self._terms):
            factors = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, mono) if k]
            mag = abs(c)
            if factors and mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rat(mag)] + factors)
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.to_string()!r})"


# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^])|(?P<bad>\S))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}", text, start)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.index = {name: i for i, name in enumerate(names)}
        self.nvars = len(names)
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, position: int) -> ParseError:
        return ParseError(message, self.text, position)

    def parse(self) -> Poly:
        acc: dict[Monomial, Fraction] = {}
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            sign = -1 if value == "-" else 1
        while True:
            mono, coeff = self.term()
            acc[mono] = acc.get(mono, 0) + sign * coeff
            kind, value, where = self.peek()
            if kind == "eof":
                break
            if kind == "op" and value in "+-":
                self.advance()
                sign = -1 if value == "-" else 1
                continue
            raise self.error(f"expected '+', '-' or end of input, found {value!r}", where)
        return Poly(self.nvars, acc)

    def term(self) -> tuple[Monomial, Fraction]:
        exps = [0] * self.nvars
        kind, value, where = self.peek()
        if kind == "num":
            coeff = self.coeff()
        elif kind == "ident":
            coeff = Fraction(1)
            self.factor(exps)
        else:
            raise self.error(f"expected a coefficient or variable, found {value or 'end of input'!r}", where)
        while True:
            kind, value, where = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                self.factor(exps)
            elif kind in ("num", "ident"):
                raise self.error("missing '*' between factors", where)
            else:
                return tuple(exps), coeff

    def coeff(self) -> Fraction:
        _, value, where = self.advance()
        if "." in value:
            raise self.error("decimal coefficients are not supported; write a/b", where)
        num = int(value)
        kind, op, _ = self.peek()
        if kind == "op" and op == "/":
            self.advance()
            kind, value, where = self.advance()
            if kind != "num" or "." in value:
                raise self.error("expected an unsigned integer denominator", where)
            den = int(value)
            if den == 0:
                raise self.error("zero denominator", where)
            return Fraction(num, den)
        return Fraction(num)

    def factor(self, exps: list[int]) -> None:
        kind, name, where = self.advance()
        if kind != "ident":
            raise self.error(f"expected a variable, found {name or 'end of input'!r}", where)
        if name not in self.index:
            raise UnknownVariable(f"unknown variable {name!r}", self.text, where)
        power = 1
        kind, op, _ = self.peek()
        if kind == "op" and op == "^":
            self.advance()
            kind, value, where = self.advance()
            if kind == "op" and value == "-":
                raise self.error("exponent < 0 is not allowed", where)
            if kind != "num" or "." in value:
                raise self.error("exponent must be a non-negative integer", where)
            power = int(value)
        exps[self.index[name]] += power


def parse_polynomial(text: str, names: Sequence[str]) -> Poly:
    """Parse ``text`` into a :class:`Poly` over the ordered variables ``names``.

    Raises :class:`ParseError` (with the offending position) on malformed input
    and :class:`UnknownVariable` for identifiers missing from ``names``.
    """
    names = list(names)
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {names}")
    return _Parser(text, names).parse()


# calculus and evaluation

def differentiate(p: Poly, i: int) -> Poly:
    if not 0 <= i < p.nvars:
        raise IndexError(f"variable index {i} out of range for {p.nvars} variables")
    out: dict[Monomial, Fraction] = {}
    for mono, c in p:
        k = mono[i]
        if k:
            new = list(mono)
            new[i] = k - 1
            out[tuple(new)] = c * k
    return Poly(p.nvars, out)


def gradient(p: Poly) -> list[Poly]:
    return [differentiate(p, i) for i in range(p.nvars)]


def _horner(terms: list[tuple[Monomial, complex]], z: Sequence[complex], var: int) -> complex:
    if var == len(z):
        return sum(c for _, c in terms)
    groups: dict[int, list[tuple[Monomial, complex]]] = {}
    for mono, c in terms:
        groups.setdefault(mono[var], []).append((mono, c))
    top = max(groups)
    acc = 0j
    zi = z[var]
    for k in range(top, -1, -1):
        acc *= zi
        if k in groups:
            acc += _horner(groups[k], z, var + 1)
    return acc


def evaluate_complex(p: Poly, z: Sequence[complex]) -> complex:
    """Evaluate ``p`` at a complex point by nested Horner schemes, one variable at a time."""
    if len(z) != p.nvars:
        raise ValueError(f"point has {len(z)} coordinates, polynomial has {p.nvars} variables")
    if p.is_zero():
        return 0j
    terms = [(mono, complex(c)) for mono, c in p]
    return complex(_horner(terms, [complex(v) for v in z], 0))


def evaluation_scale(p: Poly, z: Sequence[complex]) -> float:
    """Sum of absolute term values; the natural size against which |p(z)| is judged."""
    total = 0.0
    for mono, c in p:
        term = abs(float(c))
        for zi, k in zip(z, mono):
            term *= abs(complex(zi)) ** k
        total += term
    return total


def weighted_degree(mono: Sequence[int], weights: Sequence[Fraction]) -> Fraction:
    return sum((k * a for k, a in zip(mono, weights)), Fraction(0))


# dense integer polynomials in one variable t

class IntPoly:
    """Dense univariate polynomial with integer coefficients; ``coeffs[i]`` multiplies t^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        result = IntPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.leading()
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for shift in range(len(rem) - 1 - dq, -1, -1):
            top = rem[shift + dq]
            if top == 0:
                continue
            q, r = divmod(top, lead)
            if r:
                raise InexactDivision(f"leading coefficient {lead} does not divide {top}")
            quot[shift] = q
            for j, b in enumerate(other.coeffs):
                rem[shift + j] -= q * b
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, other: IntPoly) -> IntPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise InexactDivision(f"nonzero remainder {r} dividing {self} by {other}")
        return q

    def __call__(self, t: int | Fraction | complex) -> int | Fraction | complex:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def to_string(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPoly:
    """The k-th cyclotomic polynomial, by dividing t^k - 1 by the lower ones."""
    if k < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = IntPoly.monomial(k) - IntPoly([1])
    for j in range(1, k):
        if k % j == 0:
            poly = poly.exact_div(cyclotomic(j))
    return poly
