"""Counting: Poincare polynomials, simple counts, zeta polynomials, duality table.

All arithmetic is exact (int / Fraction).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm, prod
from typing import Iterable, Sequence

from .garside import EERGarside, simples_closed, simples_oracle


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, coefficients in ascending degree, no trailing zeros."""

    coefficients: tuple

    def __init__(self, coefficients: Iterable = ()):
        c = list(coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def ones(cls, degree: int) -> "Polynomial":
        """1 + q + ... + q^degree."""
        return cls([1] * (degree + 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return Polynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * q + c
        return acc

    @property
    def denominator(self) -> int:
        """Least common denominator of the coefficients (1 for integer polynomials)."""
        return reduce(lcm, (Fraction(c).denominator for c in self.coefficients), 1)

    def scaled(self) -> "Polynomial":
        """Integer polynomial ``denominator * self``."""
        d = self.denominator
        return Polynomial(int(Fraction(c) * d) for c in self.coefficients)

    def to_json(self):
        if self.denominator == 1:
            return [int(c) for c in self.coefficients]
        return [[Fraction(c).numerator, Fraction(c).denominator] for c in self.coefficients]

    def __str__(self) -> str:
        d = self.denominator
        if d != 1:
            return f"({self.scaled()})/{d}"
        terms = []
        for n in range(self.degree, -1, -1):
            c = self.coefficients[n]
            if c == 0:
                continue
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            if mono and c == 1:
                coef = ""
            else:
                coef = str(c)
            terms.append(coef + mono)
        return " + ".join(terms) if terms else "0"


IntPolynomial = Polynomial


def product_of(polys: Iterable[Polynomial]) -> Polynomial:
    return reduce(lambda a, b: a * b, polys, Polynomial([1]))


# ---------------------------------------------------------------------------
# Poincare polynomials


def poincare_factor(e: int, k: int) -> Polynomial:
    """1 + q + ... + q^{k-2} + e q^{k-1} + q^k + ... + q^{2k-2}."""
    c = [1] * (2 * k - 1)
    c[k - 1] = e
    return Polynomial(c)


def poincare_factors(e: int, r: int) -> list[Polynomial]:
    return [poincare_factor(e, k) for k in range(2, r + 1)]


def poincare_closed(e: int, r: int) -> Polynomial:
    if e < 1 or r < 2:
        raise ValueError("need e >= 1 and r >= 2")
    return product_of(poincare_factors(e, r))


def poincare_rational_form(e: int, r: int, q) -> Fraction:
    """Evaluate the product of ``(q^{2k-1} + (e-1)q^k - (e-1)q^{k-1} - 1)/(q-1)`` at q != 1."""
    q = Fraction(q)
    return prod(
        (q ** (2 * k - 1) + (e - 1) * q**k - (e - 1) * q ** (k - 1) - 1) / (q - 1)
        for k in range(2, r + 1)
    )


def length_census(words: Iterable[Sequence]) -> Polynomial:
    counts = Counter(len(w) for w in words)
    if not counts:
        return Polynomial()
    return Polynomial(counts.get(n, 0) for n in range(max(counts) + 1))


def poincare_census(g: EERGarside, source: str = "closed") -> Polynomial:
    """Simples counted by length, from the tuple enumeration or the brute-force oracle."""
    if source == "closed":
        return length_census(s.word for s in simples_closed(g))
    if source == "oracle":
        return length_census(simples_oracle(g))
    raise ValueError(f"unknown source {source!r}")


def classical_poincare(kind: str, n: int) -> Polynomial:
    kind = kind.upper()
    if kind == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        return product_of(Polynomial.ones(k) for k in range(1, n + 1))
    if kind == "B":
        if n < 1:
            raise ValueError("B_n needs n >= 1")
        return product_of(Polynomial.ones(2 * k - 1) for k in range(1, n + 1))
    if kind == "D":
        if n < 2:
            raise ValueError("D_n needs n >= 2")
        return Polynomial.ones(n - 1) * product_of(
            Polynomial.ones(2 * k - 1) for k in range(1, n)
        )
    raise ValueError(f"unknown classical type {kind!r}")


# ---------------------------------------------------------------------------
# counts


def double_factorial(n: int) -> int:
    return prod(range(n, 0, -2))


def simple_count(e: int, r: int) -> int:
    if e < 1 or r < 2:
        raise ValueError("need e >= 1 and r >= 2")
    return prod(2 * (k - 1) + e for k in range(2, r + 1))


def simple_count_double_factorial(e: int, r: int) -> int:
    num = double_factorial(2 * (r - 1) + e)
    den = double_factorial(e)
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# zeta polynomial


def divisibility_order(g: EERGarside, words: Sequence[Sequence[int]]) -> list[set[int]]:
    """For each element, the indices of its left divisors among ``words``.

    Built from atom covers and transitive closure, never by testing
    divisibility between arbitrary pairs.
    """
    index = {g.canonical_word(w): n for n, w in enumerate(words)}
    below: list[set[int]] = [set() for _ in words]
    order = sorted(range(len(words)), key=lambda n: len(words[n]))
    covers: dict[int, list[int]] = {n: [] for n in range(len(words))}
    for n in order:
        for x in g.atoms:
            up = index.get(g.canonical_word(tuple(words[n]) + (x,)))
            if up is not None:
                covers[up].append(n)
    for n in order:
        acc = {n}
        for m in covers[n]:
            acc |= below[m]
        below[n] = acc
    return below


def zeta_values(g: EERGarside, q_max: int) -> list[int]:
    """``Z(q)`` for q = 0 .. q_max, Z(q) counting q-element multichains of simples."""
    words = [s.word for s in simples_closed(g)]
    below = divisibility_order(g, words)
    values = [1]
    ending = [1] * len(words)  # multichains of the current size ending at each element
    for q in range(1, q_max + 1):
        if q > 1:
            ending = [sum(ending[m] for m in below[n]) for n in range(len(words))]
        values.append(sum(ending))
    return values


def interpolate(values: Sequence[int]) -> Polynomial:
    """The polynomial of degree < len(values) through (n, values[n]), exactly."""
    n = len(values)
    result = Polynomial()
    for i, y in enumerate(values):
        basis = Polynomial([Fraction(1)])
        denom = Fraction(1)
        for j in range(n):
            if j != i:
                basis = basis * Polynomial([-j, 1])
                denom *= i - j
        result = result + Polynomial(Fraction(y) * c / denom for c in basis.coefficients)
    return result


def zeta_polynomial(g: EERGarside) -> Polynomial:
    rank = g.r * (g.r - 1)
    return interpolate(zeta_values(g, rank))


def count_multichains(relation: Sequence[set[int]], size: int) -> int:
    """Plain enumeration of chains a_1 <= ... <= a_size given ``relation[b] = {a : a <= b}``."""
    if size == 0:
        return 1
    total = 0

    def extend(top: int, left: int):
        nonlocal total
        if left == 0:
            total += 1
            return
        for a in relation[top]:
            extend(a, left - 1)

    for b in range(len(relation)):
        extend(b, size - 1)
    return total


# ---------------------------------------------------------------------------
# duality table


@dataclass(frozen=True)
class DualityStats:
    atom_count: int
    delta_length: int
    conj_order: int


def duality_stats(e: int, r: int) -> DualityStats:
    return DualityStats(e + r - 2, r * (r - 1), e // gcd(e, r))


def duality_stats_structural(g: EERGarside) -> DualityStats:
    """The same statistics read off the monoid itself."""
    return DualityStats(len(g.atoms), len(g.delta), g.delta_conjugation_order())

