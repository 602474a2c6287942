"""Monomial-matrix model of the reflection group G(e, e, r).

A matrix is stored as a permutation ``perm`` (row i has its nonzero entry
in column perm[i], 0-based) and an exponent vector ``exps`` (that entry is
zeta^exps[i], zeta a primitive e-th root of unity).  No complex arithmetic
is ever done.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from math import factorial
from typing import Iterable

from .errors import BudgetExceeded
from .garside import EERGarside, simples_closed
from .garside.circle import Circle, circle_make
from .presentation import Presentation, build_eer


@dataclass(frozen=True, order=True)
class MonomialMatrix:
    perm: tuple[int, ...]
    exps: tuple[int, ...]
    e: int

    @classmethod
    def identity(cls, r: int, e: int) -> "MonomialMatrix":
        return cls(tuple(range(r)), (0,) * r, e)

    @property
    def size(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        # row i of self hits column m = perm[i]; row m of other hits perm'[m]
        perm = tuple(other.perm[m] for m in self.perm)
        exps = tuple((self.exps[i] + other.exps[m]) % self.e for i, m in enumerate(self.perm))
        return MonomialMatrix(perm, exps, self.e)

    def inverse(self) -> "MonomialMatrix":
        r = self.size
        perm = [0] * r
        exps = [0] * r
        for i, m in enumerate(self.perm):
            perm[m] = i
            exps[m] = (-self.exps[i]) % self.e
        return MonomialMatrix(tuple(perm), tuple(exps), self.e)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.size)) and not any(self.exps)

    def entry(self, i: int, j: int) -> int | None:
        """Exponent of the (i, j) entry, or None for a zero entry."""
        return self.exps[i] if self.perm[i] == j else None

    def in_group(self) -> bool:
        """Product of the nonzero entries is 1, i.e. exponents sum to 0 mod e."""
        return sum(self.exps) % self.e == 0

    def order(self) -> int:
        k, m = 1, self
        while not m.is_identity():
            m = m * self
            k += 1
        return k

    def fixed_space_dimension(self) -> int:
        """Dimension of ker(M - I): one per cycle whose entries multiply to 1."""
        seen = set()
        dim = 0
        for start in range(self.size):
            if start in seen:
                continue
            total = 0
            i = start
            while i not in seen:
                seen.add(i)
                total += self.exps[i]
                i = self.perm[i]
            if total % self.e == 0:
                dim += 1
        return dim

    def is_reflection(self) -> bool:
        return self.order() == 2 and self.fixed_space_dimension() == self.size - 1

    def __str__(self) -> str:
        perm = ",".join(str(i + 1) for i in self.perm)
        exps = ",".join(str(k) for k in self.exps)
        return f"perm=[{perm}] exp=[{exps}] (mod {self.e})"

    def to_json(self) -> dict:
        return {"perm": [i + 1 for i in self.perm], "exp": list(self.exps), "e": self.e}

    @classmethod
    def from_json(cls, data: dict | str) -> "MonomialMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(i - 1 for i in data["perm"]), tuple(data["exp"]), data["e"])


def generator_matrix(p: Presentation, x: int) -> MonomialMatrix:
    """Image of generator x: t_i swaps coordinates 1, 2 with entries zeta^-i, zeta^i;
    s_j is the transposition (j-1 j)."""
    e, r = p.e, p.r
    g = p.generators[x]
    perm = list(range(r))
    exps = [0] * r
    if g.kind == "t":
        perm[0], perm[1] = 1, 0
        exps[0], exps[1] = (-g.index) % e, g.index % e
    elif g.kind == "s":
        a, b = g.index - 2, g.index - 1
        perm[a], perm[b] = b, a
    else:
        raise ValueError(f"{g} is not a generator of type (e, e, r)")
    return MonomialMatrix(tuple(perm), tuple(exps), e)


def generator_matrices(p: Presentation) -> list[MonomialMatrix]:
    return [generator_matrix(p, x) for x in range(p.n_generators)]


def project(p: Presentation, w: Iterable[int]) -> MonomialMatrix:
    """Image of a signed word in G(e, e, r); inverse letters map like their generators."""
    gens = generator_matrices(p)
    m = MonomialMatrix.identity(p.r, p.e)
    for x in w:
        m = m * gens[x if x >= 0 else ~x]
    return m


def group_order(e: int, r: int) -> int:
    return e ** (r - 1) * factorial(r)


def enumerate_group(e: int, r: int, limit: int = 10**6) -> list[MonomialMatrix]:
    """Closure of the generator matrices, breadth first, in sorted order."""
    p = build_eer(e, r)
    gens = generator_matrices(p)
    start = MonomialMatrix.identity(r, e)
    seen = {start}
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for g in gens:
            nxt = m * g
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise BudgetExceeded(limit, "group enumeration")
                queue.append(nxt)
    return sorted(seen)


def simples_image(g: EERGarside) -> list[MonomialMatrix]:
    """Distinct images of the simples, sorted."""
    return sorted({project(g.presentation, s.word) for s in simples_closed(g)})


@dataclass(frozen=True)
class RelationReport:
    passed: bool
    checked: int
    failing: str | None = None


def verify_group_relations(e: int, r: int) -> RelationReport:
    """Check every defining relation and every a^2 = 1 on the generator matrices."""
    p = build_eer(e, r)
    checked = 0
    for rel in p.relations:
        checked += 1
        if project(p, rel.lhs) != project(p, rel.rhs):
            return RelationReport(False, checked, f"{p.format(rel.lhs)} = {p.format(rel.rhs)}")
    for x in range(p.n_generators):
        checked += 1
        if not project(p, (x, x)).is_identity():
            return RelationReport(False, checked, f"{p.generators[x]}^2 = 1")
    return RelationReport(True, checked)


def matrix_circle(m1: MonomialMatrix, m0: MonomialMatrix, bound: int = 24) -> Circle:
    return circle_make(
        m1, m0, mul=lambda a, b: a * b, inv=MonomialMatrix.inverse, eq=lambda a, b: a == b, bound=bound
    )
