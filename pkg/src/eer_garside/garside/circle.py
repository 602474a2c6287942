"""Circles of elements in a group.

Starting from g1, g0 the circle is continued by ``g_i = g_{i-1} g_{i-2} g_{i-1}^-1``
for i > 1 and ``g_i = g_{i+1}^-1 g_{i+2} g_{i+1}`` for i < 0.  The group is
passed in as three callables so the same code serves the braid group
(signed words, equality by reversing) and the reflection group (matrices).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from ..errors import NoPeriodFound
from ..presentation import inverse


@dataclass
class Circle:
    members: dict[int, Any]  # g_i for every computed index i
    gamma: Any  # the disk element g1 g0
    cardinality: int | None  # None when no period was found

    def __getitem__(self, i: int):
        if self.cardinality:
            i0 = i % self.cardinality
            if i0 in self.members:
                return self.members[i0]
        return self.members[i]

    @property
    def indices(self) -> list[int]:
        return sorted(self.members)


def circle_make(
    g1,
    g0,
    *,
    mul: Callable[[Any, Any], Any],
    inv: Callable[[Any], Any],
    eq: Callable[[Any, Any], bool],
    bound: int = 24,
    simplify: Callable[[Any], Any] | None = None,
) -> Circle:
    """Compute g_i for ``|i| <= bound`` and detect the period.

    The cardinality is the least n >= 1 with ``g_n = g_0``: one coincidence
    forces period n everywhere, so g_0 ... g_{n-1} are pairwise distinct.
    Raises :class:`NoPeriodFound` (carrying the partial circle) otherwise.
    """
    simp = simplify or (lambda x: x)
    g = {0: g0, 1: g1}
    for i in range(2, bound + 1):
        g[i] = simp(mul(mul(g[i - 1], g[i - 2]), inv(g[i - 1])))
    for i in range(-1, -bound - 1, -1):
        g[i] = simp(mul(mul(inv(g[i + 1]), g[i + 2]), g[i + 1]))
    gamma = mul(g1, g0)
    card = next((n for n in range(1, bound + 1) if eq(g[n], g0)), None)
    circle = Circle(g, gamma, card)
    if card is None:
        err = NoPeriodFound(f"no period up to index {bound}")
        err.circle = circle
        raise err
    return circle


def braid_circle(monoid, g1, g0, bound: int = 24) -> Circle:
    """Circle in the group of fractions of a Garside monoid (signed words)."""
    return circle_make(
        tuple(g1),
        tuple(g0),
        mul=lambda a, b: a + b,
        inv=inverse,
        eq=monoid.equal_group,
        bound=bound,
        simplify=monoid.reduce_fraction,
    )
