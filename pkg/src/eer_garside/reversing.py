"""Word reversing over a complemented presentation.

Right reversing rewrites a factor ``x^-1 y`` into ``u v^-1`` where
``x u = y v`` is the relation headed by x and y (``x^-1 x`` is deleted).
The leftmost such factor is always rewritten first, so results and traces
are deterministic.  Left reversing is obtained by running right reversing
over the mirrored presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, NamedTuple

from .errors import BudgetExceeded, StuckReversal
from .presentation import Presentation, SignedWord, Word, inverse

DEFAULT_BUDGET = 10**6


class RewriteStep(NamedTuple):
    position: int  # index of the negative letter x^-1 in the current word
    x: int
    y: int
    u: Word  # x^-1 y became u v^-1; both empty for a deletion
    v: Word


@dataclass(frozen=True)
class ReversalResult:
    """Terminal form of a reversal.

    For ``side == "right"`` the represented word is ``positive negative^-1``;
    for ``side == "left"`` it is ``negative^-1 positive``.
    """

    positive: Word
    negative: Word
    steps: int
    trace: tuple[RewriteStep, ...] = field(default=(), compare=False, repr=False)
    side: str = "right"

    @property
    def is_empty(self) -> bool:
        return not self.positive and not self.negative

    @property
    def word(self) -> SignedWord:
        if self.side == "right":
            return self.positive + inverse(self.negative)
        return inverse(self.negative) + self.positive


def right_reverse(
    p: Presentation,
    w: Iterable[int],
    budget: int = DEFAULT_BUDGET,
    trace: bool = False,
) -> ReversalResult:
    table = p.complement
    # pending letters as a stack, next letter on top
    stream = list(w)[::-1]
    pos: list[int] = []
    neg: list[int] = []  # x for each x^-1 after the positive prefix
    steps = 0
    log = []
    while stream:
        a = stream.pop()
        if a < 0:
            neg.append(~a)
            continue
        if not neg:
            pos.append(a)
            continue
        x = neg.pop()
        steps += 1
        if steps > budget:
            raise BudgetExceeded(budget)
        if x == a:
            if trace:
                log.append(RewriteStep(len(pos) + len(neg), x, a, (), ()))
            continue
        try:
            u, v = table[x, a]
        except KeyError:
            raise StuckReversal(x, a) from None
        if trace:
            log.append(RewriteStep(len(pos) + len(neg), x, a, u, v))
        stream.extend(~y for y in v)
        stream.extend(reversed(u))
    return ReversalResult(tuple(pos), tuple(reversed(neg)), steps, tuple(log))


def left_reverse(
    p: Presentation,
    w: Iterable[int],
    budget: int = DEFAULT_BUDGET,
    trace: bool = False,
) -> ReversalResult:
    """Rewrite factors ``x y^-1`` into ``v^-1 u``; result is ``negative^-1 positive``."""
    res = right_reverse(p.mirror, tuple(w)[::-1], budget, trace)
    return ReversalResult(res.positive[::-1], res.negative[::-1], res.steps, res.trace, "left")


def complement(
    p: Presentation, u: Word, v: Word, budget: int = DEFAULT_BUDGET
) -> tuple[Word, Word]:
    """Return ``(u\\v, v\\u)`` by right reversing ``u^-1 v``."""
    res = right_reverse(p, inverse(u) + tuple(v), budget)
    return res.positive, res.negative


def cube_condition(
    p: Presentation, x: Word, y: Word, z: Word, budget: int = DEFAULT_BUDGET
) -> bool:
    """Whether (x, y, z) satisfies the cube condition.

    If ``x^-1 z z^-1 y`` reverses to ``v' u'^-1`` then ``(x v')^-1 (y u')``
    must reverse to the empty word.  A stuck first reversal satisfies the
    condition vacuously; a blown budget raises.
    """
    x, y, z = tuple(x), tuple(y), tuple(z)
    try:
        first = right_reverse(p, inverse(x) + z + inverse(z) + y, budget)
    except StuckReversal:
        return True
    try:
        second = right_reverse(
            p, inverse(x + first.positive) + y + first.negative, budget
        )
    except StuckReversal:
        return False
    return second.is_empty


@dataclass(frozen=True)
class CompletenessReport:
    passed: bool
    failing: tuple[int, int, int] | None
    checked: int

    def describe(self, p: Presentation) -> str:
        if self.passed:
            return f"complete ({self.checked} triples)"
        x, y, z = (p.generators[i].name for i in self.failing)
        return f"incomplete: cube condition fails on ({x}, {y}, {z})"


def _trivial_triple(x: int, y: int, z: int) -> bool:
    return x == y or z == x or z == y or x > y


def check_completeness(
    p: Presentation, prune: bool = False, budget: int = DEFAULT_BUDGET
) -> CompletenessReport:
    """Run the cube condition on every ordered triple of generators.

    With ``prune`` the triples with a repeated letter and the mirror image
    (y, x, z) of each checked (x, y, z) are skipped.
    """
    p.require_reversible()
    n = p.n_generators
    checked = 0
    for x, y, z in product(range(n), repeat=3):
        if prune and _trivial_triple(x, y, z):
            continue
        checked += 1
        if not cube_condition(p, (x,), (y,), (z,), budget):
            return CompletenessReport(False, (x, y, z), checked)
    return CompletenessReport(True, None, checked)


def format_trace(p: Presentation, res: ReversalResult) -> str:
    """One rewrite per line: position and rule applied."""
    lines = []
    for step in res.trace:
        lhs = p.format((~step.x, step.y))
        rhs = p.format(step.u + inverse(step.v))
        lines.append(f"{step.position}\t{lhs} -> {rhs}")
    return "\n".join(lines)
