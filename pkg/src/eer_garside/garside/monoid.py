"""Divisibility, lcm/gcd, word problems and greedy normal forms.

Everything is driven by right reversing, so the presentation must be
complemented, homogeneous and complete, and ``delta`` must be a Garside
element.  None of that is verified here; run
:func:`eer_garside.reversing.check_completeness` and :meth:`is_balanced`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable

from ..errors import BudgetExceeded
from ..presentation import Presentation, SignedWord, Word, fraction, inverse
from ..reversing import DEFAULT_BUDGET, right_reverse


@dataclass(frozen=True)
class NormalForm:
    """Left-greedy form ``delta^delta_power * factors[0] * factors[1] ...``.

    Factors are proper simples (neither trivial nor delta) spelled by their
    canonical words, so two normal forms are equal exactly when the elements
    are.
    """

    delta_power: int
    factors: tuple[Word, ...]

    def word(self, delta: Word) -> Word:
        out = delta * self.delta_power
        for f in self.factors:
            out += f
        return out


def sort_words(words: Iterable[Word]) -> list[Word]:
    """Canonical output order: by length, then lexicographically."""
    return sorted(words, key=lambda w: (len(w), w))


class GarsideMonoid:
    def __init__(
        self,
        presentation: Presentation,
        delta: Word | None = None,
        budget: int = DEFAULT_BUDGET,
    ):
        presentation.require_reversible()
        self.presentation = presentation
        self.budget = budget
        self.atoms = tuple(range(presentation.n_generators))
        self._complement = lru_cache(maxsize=1 << 18)(self._complement_uncached)
        self._canonical = lru_cache(maxsize=1 << 16)(self._canonical_uncached)
        self.delta = tuple(delta) if delta is not None else self.lcm(*((x,) for x in self.atoms))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.presentation.family}, e={self.presentation.e}, r={self.presentation.r})"

    # -- reversing primitives --------------------------------------------

    def _complement_uncached(self, u: Word, v: Word) -> tuple[Word, Word]:
        res = right_reverse(self.presentation, inverse(u) + v, self.budget)
        return res.positive, res.negative

    def complement(self, u: Iterable[int], v: Iterable[int]) -> tuple[Word, Word]:
        """``(u\\v, v\\u)``, so that ``u (u\\v) = v (v\\u)`` is the right lcm."""
        return self._complement(tuple(u), tuple(v))

    def divides_left(self, a: Iterable[int], b: Iterable[int]) -> bool:
        a, b = tuple(a), tuple(b)
        if len(a) > len(b):
            return False
        return not self._complement(a, b)[1]

    def left_quotient(self, a: Iterable[int], b: Iterable[int]) -> Word:
        """The c with ``a c = b``; only meaningful when a left-divides b."""
        return self._complement(tuple(a), tuple(b))[0]

    def equal(self, u: Iterable[int], v: Iterable[int]) -> bool:
        u, v = tuple(u), tuple(v)
        if len(u) != len(v):
            return False
        return self._complement(u, v) == ((), ())

    def lcm(self, *words: Iterable[int]) -> Word:
        """Right lcm of the given words (the empty word for no arguments)."""
        out: Word = ()
        for w in words:
            out = out + self.complement(out, w)[0]
        return out

    def gcd_left(self, a: Iterable[int], b: Iterable[int]) -> Word:
        """Left gcd by stripping the least common atom until none is left."""
        ra, rb = tuple(a), tuple(b)
        out: list[int] = []
        while ra and rb:
            for x in self.atoms:
                if self.divides_left((x,), ra) and self.divides_left((x,), rb):
                    out.append(x)
                    ra = self.left_quotient((x,), ra)
                    rb = self.left_quotient((x,), rb)
                    break
            else:
                break
        return tuple(out)

    # -- right-hand side via the mirrored presentation -------------------

    @cached_property
    def mirror(self) -> "GarsideMonoid":
        return GarsideMonoid(self.presentation.mirror, self.delta[::-1], self.budget)

    def divides_right(self, a: Iterable[int], b: Iterable[int]) -> bool:
        """Whether ``b = c a`` for some c."""
        return self.mirror.divides_left(tuple(a)[::-1], tuple(b)[::-1])

    def right_quotient(self, b: Iterable[int], a: Iterable[int]) -> Word:
        """The c with ``c a = b``; only meaningful when a right-divides b."""
        return self.mirror.left_quotient(tuple(a)[::-1], tuple(b)[::-1])[::-1]

    # -- canonical words and normal forms --------------------------------

    def _canonical_uncached(self, w: Word) -> Word:
        out = []
        while w:
            for x in self.atoms:
                if self.divides_left((x,), w):
                    out.append(x)
                    w = self.left_quotient((x,), w)
                    break
            else:
                raise ValueError("no atom divides a nonempty word; presentation not complete?")
        return tuple(out)

    def canonical_word(self, w: Iterable[int]) -> Word:
        """Lexicographically least word of the element: strip the least atom each time."""
        return self._canonical(tuple(w))

    def head(self, w: Iterable[int]) -> Word:
        """``delta ∧ w``, built right to left from ``H(x y) = H(x H(y))``."""
        h: Word = ()
        for x in reversed(tuple(w)):
            xh = (x,) + h
            h = xh if self.divides_left(xh, self.delta) else self.gcd_left(self.delta, xh)
        return h

    def normal_form(self, w: Iterable[int]) -> NormalForm:
        cur = tuple(w)
        k = 0
        while self.divides_left(self.delta, cur):
            cur = self.left_quotient(self.delta, cur)
            k += 1
        factors = []
        while cur:
            h = self.head(cur)
            factors.append(self.canonical_word(h))
            cur = self.left_quotient(h, cur)
        return NormalForm(k, tuple(factors))

    # -- group of fractions ----------------------------------------------

    def to_fraction(self, w: Iterable[int]) -> tuple[Word, Word]:
        """Right reverse a signed word to ``p n^-1``; returns ``(p, n)``."""
        res = right_reverse(self.presentation, tuple(w), self.budget)
        return res.positive, res.negative

    def equal_group(self, u: Iterable[int], v: Iterable[int]) -> bool:
        p, n = self.to_fraction(inverse(u) + tuple(v))
        return self.equal(p, n)

    def reduce_fraction(self, w: Iterable[int]) -> SignedWord:
        """A short representative ``p n^-1`` of a signed word.

        Common right divisors of p and n are cancelled atom by atom.
        """
        p, n = self.to_fraction(w)
        while p and n:
            for x in self.atoms:
                if self.divides_right((x,), p) and self.divides_right((x,), n):
                    p = self.right_quotient(p, (x,))
                    n = self.right_quotient(n, (x,))
                    break
            else:
                break
        return fraction(p, n)

    # -- divisor sets ----------------------------------------------------

    def left_divisors(self, b: Iterable[int], limit: int = 10**6) -> list[Word]:
        """Canonical words of all left divisors of b, breadth first from the empty word."""
        b = tuple(b)
        seen = {()}
        queue = deque([()])
        while queue:
            w = queue.popleft()
            for x in self.atoms:
                cand = w + (x,)
                if not self.divides_left(cand, b):
                    continue
                c = self.canonical_word(cand)
                if c not in seen:
                    seen.add(c)
                    if len(seen) > limit:
                        raise BudgetExceeded(limit, "divisor enumeration")
                    queue.append(c)
        return sort_words(seen)

    def right_divisors(self, b: Iterable[int], limit: int = 10**6) -> list[Word]:
        """Canonical words (in this monoid) of all right divisors of b."""
        mirrored = self.mirror.left_divisors(tuple(b)[::-1], limit)
        return sort_words({self.canonical_word(w[::-1]) for w in mirrored})

    def is_balanced(self, b: Iterable[int], limit: int = 10**6) -> bool:
        b = tuple(b)
        return self.left_divisors(b, limit) == self.right_divisors(b, limit)

    # -- conjugation by delta --------------------------------------------

    def delta_conjugation(self) -> dict[int, int]:
        """The atom permutation x -> y with ``delta x = y delta``."""
        perm = {}
        for x in self.atoms:
            target = self.delta + (x,)
            for y in self.atoms:
                if self.equal((y,) + self.delta, target):
                    perm[x] = y
                    break
            else:
                raise ValueError(f"delta does not conjugate atom {x} to an atom")
        return perm

    def delta_conjugation_order(self) -> int:
        perm = self.delta_conjugation()
        order = 1
        seen = set()
        for start in perm:
            if start in seen:
                continue
            length = 0
            x = start
            while x not in seen:
                seen.add(x)
                x = perm[x]
                length += 1
            order = lcm(order, length)
        return order
