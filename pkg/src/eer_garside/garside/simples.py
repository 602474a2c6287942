"""Simples of the (e, e, r) monoid: closed-form tuples and a brute-force oracle.

Every simple is a product ``p_2 p_3 ... p_r`` where p_k left-divides
Lambda_k.  The non-trivial divisors of Lambda_k come in four families:

    full    s_k ... s_3 tau s_3 ... s_j    (3 <= j <= k)
    tau     s_k ... s_3 tau
    circle  s_k ... s_3 t_i                (i mod e)
    tail    s_k ... s_j                    (3 <= j <= k)

so Lambda_k has 2(k - 1) + e divisors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from ..presentation import Word, circle_index
from .eer import EERGarside, tail_down, tail_up
from .monoid import sort_words

KINDS = ("empty", "full", "tau", "circle", "tail")


@dataclass(frozen=True, order=True)
class LambdaDivisor:
    k: int
    kind: str
    param: int | None = None

    def word(self, e: int) -> Word:
        k = self.k
        tau = (circle_index(e, 1), circle_index(e, 0))
        if self.kind == "empty":
            return ()
        if self.kind == "full":
            return tail_down(e, k, 3) + tau + tail_up(e, 3, self.param)
        if self.kind == "tau":
            return tail_down(e, k, 3) + tau
        if self.kind == "circle":
            return tail_down(e, k, 3) + (circle_index(e, self.param),)
        if self.kind == "tail":
            return tail_down(e, k, self.param)
        raise ValueError(f"unknown divisor kind {self.kind!r}")


def lambda_divisors(e: int, k: int) -> list[LambdaDivisor]:
    out = [LambdaDivisor(k, "empty")]
    out += [LambdaDivisor(k, "tail", j) for j in range(k, 2, -1)]
    out += [LambdaDivisor(k, "circle", i) for i in range(e)]
    out.append(LambdaDivisor(k, "tau"))
    out += [LambdaDivisor(k, "full", j) for j in range(3, k + 1)]
    return out


@dataclass(frozen=True)
class Simple:
    parts: tuple[LambdaDivisor, ...]  # p_2, ..., p_r
    word: Word

    def __len__(self) -> int:
        return len(self.word)


def simples_closed(g: EERGarside) -> list[Simple]:
    """All tuples (p_2, ..., p_r), sorted by the length and letters of their words."""
    per_k = [lambda_divisors(g.e, k) for k in range(2, g.r + 1)]
    out = []
    for parts in product(*per_k):
        word = sum((d.word(g.e) for d in parts), ())
        out.append(Simple(parts, word))
    out.sort(key=lambda s: (len(s.word), s.word))
    return out


def simples_oracle(g: EERGarside) -> list[Word]:
    """Left divisors of delta by exhaustive search, as canonical words."""
    return g.left_divisors(g.delta)


def simple_index(g: EERGarside, simples: Iterable[Simple]) -> dict[Word, Simple]:
    """Map the canonical word of each simple to the simple."""
    return {g.canonical_word(s.word): s for s in simples}


def covering_pairs(g: EERGarside, simples: list[Simple]) -> list[tuple[int, int, int]]:
    """Edges (i, j, x) with ``simples[j] = simples[i] * x`` for an atom x."""
    index = {g.canonical_word(s.word): n for n, s in enumerate(simples)}
    edges = []
    for i, s in enumerate(simples):
        for x in g.atoms:
            cand = s.word + (x,)
            if g.divides_left(cand, g.delta):
                edges.append((i, index[g.canonical_word(cand)], x))
    return edges


def format_simple(g: EERGarside, s: Simple) -> str:
    p = g.presentation
    return p.format(s.word) + "\t" + "|".join(p.format(d.word(g.e)) for d in s.parts)


def lattice_dot(g: EERGarside, simples: list[Simple] | None = None) -> str:
    """Hasse diagram of left divisibility on the simples, in DOT syntax."""
    if simples is None:
        simples = simples_closed(g)
    p = g.presentation
    lines = [f'digraph "simples_{g.e}_{g.e}_{g.r}" {{', "  rankdir=BT;"]
    for n, s in enumerate(simples):
        label = p.format(s.word) if s.word else "1"
        lines.append(f'  n{n} [label="{label}"];')
    for i, j, x in covering_pairs(g, simples):
        lines.append(f'  n{i} -> n{j} [label="{p.generators[x].name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def same_elements(g: EERGarside, a: Iterable[Word], b: Iterable[Word]) -> bool:
    """Whether two word collections name the same set of elements."""
    return set(map(g.canonical_word, a)) == set(map(g.canonical_word, b))


def canonical_simple_words(g: EERGarside) -> list[Word]:
    return sort_words({g.canonical_word(s.word) for s in simples_closed(g)})
