"""Positive presentations: generator alphabets, relations, complement tables.

Words are tuples of generator indices.  The index of a generator is its
position in ``Presentation.generators``, which is also the canonical order
used for every tie-break in the package: for the (e, e, r) family that is
``t0 < t1 < ... < t_{e-1} < s3 < ... < sr``.

Signed words use the same indices for positive letters and ``~i`` (that is
``-i - 1``) for the inverse of generator ``i``.
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import NotComplemented, NotHomogeneous, ParseError, PresentationError

Word = tuple[int, ...]
SignedWord = tuple[int, ...]

EER = "eer"
CLASSICAL_A = "classical-a"
CLASSICAL_B = "classical-b"
DUAL_I2 = "dual-i2"
REVERSED_PREFIX = "reversed-"

_TOKEN = re.compile(r"(-?)([a-z])(-?\d+)$")


@dataclass(frozen=True, order=True)
class Generator:
    kind: str  # "t" circle, "s" tail, "a"/"q" classical
    index: int

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    @property
    def heads(self) -> tuple[int, int]:
        return self.lhs[0], self.rhs[0]

    def is_homogeneous(self) -> bool:
        return len(self.lhs) == len(self.rhs)

    def reversed(self) -> "Relation":
        return Relation(self.lhs[::-1], self.rhs[::-1])


@dataclass(frozen=True)
class Presentation:
    family: str
    e: int | None
    r: int
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...]

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    @property
    def base_family(self) -> str:
        return self.family.removeprefix(REVERSED_PREFIX)

    @cached_property
    def _names(self) -> dict[str, int]:
        return {g.name: i for i, g in enumerate(self.generators)}

    def index(self, name: str) -> int:
        try:
            return self._names[name]
        except KeyError:
            raise ParseError(f"unknown generator {name!r}") from None

    # -- structure checks ------------------------------------------------

    def is_homogeneous(self) -> bool:
        return all(rel.is_homogeneous() for rel in self.relations)

    def complemented_violation(self) -> tuple[int, int] | None:
        """Return a head pair breaking complemented-ness, or None."""
        seen = set()
        for rel in self.relations:
            x, y = rel.heads
            if x == y:
                return x, y
            key = frozenset((x, y))
            if key in seen:
                return x, y
            seen.add(key)
        return None

    def is_complemented(self) -> bool:
        return self.complemented_violation() is None

    def require_reversible(self) -> None:
        """Raise unless the presentation is homogeneous and complemented."""
        if not self.is_homogeneous():
            raise NotHomogeneous(f"{self.family}: relations of unequal length")
        bad = self.complemented_violation()
        if bad is not None:
            x, y = (self.generators[i].name for i in bad)
            raise NotComplemented(f"{self.family}: several relations with heads {x}, {y}")

    @cached_property
    def complement(self) -> dict[tuple[int, int], tuple[Word, Word]]:
        """Map (x, y) to (u, v) where x u = y v is the relation headed by x, y."""
        bad = self.complemented_violation()
        if bad is not None:
            raise NotComplemented(f"head pair {bad} is not complemented")
        table = {}
        for rel in self.relations:
            x, y = rel.heads
            table[x, y] = (rel.lhs[1:], rel.rhs[1:])
            table[y, x] = (rel.rhs[1:], rel.lhs[1:])
        return table

    @cached_property
    def mirror(self) -> "Presentation":
        """The presentation with every relation letter-reversed."""
        return reverse_presentation(self)

    def is_complement_total(self) -> bool:
        n = self.n_generators
        return all((x, y) in self.complement for x in range(n) for y in range(n) if x != y)

    # -- text format -----------------------------------------------------

    def word(self, text: str | Sequence[str]) -> Word:
        """Parse a positive word such as ``"t1 t0 s3"`` (``"1"`` is empty)."""
        signed = self.signed_word(text)
        if any(x < 0 for x in signed):
            raise ParseError(f"inverse letter in positive word {text!r}")
        return signed

    def signed_word(self, text: str | Sequence[str]) -> SignedWord:
        tokens = text.split() if isinstance(text, str) else list(text)
        if tokens == ["1"]:
            return ()
        out = []
        for tok in tokens:
            m = _TOKEN.match(tok)
            if m is None:
                raise ParseError(f"bad token {tok!r}")
            x = self.index(m.group(2) + m.group(3))
            out.append(~x if m.group(1) else x)
        return tuple(out)

    def format(self, w: Iterable[int]) -> str:
        w = tuple(w)
        if not w:
            return "1"
        return " ".join(
            self.generators[x].name if x >= 0 else "-" + self.generators[~x].name for x in w
        )

    format_signed = format

    def __str__(self) -> str:
        return dumps(self)


# ---------------------------------------------------------------------------
# builders


def _eer_generators(e: int, r: int) -> tuple[Generator, ...]:
    return tuple(Generator("t", i) for i in range(e)) + tuple(
        Generator("s", j) for j in range(3, r + 1)
    )


def circle_index(e: int, i: int) -> int:
    """Index of t_i (i taken mod e) in an (e, e, r) presentation."""
    return i % e


def tail_index(e: int, j: int) -> int:
    """Index of s_j in an (e, e, r) presentation."""
    return e + j - 3


def build_eer(e: int, r: int) -> Presentation:
    """Monoid presentation of type (e, e, r) on the circle t_i and the tail s_j."""
    if e < 1:
        raise PresentationError("e must be >= 1 (use build_classical_a for the empty circle)")
    if r < 2:
        raise PresentationError("r must be >= 2")
    t = lambda i: circle_index(e, i)  # noqa: E731
    s = lambda j: tail_index(e, j)  # noqa: E731
    rels = []
    tails = range(3, r + 1)
    for i, j in combinations(tails, 2):
        if j - i == 1:
            rels.append(Relation((s(i), s(j), s(i)), (s(j), s(i), s(j))))
    for i, j in combinations(tails, 2):
        if j - i > 1:
            rels.append(Relation((s(i), s(j)), (s(j), s(i))))
    if r >= 3:
        for i in range(e):
            rels.append(Relation((s(3), t(i), s(3)), (t(i), s(3), t(i))))
    for j in range(4, r + 1):
        for i in range(e):
            rels.append(Relation((s(j), t(i)), (t(i), s(j))))
    for i, j in combinations(range(e), 2):
        rels.append(Relation((t(i), t(i - 1)), (t(j), t(j - 1))))
    return Presentation(EER, e, r, _eer_generators(e, r), tuple(rels))


def build_dual_i2(e: int) -> Presentation:
    """The circle alone: the (e, e, 2) presentation tagged as dihedral dual."""
    p = build_eer(e, 2)
    return Presentation(DUAL_I2, e, 2, p.generators, p.relations)


def _coxeter_relations(n: int, label) -> tuple[Relation, ...]:
    rels = []
    for i, j in combinations(range(n), 2):
        m = label(i, j)
        rels.append(
            Relation(alternating_product(i, j, m), alternating_product(j, i, m))
        )
    return tuple(rels)


def build_classical_a(n: int) -> Presentation:
    """Artin presentation of the positive braid monoid of type A_n."""
    if n < 1:
        raise PresentationError("n must be >= 1")
    rels = _coxeter_relations(n, lambda i, j: 3 if j - i == 1 else 2)
    gens = tuple(Generator("a", k) for k in range(1, n + 1))
    return Presentation(CLASSICAL_A, None, n, gens, rels)


def build_classical_b(n: int) -> Presentation:
    """Artin presentation of type B_n; the edge q1 - q2 carries the label 4."""
    if n < 1:
        raise PresentationError("n must be >= 1")

    def label(i, j):
        if j - i > 1:
            return 2
        return 4 if i == 0 else 3

    gens = tuple(Generator("q", k) for k in range(1, n + 1))
    return Presentation(CLASSICAL_B, None, n, gens, _coxeter_relations(n, label))


def reverse_presentation(p: Presentation) -> Presentation:
    if p.family.startswith(REVERSED_PREFIX):
        family = p.base_family
    else:
        family = REVERSED_PREFIX + p.family
    rels = tuple(rel.reversed() for rel in p.relations)
    return Presentation(family, p.e, p.r, p.generators, rels)


# ---------------------------------------------------------------------------
# letter maps


def alternating_product(a: int, b: int, m: int) -> Word:
    """The word a b a b ... with m letters."""
    return tuple(a if k % 2 == 0 else b for k in range(m))


def _shift(w: Iterable[int], e: int, step: int) -> Word:
    return tuple((x + step) % e if x < e else x for x in w)


def apply_down(w: Iterable[int], e: int) -> Word:
    """Rotate the circle backwards: t_i -> t_{i-1}, tail letters fixed."""
    return _shift(w, e, -1)


def apply_up(w: Iterable[int], e: int) -> Word:
    return _shift(w, e, 1)


def mirror_letters(w: Iterable[int], e: int) -> Word:
    """t_i -> t_{-i}, s_j -> s_j; carries the (e, e, r) relations onto their reversals."""
    return tuple((-x) % e if x < e else x for x in w)


def fold(w: Iterable[int], e_source: int, e_target: int) -> Word:
    """Map a word of type (e_source, e_source, r) to type (e_target, e_target, r)."""
    if e_target < 1 or e_source % e_target:
        raise PresentationError(f"{e_target} does not divide {e_source}")
    shift = e_target - e_source
    return tuple(x % e_target if x < e_source else x + shift for x in w)


# ---------------------------------------------------------------------------
# rewriting oracles (independent of reversing)


def _rewrite_rules(p: Presentation) -> list[tuple[Word, Word]]:
    rules = []
    for rel in p.relations:
        rules.append((rel.lhs, rel.rhs))
        rules.append((rel.rhs, rel.lhs))
    return rules


def one_step_rewrites(p: Presentation, w: Word) -> Iterator[Word]:
    """Every word obtained from w by replacing one occurrence of a relation side."""
    for lhs, rhs in _rewrite_rules(p):
        k = len(lhs)
        for pos in range(len(w) - k + 1):
            if w[pos : pos + k] == lhs:
                yield w[:pos] + rhs + w[pos + k :]


def rewrite_class(p: Presentation, w: Word, limit: int = 200_000) -> set[Word]:
    """All words equal to w by relation rewriting (finite for homogeneous p)."""
    seen = {tuple(w)}
    queue = deque(seen)
    while queue:
        cur = queue.popleft()
        for nxt in one_step_rewrites(p, cur):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise PresentationError(f"rewrite class exceeds {limit} words")
                queue.append(nxt)
    return seen


def random_word(p: Presentation, length: int, rng: random.Random) -> Word:
    return tuple(rng.randrange(p.n_generators) for _ in range(length))


def random_equivalent(p: Presentation, w: Word, steps: int, rng: random.Random) -> Word:
    """Apply up to ``steps`` random relation rewrites to w."""
    rules = _rewrite_rules(p)
    w = tuple(w)
    for _ in range(steps):
        sites = [
            (pos, lhs, rhs)
            for lhs, rhs in rules
            for pos in range(len(w) - len(lhs) + 1)
            if w[pos : pos + len(lhs)] == lhs
        ]
        if not sites:
            break
        pos, lhs, rhs = rng.choice(sites)
        w = w[:pos] + rhs + w[pos + len(lhs) :]
    return w


# ---------------------------------------------------------------------------
# serialization


def dumps(p: Presentation) -> str:
    e = "none" if p.e is None else str(p.e)
    lines = [f"{p.family} {e} {p.r}"]
    lines += [f"{p.format(rel.lhs)} = {p.format(rel.rhs)}" for rel in p.relations]
    return "\n".join(lines) + "\n"


def builder_for(family: str, e: int | None, r: int) -> Presentation:
    """Rebuild a presentation from its header fields."""
    base = family.removeprefix(REVERSED_PREFIX)
    if base == EER:
        p = build_eer(e, r)
    elif base == DUAL_I2:
        p = build_dual_i2(e)
    elif base == CLASSICAL_A:
        p = build_classical_a(r)
    elif base == CLASSICAL_B:
        p = build_classical_b(r)
    else:
        raise ParseError(f"unknown family {family!r}")
    return reverse_presentation(p) if family != base else p


def loads(text: str) -> Presentation:
    """Parse the line format written by :func:`dumps`.

    The header fixes the alphabet; the relation lines are read as given, so a
    hand-edited file may describe a presentation no builder produces.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty presentation text")
    try:
        family, e_txt, r_txt = lines[0].split()
        e = None if e_txt == "none" else int(e_txt)
        r = int(r_txt)
    except ValueError:
        raise ParseError(f"bad header {lines[0]!r}") from None
    template = builder_for(family, e, r)
    rels = []
    for ln in lines[1:]:
        lhs, sep, rhs = ln.partition("=")
        if not sep:
            raise ParseError(f"bad relation line {ln!r}")
        rels.append(Relation(template.word(lhs), template.word(rhs)))
    return Presentation(family, e, r, template.generators, tuple(rels))


# ---------------------------------------------------------------------------
# signed words


def positive(w: Iterable[int]) -> SignedWord:
    return tuple(w)


def inverse(w: Iterable[int]) -> SignedWord:
    """Formal inverse of a signed word."""
    return tuple(~x for x in reversed(tuple(w)))


def fraction(p_word: Iterable[int], n_word: Iterable[int]) -> SignedWord:
    """The signed word p n^-1."""
    return tuple(p_word) + inverse(n_word)
