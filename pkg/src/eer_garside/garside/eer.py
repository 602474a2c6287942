"""The Garside monoid of type (e, e, r) and its letter maps."""

from __future__ import annotations

from math import gcd
from typing import Iterable

from ..presentation import (
    Word,
    apply_down,
    build_classical_b,
    build_eer,
    circle_index,
    tail_index,
)
from ..reversing import DEFAULT_BUDGET
from .monoid import GarsideMonoid


class EERGarside(GarsideMonoid):
    """Garside monoid of type (e, e, r) with delta = Lambda_2 Lambda_3 ... Lambda_r.

    ``tau`` is t1 t0 (t0 t0 when e = 1) and ``lambdas[k]`` spells
    ``s_k ... s_3 tau s_3 ... s_k`` (``lambdas[2]`` is tau itself).
    """

    def __init__(self, e: int, r: int, budget: int = DEFAULT_BUDGET):
        p = build_eer(e, r)
        self.e = e
        self.r = r
        self.tau: Word = (circle_index(e, 1), circle_index(e, 0))
        self.lambdas: dict[int, Word] = {k: lambda_word(e, k) for k in range(2, r + 1)}
        delta = sum((self.lambdas[k] for k in range(2, r + 1)), ())
        super().__init__(p, delta, budget)

    def t(self, i: int) -> int:
        return circle_index(self.e, i)

    def s(self, j: int) -> int:
        if not 3 <= j <= self.r:
            raise ValueError(f"s{j} is not a generator for r = {self.r}")
        return tail_index(self.e, j)

    def down(self, w: Iterable[int]) -> Word:
        return apply_down(w, self.e)

    def phi(self, w: Iterable[int]) -> Word:
        return phi(w, self.e, self.r)

    def height(self, w: Iterable[int]) -> int:
        return height(w, self.e)


def tail_down(e: int, hi: int, lo: int) -> Word:
    """s_hi s_{hi-1} ... s_lo, empty when hi < lo."""
    return tuple(tail_index(e, j) for j in range(hi, lo - 1, -1))


def tail_up(e: int, lo: int, hi: int) -> Word:
    """s_lo s_{lo+1} ... s_hi, empty when hi < lo."""
    return tuple(tail_index(e, j) for j in range(lo, hi + 1))


def lambda_word(e: int, k: int) -> Word:
    tau = (circle_index(e, 1), circle_index(e, 0))
    if k == 2:
        return tau
    return tail_down(e, k, 3) + tau + tail_up(e, 3, k)


def phi(w: Iterable[int], e: int, r: int) -> Word:
    """Conjugation by delta on letters: t_i -> t_{i+r}, s_j -> s_j."""
    return tuple((x + r) % e if x < e else x for x in w)


def phi_order(e: int, r: int) -> int:
    return e // gcd(e, r)


def height(w: Iterable[int], e: int) -> int:
    """Largest letter height (t_i: 2, s_q: q); the empty word has height 1."""
    return max((2 if x < e else x - e + 3 for x in w), default=1)


def psi_embed(w: Iterable[int], e: int) -> Word:
    """Map a word over q1..q_{r-1} (type B) into type (e, e, r).

    q1 goes to tau = t1 t0 and q_k to s_{k+1}.  Letters are indices of the
    classical B presentation (index k - 1 for q_k).
    """
    tau = (circle_index(e, 1), circle_index(e, 0))
    out: Word = ()
    for x in w:
        out += tau if x == 0 else (tail_index(e, x + 2),)
    return out


def lambda_decompositions(g: EERGarside) -> dict[str, Word]:
    """Four spellings of delta obtained by pushing the type B delta through psi."""
    e, r = g.e, g.r
    tau = g.tau
    forward = sum((g.lambdas[k] for k in range(2, r + 1)), ())
    backward = sum((g.lambdas[k] for k in range(r, 1, -1)), ())
    up_power = (tau + tail_up(e, 3, r)) * (r - 1)
    down_power = (tail_down(e, r, 3) + tau) * (r - 1)
    return {
        "lambda-product": forward,
        "reversed-lambda-product": backward,
        "(tau s3..sr)^(r-1)": up_power,
        "(sr..s3 tau)^(r-1)": down_power,
    }


def classical_b_delta(n: int) -> Word:
    """``(q1 q2 ... qn)^n``, the Garside element of the type B_n monoid."""
    return tuple(range(n)) * n


def classical_b_monoid(n: int, budget: int = DEFAULT_BUDGET) -> GarsideMonoid:
    return GarsideMonoid(build_classical_b(n), classical_b_delta(n), budget)

