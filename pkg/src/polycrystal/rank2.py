"""Closed formulas in rank 2 with ``iota = (1, 2, 1, 2, ...)``.

Cartan data: ``<h_1, alpha_2> = -c1`` and ``<h_2, alpha_1> = -c2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .crystal import INFINITY, ZVector, zvec
from .polyhedral import LinearForm
from .rootdata import CartanMatrix, Weight, WeylWord
from .sequence import IotaSequence


@dataclass(frozen=True)
class Rank2Params:
    c1: int
    c2: int
    m1: int = 0
    m2: int = 0

    def __post_init__(self):
        if min(self.c1, self.c2, self.m1, self.m2) < 0:
            raise ValueError("rank-2 parameters must be nonnegative")
        if (self.c1 == 0) != (self.c2 == 0):
            raise ValueError("c1 and c2 must vanish together")

    @property
    def X(self) -> int:
        return self.c1 * self.c2 - 2

    @property
    def swapped(self) -> "Rank2Params":
        return Rank2Params(self.c2, self.c1, self.m1, self.m2)

    def cartan(self) -> CartanMatrix:
        return CartanMatrix.from_rows([[2, -self.c1], [-self.c2, 2]])

    def weight(self) -> Weight:
        return Weight((self.m1, self.m2))

    @staticmethod
    def iota() -> IotaSequence:
        return IotaSequence.periodic(1, 2)


def chebyshev_P(k: int, X: int) -> int:
    """Coefficient of ``z^k`` in ``1 / (1 - X z + z^2)``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    prev, cur = 1, X
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, X * cur - prev
    return cur


def a_l(p: Rank2Params, l: int) -> int:
    if l < 0:
        raise ValueError("l must be >= 0")
    if l == 0:
        return 0
    if l == 1:
        return 1
    k, odd = divmod(l, 2)
    if odd:
        return chebyshev_P(k, p.X) + chebyshev_P(k - 1, p.X)
    return p.c1 * chebyshev_P(k - 1, p.X)


def a_prime_l(p: Rank2Params, l: int) -> int:
    return a_l(p.swapped, l)


def l_max(p: Rank2Params):
    """First ``l`` with ``a_{l+1} < 0``; ``INFINITY`` when none exists."""
    if p.c1 * p.c2 >= 4:
        return INFINITY
    for l in range(0, 2 * (p.c1 * p.c2 + 4) + 1):
        if a_l(p, l + 1) < 0:
            return l
    return INFINITY


def w_L(L: int, p: Optional[Rank2Params] = None) -> WeylWord:
    """Alternating word ``1, 2, 1, ...`` of length ``L`` (application order)."""
    if L < 0:
        raise ValueError("L must be >= 0")
    if p is not None:
        top = l_max(p)
        if top is not INFINITY and L > top:
            raise ValueError(f"L = {L} exceeds l_max = {top}")
    return WeylWord(tuple(1 if k % 2 == 0 else 2 for k in range(L)))


def d_k(p: Rank2Params, k: int) -> int:
    """``m1 * a'_k + m2 * a_{k-1}``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return p.m1 * a_prime_l(p, k) + p.m2 * a_l(p, k - 1)


def rank2_extremal(p: Rank2Params, L: int) -> ZVector:
    w_L(L, p)
    return zvec(d_k(p, k) for k in range(1, L + 1))


def rank2_polytope(p: Rank2Params, bound: Optional[int] = None) -> tuple[list[LinearForm], int]:
    """Inequalities for the image of ``B(lambda)`` and the window length.

    Returns ``(forms, top)``: every point has ``x_k = 0`` for ``k > top``.
    ``bound`` caps ``top`` and is required when ``l_max`` is infinite.
    """
    top = l_max(p)
    if top is INFINITY:
        if bound is None:
            raise ValueError("l_max is infinite; pass an explicit bound")
        top = bound
    elif bound is not None:
        top = min(top, bound)
    forms = [LinearForm(Fraction(p.m1), ((1, -1),))]
    for k in range(1, top + 1):
        forms.append(LinearForm.var(k))
    for l in range(1, top):
        forms.append(LinearForm(Fraction(0), ((l, a_l(p, l)), (l + 1, -a_l(p, l - 1)))))
        forms.append(LinearForm(Fraction(p.m2), ((l, a_prime_l(p, l + 1)), (l + 1, -a_prime_l(p, l)))))
    return forms, top
