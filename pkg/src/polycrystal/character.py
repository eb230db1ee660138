"""Characters anchored at a dominant weight, Demazure operators on them, and
the crystal-side operator whose weight image they intertwine with.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from .crystal import CrystalContext, CrystalError, ZVector, sort_points
from .rootdata import CartanMatrix, Weight, WeightOffset, WeylWord, is_reduced, pairing


class Character:
    """Finite sum ``sum coeff * e^(anchor - sum_j c_j alpha_j)`` keyed by ``c``."""

    __slots__ = ("anchor", "terms")

    def __init__(self, anchor: Weight, terms: Mapping[tuple[int, ...], int] | None = None):
        self.anchor = anchor
        self.terms: dict[tuple[int, ...], int] = {}
        for c, v in (terms or {}).items():
            if v:
                self.terms[tuple(c)] = int(v)

    @classmethod
    def monomial(cls, mu: WeightOffset, coeff: int = 1) -> "Character":
        return cls(mu.base, {mu.c: coeff})

    @classmethod
    def highest(cls, lam: Weight) -> "Character":
        return cls(lam, {(0,) * len(lam.m): 1})

    def _same_anchor(self, other: "Character") -> None:
        if self.anchor != other.anchor:
            raise ValueError("characters are anchored at different weights")

    def __add__(self, other: "Character") -> "Character":
        self._same_anchor(other)
        out = defaultdict(int, self.terms)
        for c, v in other.terms.items():
            out[c] += v
        return Character(self.anchor, out)

    def __neg__(self) -> "Character":
        return Character(self.anchor, {c: -v for c, v in self.terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.anchor == other.anchor and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def offsets(self) -> Iterable[WeightOffset]:
        for c, _ in self.items():
            yield WeightOffset(self.anchor, c)

    def __repr__(self):
        return f"Character({format_character(self)})"


def format_offset(c: Sequence[int]) -> str:
    """``λ - c1*a1 - c2*a2 ...`` with zero offsets omitted."""
    return "λ" + "".join(
        f" - {cj}*a{j}" if cj > 0 else f" + {-cj}*a{j}"
        for j, cj in enumerate(c, start=1) if cj)


def format_character(chi: Character) -> str:
    if not chi.terms:
        return "0"
    return " + ".join(f"{v} * e[{format_offset(c)}]" for c, v in chi.items())


def demazure_D_i(A: CartanMatrix, i: int, chi: Character) -> Character:
    """Linear extension of ``e^mu (1 - e^{-(1+m) alpha_i}) / (1 - e^{-alpha_i})``.

    With ``m = <h_i, mu>`` the quotient is a finite geometric sum: ``m + 1``
    terms going down when ``m >= 0``, nothing when ``m = -1``, and
    ``-(e^{mu+alpha_i} + ... + e^{mu+(-m-1) alpha_i})`` when ``m <= -2``.
    """
    A.check_index(i)
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for c, v in chi.terms.items():
        mu = WeightOffset(chi.anchor, c)
        m = pairing(A, i, mu)
        if m >= 0:
            for k in range(m + 1):
                out[mu.minus_alpha(i, k).c] += v
        elif m <= -2:
            for k in range(1, -m):
                out[mu.minus_alpha(i, -k).c] -= v
    return Character(chi.anchor, out)


def demazure_D_w(A: CartanMatrix, w: WeylWord, chi: Character) -> Character:
    """``D_{i_L} ... D_{i_1}`` with ``D_{i_1}`` applied first; needs a reduced word."""
    w.check(A)
    if not is_reduced(A, w):
        raise ValueError(f"word {w.letters} is not reduced")
    for i in w.letters:
        chi = demazure_D_i(A, i, chi)
    return chi


CrystalSum = dict  # dict[ZVector, int] without zero coefficients


def crystal_sum(terms: Mapping[ZVector, int] | Iterable[ZVector]) -> CrystalSum:
    if isinstance(terms, Mapping):
        return {b: v for b, v in terms.items() if v}
    out: dict = defaultdict(int)
    for b in terms:
        out[b] += 1
    return {b: v for b, v in out.items() if v}


def crystal_demazure_Di(ctx: CrystalContext, i: int, s: Mapping[ZVector, int]) -> CrystalSum:
    """``b -> f^0 b + ... + f^m b`` for ``m = <h_i, wt b> >= 0``,
    ``b -> -(e b + ... + e^{-m-1} b)`` for ``m < 0``."""
    out: dict = defaultdict(int)
    for b, v in s.items():
        m = -ctx.sigma0(b, i)
        if m >= 0:
            y = b
            for k in range(m + 1):
                if y is None:
                    raise CrystalError(f"f_{i}^{k} vanished on {b} with <h_i, wt> = {m}")
                out[y] += v
                y = ctx.f(i, y)
        else:
            y = b
            for k in range(1, -m):
                y = ctx.e(i, y)
                if y is None:
                    raise CrystalError(f"e_{i}^{k} vanished on {b} with <h_i, wt> = {m}")
                out[y] -= v
    return {b: v for b, v in out.items() if v}


def ewt(ctx: CrystalContext, s: Mapping[ZVector, int]) -> Character:
    out: dict = defaultdict(int)
    for b, v in s.items():
        out[ctx.wt(b).c] += v
    return Character(ctx.lam, out)


def character_of(ctx: CrystalContext, S: Iterable[ZVector]) -> Character:
    return ewt(ctx, crystal_sum(S))


def crystal_demazure_chain(ctx: CrystalContext, w: WeylWord) -> CrystalSum:
    """``D_{i_L} ... D_{i_1}`` (crystal version) applied to the highest weight vector."""
    s: CrystalSum = {(): 1}
    for i in w.letters:
        s = crystal_demazure_Di(ctx, i, s)
    return s


def format_crystal_sum(s: Mapping[ZVector, int]) -> str:
    if not s:
        return "0"
    return " + ".join(f"{s[b]}*{list(b)}" for b in sort_points(s))
