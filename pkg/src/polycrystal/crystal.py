"""Crystal structure on integer sequences: Kashiwara operators, weights,
string functions, and enumeration of B(lambda), B_w(lambda), B_w(infinity).

A point ``x = (x_1, x_2, ...)`` is stored as a tuple with trailing zeros
trimmed, so ``()`` is the zero vector and tuples are directly hashable.
Operators return ``None`` for the crystal zero.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Optional

from .rootdata import CartanMatrix, Weight, WeightOffset, WeylWord, is_reduced
from .sequence import IotaSequence

ZVector = tuple  # tuple[int, ...] with no trailing zeros


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


class CrystalError(RuntimeError):
    """An operator hit the crystal zero where the theory forbids it."""


def zvec(data: Iterable[int] | Mapping[int, int] = ()) -> ZVector:
    """Normalise a dense sequence (x_1 first) or a ``{k: x_k}`` map."""
    if isinstance(data, Mapping):
        if not data:
            return ()
        top = max(k for k, v in data.items() if v) if any(data.values()) else 0
        dense = [0] * top
        for k, v in data.items():
            if k < 1:
                raise ValueError(f"positions start at 1, got {k}")
            if v:
                dense[k - 1] = int(v)
        return tuple(dense)
    dense = list(int(v) for v in data)
    while dense and dense[-1] == 0:
        dense.pop()
    return tuple(dense)


def coord(x: ZVector, k: int) -> int:
    return x[k - 1] if k <= len(x) else 0


def bump(x: ZVector, k: int, delta: int) -> ZVector:
    dense = list(x) + [0] * (k - len(x))
    dense[k - 1] += delta
    return zvec(dense)


def padded(x: ZVector, length: int) -> tuple[int, ...]:
    return tuple(x) + (0,) * (length - len(x))


def sort_points(points: Iterable[ZVector]) -> list[ZVector]:
    """Canonical order: lexicographic on ``(x_1, x_2, ...)`` with zero padding."""
    pts = list(points)
    width = max((len(p) for p in pts), default=0)
    return sorted(pts, key=lambda p: padded(p, width))


class SigmaMax(NamedTuple):
    value: int
    first: int
    last: Optional[int]  # None when the argmax set is infinite


@dataclass(frozen=True)
class CrystalContext:
    """``(A, iota, lambda)``; ``lam=INFINITY`` selects the B(infinity) rules."""

    A: CartanMatrix
    iota: IotaSequence
    lam: object = INFINITY

    def __post_init__(self):
        if self.lam is not INFINITY:
            lam = self.lam if isinstance(self.lam, Weight) else Weight(tuple(self.lam))
            if len(lam.m) != self.A.n:
                raise ValueError("weight rank does not match Cartan matrix")
            object.__setattr__(self, "lam", lam)

    @property
    def infinite(self) -> bool:
        return self.lam is INFINITY

    def _need_lambda(self) -> Weight:
        if self.infinite:
            raise ValueError("operation needs a weight, context is in B(infinity) mode")
        return self.lam

    def _require_dominant(self) -> Weight:
        lam = self._need_lambda()
        if not lam.dominant:
            raise ValueError(f"enumeration needs a dominant weight, got {lam.m}")
        return lam

    # -- linear functions -------------------------------------------------

    def sigmas(self, x: ZVector) -> list[int]:
        """``[sigma_1(x), ..., sigma_N(x)]`` for ``N = len(x)``.

        One backward sweep keeping ``acc[i] = sum_{j>k} <h_i, alpha_{i_j}> x_j``.
        """
        A = self.A.a
        n = self.A.n
        acc = [0] * n
        out = [0] * len(x)
        for k in range(len(x), 0, -1):
            ik = self.iota.at(k)
            out[k - 1] = x[k - 1] + acc[ik - 1]
            xk = x[k - 1]
            if xk:
                col = ik - 1
                for i in range(n):
                    acc[i] += A[i][col] * xk
        return out

    def sigma_k(self, x: ZVector, k: int) -> int:
        if k < 1:
            raise ValueError("k must be >= 1")
        if k > len(x):
            return 0
        ik = self.iota.at(k)
        row = self.A.a[ik - 1]
        return x[k - 1] + sum(row[self.iota.at(j) - 1] * x[j - 1] for j in range(k + 1, len(x) + 1))

    def sigma0(self, x: ZVector, i: int) -> int:
        lam = self._need_lambda()
        self.A.check_index(i)
        row = self.A.a[i - 1]
        return -lam.m[i - 1] + sum(row[self.iota.at(j) - 1] * xj for j, xj in enumerate(x, start=1))

    def sigma_max(self, x: ZVector, i: int, sig: Optional[list[int]] = None) -> SigmaMax:
        """``sigma^(i)(x)`` with the extremes of its argmax set ``M^(i)``.

        Beyond ``len(x)`` every ``sigma_k`` vanishes and index ``i`` recurs,
        so the scan over ``k <= len(x)`` plus one later occurrence suffices.
        """
        self.A.check_index(i)
        if sig is None:
            sig = self.sigmas(x)
        best = 0
        first = None
        last = None
        for k in range(1, len(x) + 1):
            if self.iota.at(k) != i:
                continue
            s = sig[k - 1]
            if s > best:
                best, first, last = s, k, k
            elif s == best:
                if first is None:
                    first = k
                last = k
        if best == 0:
            if first is None:
                first = self.iota.next_at_or_after(i, len(x) + 1)
            return SigmaMax(0, first, None)
        return SigmaMax(best, first, last)

    # -- Kashiwara operators ----------------------------------------------

    def f(self, i: int, x: Optional[ZVector]) -> Optional[ZVector]:
        if x is None:
            return None
        sm = self.sigma_max(x, i)
        if not self.infinite and sm.value <= self.sigma0(x, i):
            return None
        return bump(x, sm.first, 1)

    def e(self, i: int, x: Optional[ZVector]) -> Optional[ZVector]:
        if x is None:
            return None
        sm = self.sigma_max(x, i)
        if sm.value <= 0:
            return None
        if not self.infinite and sm.value < self.sigma0(x, i):
            return None
        assert sm.last is not None, "argmax set must be finite when sigma^(i) > 0"
        return bump(x, sm.last, -1)

    def wt(self, x: ZVector) -> WeightOffset:
        lam = self._need_lambda()
        c = [0] * self.A.n
        for k, xk in enumerate(x, start=1):
            c[self.iota.at(k) - 1] += xk
        return WeightOffset(lam, tuple(c))

    def epsilon(self, x: ZVector, i: int) -> int:
        return max(self.sigma_max(x, i).value, self.sigma0(x, i))

    def phi(self, x: ZVector, i: int) -> int:
        return -self.sigma0(x, i) + self.epsilon(x, i)

    def f_max(self, i: int, x: ZVector) -> ZVector:
        """Apply ``f_i`` exactly ``phi_i(x)`` times."""
        times = self.phi(x, i)
        if times < 0:
            raise CrystalError(f"phi_{i} = {times} < 0 at {x}")
        y = x
        for step in range(times):
            y = self.f(i, y)
            if y is None:
                raise CrystalError(f"f_{i} vanished after {step} of {times} steps from {x}")
        return y


# -- module-level operation names ---------------------------------------------

def sigma_k(ctx: CrystalContext, x: ZVector, k: int) -> int:
    return ctx.sigma_k(x, k)


def sigma0_i(ctx: CrystalContext, x: ZVector, i: int) -> int:
    return ctx.sigma0(x, i)


def sigma_max_and_M(ctx: CrystalContext, x: ZVector, i: int) -> SigmaMax:
    return ctx.sigma_max(x, i)


def f_tilde(ctx: CrystalContext, i: int, x: Optional[ZVector]) -> Optional[ZVector]:
    return ctx.f(i, x)


def e_tilde(ctx: CrystalContext, i: int, x: Optional[ZVector]) -> Optional[ZVector]:
    return ctx.e(i, x)


def wt(ctx: CrystalContext, x: ZVector) -> WeightOffset:
    return ctx.wt(x)


def epsilon_i(ctx: CrystalContext, x: ZVector, i: int) -> int:
    return ctx.epsilon(x, i)


def phi_i(ctx: CrystalContext, x: ZVector, i: int) -> int:
    return ctx.phi(x, i)


def f_max(ctx: CrystalContext, i: int, x: ZVector) -> ZVector:
    return ctx.f_max(i, x)


# -- enumeration ----------------------------------------------------------------

@dataclass
class Enumeration:
    points: list[ZVector]
    complete: bool

    def __len__(self):
        return len(self.points)

    def __contains__(self, x):
        return x in set(self.points)


def enumerate_image(ctx: CrystalContext, max_elements: int = 100_000,
                    max_depth: Optional[int] = None) -> Enumeration:
    """Closure of the zero vector under every ``f_i``, layer by layer.

    Layer ``d`` holds points with coordinate sum ``d``. ``complete`` is False
    when either budget stopped the search before the frontier emptied.
    """
    ctx._require_dominant()
    seen = {()}
    frontier = [()]
    depth = 0
    while frontier:
        nxt = set()
        for x in frontier:
            for i in range(1, ctx.A.n + 1):
                y = ctx.f(i, x)
                if y is not None and y not in seen:
                    nxt.add(y)
        if not nxt:
            break
        if max_depth is not None and depth >= max_depth:
            return Enumeration(sort_points(seen), False)
        if len(seen) + len(nxt) > max_elements:
            room = max_elements - len(seen)
            seen.update(sort_points(nxt)[:max(room, 0)])
            return Enumeration(sort_points(seen), False)
        seen.update(nxt)
        frontier = sort_points(nxt)
        depth += 1
    return Enumeration(sort_points(seen), True)


def _check_word(ctx: CrystalContext, w: WeylWord) -> None:
    w.check(ctx.A)
    if not is_reduced(ctx.A, w):
        raise ValueError(f"word {w.letters} is not reduced")
    if not ctx.iota.extends(w):
        raise ValueError(f"iota {ctx.iota.head(len(w))} does not start with word {w.letters}")


def demazure_crystal(ctx: CrystalContext, w: WeylWord) -> list[ZVector]:
    """``B_w(lambda)`` grown one letter at a time by full ``f_i``-strings."""
    ctx._require_dominant()
    _check_word(ctx, w)
    current = {()}
    for i in w.letters:
        grown = set()
        for b in current:
            y = b
            while y is not None and y not in grown:
                grown.add(y)
                y = ctx.f(i, y)
        current = grown
    return sort_points(current)


@dataclass
class BInfinityDemazure:
    """Depth-bounded slice of ``B_w(infinity)`` with an exact membership test."""

    ctx: CrystalContext
    word: WeylWord
    points: list[ZVector]
    budget: int

    def contains(self, x: ZVector) -> bool:
        x = zvec(x)
        if len(x) > len(self.word) or any(v < 0 for v in x):
            return False
        return in_b_infinity_image(self.ctx, x)


def in_b_infinity_image(ctx: CrystalContext, x: ZVector) -> bool:
    """Greedy ``e``-reduction in B(infinity) mode reaches zero iff ``x`` is in the image."""
    if not ctx.infinite:
        raise ValueError("B(infinity) membership needs an INFINITY context")
    y = zvec(x)
    while y:
        for i in range(1, ctx.A.n + 1):
            z = ctx.e(i, y)
            if z is not None:
                y = z
                break
        else:
            return False
    return True


def demazure_b_infinity(ctx: CrystalContext, w: WeylWord, budget: int) -> BInfinityDemazure:
    if not ctx.infinite:
        raise ValueError("demazure_b_infinity needs an INFINITY context")
    _check_word(ctx, w)
    current = {()}
    for i in w.letters:
        grown = set()
        for b in current:
            y = b
            while sum(y) <= budget and y not in grown:
                grown.add(y)
                y = ctx.f(i, y)
        current = grown
    return BInfinityDemazure(ctx, w, sort_points(current), budget)


class StringStatus(enum.Enum):
    FULL = "full"
    HIGHEST_ONLY = "highest_only"
    EMPTY = "empty"
    OTHER = "other"  # none of the three allowed shapes


def i_string(ctx: CrystalContext, i: int, x: ZVector) -> list[ZVector]:
    """The ``i``-string through ``x``, head first."""
    head = x
    while True:
        up = ctx.e(i, head)
        if up is None:
            break
        head = up
    out = []
    y = head
    while y is not None:
        out.append(y)
        y = ctx.f(i, y)
    return out


def i_string_status(ctx: CrystalContext, S, i: int, x: ZVector) -> StringStatus:
    S = S if isinstance(S, (set, frozenset)) else set(S)
    string = i_string(ctx, i, x)
    inside = [y in S for y in string]
    if not any(inside):
        return StringStatus.EMPTY
    if all(inside):
        return StringStatus.FULL
    if inside[0] and not any(inside[1:]):
        return StringStatus.HIGHEST_ONLY
    return StringStatus.OTHER


def crystal_edges(ctx: CrystalContext, points: Iterable[ZVector]) -> list[tuple[ZVector, int, ZVector]]:
    """Edges ``b -> f_i b`` with both ends inside ``points``, canonically ordered."""
    pts = sort_points(points)
    members = set(pts)
    out = []
    for b in pts:
        for i in range(1, ctx.A.n + 1):
            y = ctx.f(i, b)
            if y is not None and y in members:
                out.append((b, i, y))
    return out
