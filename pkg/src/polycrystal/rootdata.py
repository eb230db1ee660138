"""Cartan matrices, weights written as alpha-offsets, and Weyl words.

Indices are 1-based throughout to match the usual labelling of simple roots.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class CartanError(ValueError):
    pass


@dataclass(frozen=True)
class CartanMatrix:
    """Generalized Cartan matrix, ``a[i-1][j-1] = <h_i, alpha_j>``."""

    a: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.a)
        object.__setattr__(self, "a", rows)
        problems = cartan_problems(rows)
        if problems:
            raise CartanError("; ".join(problems))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "CartanMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.a)

    def __call__(self, i: int, j: int) -> int:
        """``<h_i, alpha_j>`` with 1-based indices."""
        return self.a[i - 1][j - 1]

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} out of range 1..{self.n}")


def cartan_problems(rows: Sequence[Sequence[int]]) -> list[str]:
    """List violations of the generalized-Cartan axioms (empty if none)."""
    n = len(rows)
    out = []
    for i, row in enumerate(rows):
        if len(row) != n:
            out.append(f"row {i + 1} has length {len(row)}, expected {n}")
    if out:
        return out
    for i in range(n):
        if rows[i][i] != 2:
            out.append(f"a[{i + 1}][{i + 1}] = {rows[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                out.append(f"a[{i + 1}][{j + 1}] = {rows[i][j]} is positive")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                out.append(f"a[{i + 1}][{j + 1}] and a[{j + 1}][{i + 1}] disagree on vanishing")
    return out


def symmetrizer(A: CartanMatrix) -> tuple[int, ...] | None:
    """Positive integers d with ``d_i a_ij = d_j a_ji``, or None.

    Ratios are propagated over the graph of nonzero off-diagonal entries, one
    component at a time, and every edge is re-checked afterwards so that cycles
    with inconsistent ratios are caught.
    """
    n = A.n
    d: list[Fraction | None] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or A.a[i][j] == 0:
                    continue
                # d_j = d_i a_ij / a_ji
                dj = d[i] * A.a[i][j] / A.a[j][i]
                if d[j] is None:
                    d[j] = dj
                    stack.append(j)
                elif d[j] != dj:
                    return None
    for i in range(n):
        for j in range(n):
            if d[i] * A.a[i][j] != d[j] * A.a[j][i]:
                return None
    scale = 1
    for v in d:
        scale = scale * v.denominator // _gcd(scale, v.denominator)
    ints = [int(v * scale) for v in d]
    g = 0
    for v in ints:
        g = _gcd(g, v)
    return tuple(v // g for v in ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def is_symmetrizable(A: CartanMatrix) -> bool:
    return symmetrizer(A) is not None


@dataclass(frozen=True)
class Weight:
    """``sum_i m_i Lambda_i``; ``m[i-1] = <h_i, lambda>``."""

    m: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(v) for v in self.m))

    @property
    def dominant(self) -> bool:
        return all(v >= 0 for v in self.m)

    def __getitem__(self, i: int) -> int:
        return self.m[i - 1]


@dataclass(frozen=True)
class WeightOffset:
    """The weight ``base - sum_j c_j alpha_j``."""

    base: Weight
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(v) for v in self.c))
        if len(self.c) != len(self.base.m):
            raise ValueError("offset length does not match weight rank")

    @classmethod
    def of(cls, base: Weight) -> "WeightOffset":
        return cls(base, (0,) * len(base.m))

    def minus_alpha(self, i: int, times: int = 1) -> "WeightOffset":
        c = list(self.c)
        c[i - 1] += times
        return WeightOffset(self.base, tuple(c))


def pairing(A: CartanMatrix, i: int, mu: WeightOffset) -> int:
    """``<h_i, mu>``."""
    A.check_index(i)
    row = A.a[i - 1]
    return mu.base.m[i - 1] - sum(cj * aij for cj, aij in zip(mu.c, row))


def reflect(A: CartanMatrix, i: int, mu: WeightOffset) -> WeightOffset:
    """Simple reflection ``s_i mu = mu - <h_i, mu> alpha_i``."""
    return mu.minus_alpha(i, pairing(A, i, mu))


@dataclass(frozen=True)
class WeylWord:
    """``s_{i_L} ... s_{i_1}`` stored in application order ``(i_1, ..., i_L)``."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(v) for v in self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def check(self, A: CartanMatrix) -> None:
        for i in self.letters:
            A.check_index(i)

    def display(self) -> str:
        """Product notation, leftmost factor applied last."""
        if not self.letters:
            return "1"
        return "".join(f"s{i}" for i in reversed(self.letters))


def root_reflect(A: CartanMatrix, i: int, beta: Sequence[int]) -> tuple[int, ...]:
    """Reflect a root given by its simple-root coordinates."""
    p = sum(A.a[i - 1][j] * b for j, b in enumerate(beta))
    out = list(beta)
    out[i - 1] -= p
    return tuple(out)


def is_reduced(A: CartanMatrix, w: WeylWord) -> bool:
    """Positive-root criterion for reducedness.

    With ``u = s_{i_{k-1}} ... s_{i_1}``, left-multiplying by ``s_{i_k}``
    raises the length iff ``u^{-1}(alpha_{i_k}) = s_{i_1} ... s_{i_{k-1}}
    (alpha_{i_k})`` is positive. Real roots are either all >= 0 or all <= 0
    in simple-root coordinates, so sign of any nonzero entry decides.
    """
    w.check(A)
    letters = w.letters
    for k, ik in enumerate(letters):
        beta = [0] * A.n
        beta[ik - 1] = 1
        beta = tuple(beta)
        for j in reversed(letters[:k]):
            beta = root_reflect(A, j, beta)
        if any(b < 0 for b in beta):
            return False
    return True


def reduced_words(A: CartanMatrix, max_length: int) -> list[WeylWord]:
    """Every reduced word of length ``<= max_length``, shortest first."""
    out = [WeylWord(())]
    layer = [()]
    for _ in range(max_length):
        nxt = []
        for word in layer:
            for i in range(1, A.n + 1):
                if word and word[-1] == i:
                    continue
                cand = WeylWord(word + (i,))
                if is_reduced(A, cand):
                    nxt.append(cand.letters)
        out.extend(WeylWord(wd) for wd in nxt)
        layer = nxt
    return out
