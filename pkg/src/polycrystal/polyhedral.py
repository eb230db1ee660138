"""Linear forms over ``x_1, x_2, ...`` and the inequality systems cut out by
the piecewise-linear operators ``S_k`` / ``S_hat_k``.

Everything is exact: coefficients are :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .crystal import ZVector, sort_points
from .rootdata import CartanMatrix, Weight
from .sequence import IotaSequence


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True, order=False)
class LinearForm:
    """``const + sum_k coeffs[k] * x_k``, stored canonically."""

    const: Fraction = Fraction(0)
    terms: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "const", _frac(self.const))
        merged: dict[int, Fraction] = {}
        for k, q in self.terms:
            if k < 1:
                raise ValueError(f"variable index must be >= 1, got {k}")
            merged[k] = merged.get(k, Fraction(0)) + _frac(q)
        object.__setattr__(self, "terms", tuple(sorted((k, q) for k, q in merged.items() if q != 0)))

    @classmethod
    def from_map(cls, coeffs: Mapping[int, object], const=0) -> "LinearForm":
        return cls(_frac(const), tuple(coeffs.items()))

    @classmethod
    def var(cls, k: int, scale=1) -> "LinearForm":
        return cls(Fraction(0), ((k, _frac(scale)),))

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def coeff(self, k: int) -> Fraction:
        for j, q in self.terms:
            if j == k:
                return q
        return Fraction(0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.terms)

    @property
    def top(self) -> int:
        """Largest variable index in the support (0 for a constant)."""
        return self.terms[-1][0] if self.terms else 0

    @property
    def is_zero(self) -> bool:
        return self.const == 0 and not self.terms

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.const + other.const, self.terms + other.terms)

    def __neg__(self) -> "LinearForm":
        return self.scaled(-1)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + other.scaled(-1)

    def scaled(self, s) -> "LinearForm":
        s = _frac(s)
        return LinearForm(self.const * s, tuple((k, q * s) for k, q in self.terms))

    def __call__(self, x: Sequence[int]) -> Fraction:
        total = self.const
        n = len(x)
        for k, q in self.terms:
            if k <= n:
                total += q * x[k - 1]
        return total

    def sort_key(self):
        return (self.const, self.terms)

    def __str__(self) -> str:
        return format_form(self)


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_form(phi: LinearForm) -> str:
    """``c + q_1*x_1 + ... >= 0``; zero terms dropped, rationals as ``p/q``."""
    parts = []
    if phi.const != 0 or not phi.terms:
        parts.append(_fmt_q(phi.const))
    for k, q in phi.terms:
        parts.append(f"{_fmt_q(q)}*x_{k}")
    return " + ".join(parts) + " >= 0"


def sort_forms(forms: Iterable[LinearForm]) -> list[LinearForm]:
    return sorted(forms, key=LinearForm.sort_key)


# -- the basic forms ------------------------------------------------------------

def _pair(A: CartanMatrix, iota: IotaSequence, k: int, j: int) -> int:
    return A(iota.at(k), iota.at(j))


def beta_k(iota: IotaSequence, A: CartanMatrix, k: int) -> LinearForm:
    """``x_k + sum_{k<j<k+} <h_{i_k}, alpha_{i_j}> x_j + x_{k+}``; zero for ``k = 0``."""
    if k == 0:
        return LinearForm()
    kp = iota.k_plus(k)
    terms = [(k, 1), (kp, 1)]
    terms += [(j, _pair(A, iota, k, j)) for j in range(k + 1, kp)]
    return LinearForm(Fraction(0), tuple(terms))


def beta_k_pm(iota: IotaSequence, A: CartanMatrix, lam: Optional[Weight], k: int, sign: str) -> LinearForm:
    """``beta_k^(+)`` (equal to ``beta_k``) or ``beta_k^(-)``.

    For ``k^(-) > 0`` the minus form is ``beta_{k^(-)}``; otherwise it starts
    from the constant ``-<h_{i_k}, lambda>`` and sums over every ``j < k``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if sign == "+":
        return beta_k(iota, A, k)
    if sign != "-":
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    km = iota.k_minus(k)
    if km > 0:
        return beta_k(iota, A, km)
    if lam is None:
        raise ValueError("beta^(-) at a first occurrence needs a weight")
    ik = iota.at(k)
    terms = [(k, 1)] + [(j, A(ik, iota.at(j))) for j in range(1, k)]
    return LinearForm(Fraction(-lam[ik]), tuple(terms))


def lambda_form(iota: IotaSequence, A: CartanMatrix, lam: Weight, i: int) -> LinearForm:
    """``lambda^(i) = -beta^(-)_{iota^(i)}``."""
    return -beta_k_pm(iota, A, lam, iota.first(i), "-")


def S_k(iota: IotaSequence, A: CartanMatrix, k: int, phi: LinearForm) -> LinearForm:
    q = phi.coeff(k)
    if q == 0:
        return phi
    if q > 0:
        return phi - beta_k(iota, A, k).scaled(q)
    return phi - beta_k(iota, A, iota.k_minus(k)).scaled(q)


def S_hat_k(iota: IotaSequence, A: CartanMatrix, lam: Weight, k: int, phi: LinearForm) -> LinearForm:
    q = phi.coeff(k)
    if q == 0:
        return phi
    sign = "+" if q > 0 else "-"
    return phi - beta_k_pm(iota, A, lam, k, sign).scaled(q)


# -- generation of Xi -------------------------------------------------------------

@dataclass
class FormSet:
    """Result of a cutoff closure.

    ``closed`` means the work list emptied before ``count_cutoff`` was hit.
    ``overflow`` counts images discarded because their support left the window.
    """

    forms: list[LinearForm]
    closed: bool
    var_cutoff: int
    count_cutoff: int
    overflow: int = 0

    def __iter__(self):
        return iter(self.forms)

    def __len__(self):
        return len(self.forms)

    def status(self) -> str:
        if self.closed:
            return f"closed: true (window x_1..x_{self.var_cutoff}, {len(self.forms)} forms)"
        return f"closed: false (cutoff {self.count_cutoff})"


def generate_Xi(iota: IotaSequence, A: CartanMatrix, var_cutoff: int, count_cutoff: int = 10_000,
                lam: Optional[Weight] = None) -> FormSet:
    """Closure of the seed forms under ``S_k`` (or ``S_hat_k`` when ``lam`` is given).

    Seeds are ``x_j`` for ``j <= var_cutoff``, plus ``lambda^(i)`` for every
    ``i`` in the weighted case. Only operators ``k <= var_cutoff`` are
    applied, and only forms supported inside ``x_1..x_var_cutoff`` are kept.
    """
    if var_cutoff < 1 or count_cutoff < 1:
        raise ValueError("cutoffs must be positive")
    seeds = [LinearForm.var(j) for j in range(1, var_cutoff + 1)]
    if lam is not None:
        seeds += [lambda_form(iota, A, lam, i) for i in range(1, A.n + 1)]
    seen: set[LinearForm] = set()
    work: list[LinearForm] = []
    overflow = 0
    for s in seeds:
        if s.top > var_cutoff:
            overflow += 1
        elif s not in seen:
            seen.add(s)
            work.append(s)
    while work:
        phi = work.pop()
        for k in phi.support:
            if k > var_cutoff:
                continue
            psi = S_k(iota, A, k, phi) if lam is None else S_hat_k(iota, A, lam, k, phi)
            if psi in seen:
                continue
            if psi.top > var_cutoff:
                overflow += 1
                continue
            if len(seen) >= count_cutoff:
                return FormSet(sort_forms(seen), False, var_cutoff, count_cutoff, overflow)
            seen.add(psi)
            work.append(psi)
    return FormSet(sort_forms(seen), True, var_cutoff, count_cutoff, overflow)


def generate_Xi_lambda(iota: IotaSequence, A: CartanMatrix, lam: Weight, var_cutoff: int,
                       count_cutoff: int = 10_000) -> FormSet:
    return generate_Xi(iota, A, var_cutoff, count_cutoff, lam=lam)


@dataclass
class Verdict:
    value: bool
    certain: bool  # False when the form set was cut off

    def __bool__(self):
        return self.value


def check_positivity(xi: FormSet | Iterable[LinearForm], iota: IotaSequence) -> Verdict:
    """Every form has a nonnegative coefficient at each first occurrence ``k^(-) = 0``."""
    forms = list(xi)
    ok = all(q >= 0 for phi in forms for k, q in phi.terms if iota.k_minus(k) == 0)
    certain = xi.closed if isinstance(xi, FormSet) else True
    return Verdict(ok, certain)


def check_ample(iota: IotaSequence, A: CartanMatrix, lam: Weight, var_cutoff: int,
                count_cutoff: int = 10_000) -> Verdict:
    """The zero vector satisfies every generated form of ``Xi_iota[lambda]``."""
    if not lam.dominant:
        raise ValueError("ampleness is defined for dominant weights")
    xi = generate_Xi_lambda(iota, A, lam, var_cutoff, count_cutoff)
    return Verdict(all(phi.const >= 0 for phi in xi), xi.closed)


# -- lattice points -------------------------------------------------------------------

def membership(xi: Iterable[LinearForm], x: ZVector) -> bool:
    return all(phi(x) >= 0 for phi in xi)


def enumerate_truncated(xi: Iterable[LinearForm], L: int, box: Sequence[int]) -> list[ZVector]:
    """Integer points of ``{phi >= 0}`` inside ``{0..box[k-1]}`` for ``k <= L``, zero beyond.

    Coordinates are fixed from ``x_L`` down to ``x_1``. A form is checked as
    soon as every variable it involves at index ``<= L`` has been fixed.
    """
    if L < 0:
        raise ValueError("L must be >= 0")
    if len(box) < L:
        raise ValueError(f"need {L} box bounds, got {len(box)}")
    forms = list(xi)
    # checks[d]: forms whose lowest live variable is x_d (d=0: constant on the window)
    checks: list[list[LinearForm]] = [[] for _ in range(L + 1)]
    for phi in forms:
        live = [k for k in phi.support if k <= L]
        checks[min(live) if live else 0].append(phi)
    if any(phi(()) < 0 for phi in checks[0]):
        return []
    out = []
    x = [0] * L

    def walk(d: int) -> None:
        if d == 0:
            out.append(tuple(x))
            return
        for v in range(box[d - 1] + 1):
            x[d - 1] = v
            if all(phi(x) >= 0 for phi in checks[d]):
                walk(d - 1)
        x[d - 1] = 0

    walk(L)
    return sort_points(_trim(p) for p in out)


def _trim(p: tuple[int, ...]) -> ZVector:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def box_from_points(points: Iterable[ZVector], L: int) -> list[int]:
    """Per-coordinate maxima plus one over the first ``L`` coordinates."""
    box = [0] * L
    for p in points:
        for k in range(min(L, len(p))):
            box[k] = max(box[k], p[k])
    return [b + 1 for b in box]
