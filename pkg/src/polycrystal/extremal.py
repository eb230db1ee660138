"""Images of extremal vectors ``u_{w lambda}`` inside the sequence model."""
from __future__ import annotations

from .crystal import CrystalContext, CrystalError, ZVector, zvec
from .polyhedral import beta_k_pm
from .rootdata import CartanMatrix, Weight, WeightOffset, WeylWord, is_reduced, reflect
from .sequence import IotaSequence


def _check(A: CartanMatrix, iota: IotaSequence, lam: Weight, w: WeylWord) -> None:
    w.check(A)
    if not is_reduced(A, w):
        raise ValueError(f"word {w.letters} is not reduced")
    if not iota.extends(w):
        raise ValueError(f"iota {iota.head(len(w))} does not start with word {w.letters}")
    if not lam.dominant:
        raise ValueError(f"weight {lam.m} is not dominant")


def extremal_weight(A: CartanMatrix, lam: Weight, w: WeylWord) -> WeightOffset:
    mu = WeightOffset.of(lam)
    for i in w.letters:
        mu = reflect(A, i, mu)
    return mu


def solve_extremal(A: CartanMatrix, iota: IotaSequence, lam: Weight, w: WeylWord) -> ZVector:
    """Solve ``beta^(-)_k(x) = 0`` for ``k = 1..L`` with ``x_k = 0`` beyond ``L``.

    Each ``beta^(-)_k`` is ``x_k`` plus earlier variables plus a constant, so
    forward substitution gives the unique (integral) solution.
    """
    _check(A, iota, lam, w)
    L = len(w)
    x = [0] * L
    for k in range(1, L + 1):
        form = beta_k_pm(iota, A, lam, k, "-")
        assert form.coeff(k) == 1 and form.top == k
        rest = form(x) - x[k - 1]  # x_k is still 0 here
        assert rest.denominator == 1
        x[k - 1] = -int(rest)
    out = zvec(x)
    if any(v < 0 for v in out):
        raise CrystalError(f"negative entry in extremal solution {out}")
    ctx = CrystalContext(A, iota, lam)
    if ctx.wt(out) != extremal_weight(A, lam, w):
        raise CrystalError(f"weight of {out} differs from w lambda")
    return out


def extremal_oracle(A: CartanMatrix, iota: IotaSequence, lam: Weight, w: WeylWord) -> ZVector:
    """The same vector via ``x <- f_max(i_k, x)`` along the word."""
    _check(A, iota, lam, w)
    ctx = CrystalContext(A, iota, lam)
    x: ZVector = ()
    for i in w.letters:
        x = ctx.f_max(i, x)
    return x
