from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import make_ctx
from oracles import A1A1, A2, A3, B2, G2
from polycrystal.crystal import demazure_crystal, enumerate_image
from polycrystal.polyhedral import (
    LinearForm, S_hat_k, S_k, beta_k, beta_k_pm, box_from_points, check_ample, check_positivity,
    enumerate_truncated, format_form, generate_Xi, generate_Xi_lambda, lambda_form, membership,
)
from polycrystal.rootdata import CartanMatrix, Weight, WeylWord, reduced_words
from polycrystal.sequence import IotaSequence

ALT = IotaSequence.periodic(1, 2)
A3_IOTA = IotaSequence((1, 2, 3, 2, 1, 2), (3, 2, 1))


def form(const=0, **coeffs):
    return LinearForm.from_map({int(k[1:]): v for k, v in coeffs.items()}, const)


def cm(rows):
    return CartanMatrix.from_rows(rows)


def test_linear_form_canonical():
    a = LinearForm(Fraction(1), ((2, 1), (1, 3), (2, -1)))
    assert a == form(1, x1=3)
    assert a.top == 1
    assert form(x3=2)((1, 1, 5)) == 10
    assert form(x5=2)((1,)) == 0


def test_format_form():
    assert format_form(form(2, x1=-1, x3=Fraction(1, 2))) == "2 + -1*x_1 + 1/2*x_3 >= 0"
    assert format_form(form(x2=1)) == "1*x_2 >= 0"
    assert format_form(LinearForm()) == "0 >= 0"


def test_beta_k_examples():
    assert beta_k(ALT, cm([[2, -2], [-2, 2]]), 0) == LinearForm()
    assert beta_k(ALT, cm([[2, -2], [-2, 2]]), 1) == form(x1=1, x2=-2, x3=1)
    assert beta_k(ALT, cm(A1A1), 1) == form(x1=1, x3=1)


def test_beta_pm_examples():
    A = cm(A3)
    lam = Weight((5, 7, 11))
    assert beta_k_pm(A3_IOTA, A, lam, 1, "-") == form(-5, x1=1)
    assert beta_k_pm(A3_IOTA, A, lam, 4, "-") == form(x2=1, x3=-1, x4=1)
    for k in range(1, 10):
        assert beta_k_pm(A3_IOTA, A, lam, k, "+") == beta_k(A3_IOTA, A, k)


def test_lambda_form_examples():
    A = cm(A2)
    lam = Weight((3, 4))
    assert lambda_form(ALT, A, lam, 1) == form(3, x1=-1)
    assert lambda_form(ALT, A, lam, 2) == form(4, x1=1, x2=-1)
    for i in (1, 2):
        assert lambda_form(ALT, A, lam, i) == -beta_k_pm(ALT, A, lam, ALT.first(i), "-")


def test_S_examples():
    A = cm(A2)
    for k in range(1, 6):
        assert S_k(ALT, A, k, LinearForm.var(k)) == LinearForm.var(k) - beta_k(ALT, A, k)
    phi = form(x3=4)
    assert S_k(ALT, A, 1, phi) == phi
    assert S_hat_k(ALT, A, Weight((1, 1)), 1, LinearForm.var(1)) == form(x2=1, x3=-1)


def test_S_vs_S_hat_at_first_occurrence():
    # phi_k < 0 with k^(-) = 0: S_k acts through beta_0 = 0, S_hat_k does not
    A = cm(A2)
    lam = Weight((2, 0))
    phi = form(x1=-1)
    assert S_k(ALT, A, 1, phi) == phi
    assert S_hat_k(ALT, A, lam, 1, phi) == form(-2)


forms = st.builds(
    lambda const, coeffs: LinearForm.from_map(dict(enumerate(coeffs, start=1)), const),
    st.integers(-3, 3), st.lists(st.integers(-3, 3), min_size=1, max_size=6))


@given(forms, st.integers(1, 6), st.sampled_from([A2, B2, G2, A1A1]))
def test_S_branch_rule(phi, k, rows):
    A = cm(rows)
    out = S_k(ALT, A, k, phi)
    if phi.coeff(k) < 0 and ALT.k_minus(k) == 0:
        assert out == phi
    else:
        assert out.coeff(k) == 0
        assert S_k(ALT, A, k, out) == out
    hat = S_hat_k(ALT, A, Weight((1, 2)), k, phi)
    assert hat.coeff(k) == 0


def test_generate_Xi_small_types():
    xi = generate_Xi(ALT, cm(A1A1), 6)
    assert xi.closed
    for j in range(1, 7):
        assert LinearForm.var(j) in xi.forms
    xi = generate_Xi(ALT, cm(A2), 6)
    assert xi.closed and LinearForm.var(1) in xi.forms


@pytest.mark.parametrize("rows", [A1A1, A2, B2, G2, [[2, -3], [-1, 2]]])
def test_generate_Xi_lambda_closes_in_finite_rank2(rows):
    xi = generate_Xi_lambda(ALT, cm(rows), Weight((2, 1)), 9)
    assert xi.closed


def test_generate_Xi_count_cutoff():
    xi = generate_Xi_lambda(ALT, cm([[2, -2], [-2, 2]]), Weight((1, 0)), 6, count_cutoff=5)
    assert not xi.closed
    assert xi.status() == "closed: false (cutoff 5)"


def test_positivity():
    assert check_positivity([LinearForm.var(j) for j in range(1, 5)], ALT)
    verdict = check_positivity(generate_Xi(ALT, cm(A2), 6), ALT)
    assert verdict.value and verdict.certain
    assert not check_positivity([form(x2=-1, x3=1)], ALT)


def test_ample():
    assert check_ample(ALT, cm(A2), Weight((1, 1)), 6)
    assert check_ample(ALT, cm(A2), Weight((0, 0)), 6)
    assert all(phi.const == 0 for phi in generate_Xi_lambda(ALT, cm(A2), Weight((0, 0)), 6))


def test_a3_configuration_is_not_ample():
    A = cm(A3)
    verdict = check_ample(A3_IOTA, A, Weight((0, 1, 0)), 12, 20_000)
    assert verdict.certain and not verdict.value
    assert check_ample(A3_IOTA, A, Weight((1, 0, 0)), 12, 20_000)


def test_membership_and_enumeration_examples():
    A = cm(A2)
    lam = Weight((1, 0))
    xi = generate_Xi_lambda(ALT, A, lam, 6)
    assert membership(xi, ())
    assert not membership([form(-1)], ())
    pts = enumerate_truncated(xi, 2, [1, 1])
    ctx = make_ctx(A2, (1, 0))
    assert pts == demazure_crystal(ctx, WeylWord((1, 2)))
    assert len(pts) == 3


def test_enumeration_needs_box():
    with pytest.raises(ValueError):
        enumerate_truncated([], 3, [1, 1])


AMPLE_CASES = [(A2, (1, 1)), (A2, (2, 1)), (B2, (1, 1)), (B2, (2, 0)), (G2, (1, 1)), (G2, (0, 2))]


@pytest.mark.parametrize("rows, m", AMPLE_CASES)
def test_demazure_points_satisfy_all_forms(rows, m):
    A = cm(rows)
    lam = Weight(m)
    xi = generate_Xi_lambda(ALT, A, lam, 9)
    assert xi.closed and check_ample(ALT, A, lam, 9)
    ctx = make_ctx(rows, m)
    for w in reduced_words(A, 6):
        if not ALT.extends(w):
            continue
        pts = demazure_crystal(ctx, w)
        assert all(membership(xi, p) for p in pts)
        L = len(w)
        box = box_from_points(enumerate_image(ctx).points, L)
        assert enumerate_truncated(xi, L, box) == pts
