import pytest
from hypothesis import given, settings, strategies as st

from conftest import make_ctx
from oracles import A1A1, A2, A3, B2, G2, sigma_direct, weyl_dimension
from polycrystal.crystal import (
    CrystalContext, StringStatus, demazure_b_infinity, demazure_crystal,
    e_tilde, enumerate_image, epsilon_i, f_max, f_tilde, i_string_status, phi_i, sigma0_i, sigma_k,
    sigma_max_and_M, sort_points, wt, zvec,
)
from polycrystal.rootdata import CartanMatrix, Weight, WeightOffset, WeylWord
from polycrystal.sequence import IotaSequence

C22 = [[2, -2], [-2, 2]]


def test_zvec_normalises():
    assert zvec([1, 0, 2, 0, 0]) == (1, 0, 2)
    assert zvec({3: 1, 1: 2}) == (2, 0, 1)
    assert zvec({}) == ()


def test_sigma_k_examples():
    ctx = make_ctx(A2, (1, 0))
    assert sigma_k(ctx, (), 4) == 0
    assert sigma_k(ctx, (1,), 2) == 0
    assert sigma_k(ctx, zvec({1: 2, 3: 1}), 1) == 4


def test_sigma0_examples():
    ctx = make_ctx(A2, (1, 0))
    assert sigma0_i(ctx, (), 1) == -1
    assert sigma0_i(ctx, (1,), 1) == 1
    assert sigma0_i(ctx, (1,), 2) == -1
    with pytest.raises(ValueError):
        sigma0_i(CrystalContext(CartanMatrix.from_rows(A2), IotaSequence.periodic(1, 2)), (), 1)


def test_sigma_max_examples():
    ctx = make_ctx(A2, (1, 0))
    assert sigma_max_and_M(ctx, (), 2) == (0, 2, None)
    assert sigma_max_and_M(ctx, (1,), 1) == (1, 1, 1)
    ctx = make_ctx(C22, (0, 0))
    sm = sigma_max_and_M(ctx, (1, 1), 1)
    assert sm.value == 0 and sm.first == 3 and sm.last is None


def test_f_examples():
    ctx = make_ctx(A1A1, (2, 0))
    assert f_tilde(ctx, 1, ()) == (1,)
    assert f_tilde(ctx, 1, (1,)) == (2,)
    assert f_tilde(ctx, 1, (2,)) is None
    assert f_tilde(make_ctx(A2, (0, 3)), 2, ()) == (0, 1)


def test_e_examples():
    ctx = make_ctx(A1A1, (2, 0))
    assert e_tilde(ctx, 1, ()) is None
    assert e_tilde(ctx, 2, ()) is None
    assert e_tilde(ctx, 1, (1,)) == ()


def test_wt_eps_phi_examples():
    ctx = make_ctx(A1A1, (2, 0))
    assert wt(ctx, ()) == WeightOffset.of(Weight((2, 0)))
    assert epsilon_i(ctx, (1,), 1) == 1
    assert phi_i(ctx, (1,), 1) == 1
    assert epsilon_i(make_ctx(A2, (2, 1)), (), 2) == 0


def test_f_max_examples():
    assert f_max(make_ctx(A1A1, (2, 0)), 1, ()) == (2,)
    assert f_max(make_ctx(A2, (1, 0)), 2, ()) == ()
    assert f_max(make_ctx(A2, (1, 0)), 1, (1,)) == (1,)


def test_b_infinity_mode_never_vanishes():
    ctx = CrystalContext(CartanMatrix.from_rows(A2), IotaSequence.periodic(1, 2))
    x = ()
    for i in [1, 2, 1, 1, 2, 2, 1]:
        x = f_tilde(ctx, i, x)
        assert x is not None
        assert e_tilde(ctx, i, x) is not None


@pytest.mark.parametrize("rows, m", [
    (A2, (1, 0)), (A2, (1, 1)), (A2, (2, 1)), (A1A1, (2, 3)),
    (B2, (1, 0)), (B2, (1, 1)), (G2, (1, 0)), (G2, (1, 1)), (G2, (0, 2)),
])
def test_enumerate_image_dimension(rows, m):
    res = enumerate_image(make_ctx(rows, m))
    assert res.complete
    assert len(res) == weyl_dimension(rows, m)


def test_enumerate_image_a3():
    res = enumerate_image(make_ctx(A3, (1, 1, 1), (1, 2, 3, 2, 1, 2), (3, 2, 1)))
    assert res.complete and len(res) == weyl_dimension(A3, (1, 1, 1))


def test_enumerate_zero_weight():
    res = enumerate_image(make_ctx(G2, (0, 0)))
    assert res.points == [()] and res.complete


def test_enumerate_budget_flags_incomplete():
    res = enumerate_image(make_ctx(C22, (1, 0)), max_elements=50)
    assert not res.complete and len(res) == 50
    res = enumerate_image(make_ctx(C22, (1, 0)), max_depth=4)
    assert not res.complete and max(sum(p) for p in res.points) == 4


def test_enumerate_rejects_non_dominant():
    with pytest.raises(ValueError):
        enumerate_image(make_ctx(A2, (1, -1)))


def test_demazure_examples():
    ctx = make_ctx(A2, (1, 0))
    assert demazure_crystal(ctx, WeylWord(())) == [()]
    assert demazure_crystal(ctx, WeylWord((1,))) == [(), (1,)]
    assert demazure_crystal(ctx, WeylWord((1, 2))) == enumerate_image(ctx).points


def test_demazure_single_reflection_matches_formula():
    # B_{s_i} is the segment 0 <= x_1 <= <h_i, lambda>
    for m1 in range(5):
        ctx = make_ctx(B2, (m1, 2))
        assert demazure_crystal(ctx, WeylWord((1,))) == [zvec([k]) for k in range(m1 + 1)]


def test_demazure_rejects_bad_words():
    ctx = make_ctx(A2, (1, 1))
    with pytest.raises(ValueError, match="not reduced"):
        demazure_crystal(ctx, WeylWord((1, 2, 1, 2)))
    with pytest.raises(ValueError, match="does not start"):
        demazure_crystal(ctx, WeylWord((2, 1)))


def test_demazure_independent_of_reduced_word():
    A = CartanMatrix.from_rows(A2)
    lam = Weight((2, 1))
    results = []
    for letters in [(1, 2, 1), (2, 1, 2)]:
        w = WeylWord(letters)
        ctx = CrystalContext(A, IotaSequence.extending(w, (1, 2)), lam)
        results.append(sorted(ctx.wt(b).c for b in demazure_crystal(ctx, w)))
    assert results[0] == results[1]


def test_b_infinity_demazure():
    A = CartanMatrix.from_rows(A2)
    ctx = CrystalContext(A, IotaSequence.periodic(1, 2))
    assert demazure_b_infinity(ctx, WeylWord(()), 5).points == [()]
    res = demazure_b_infinity(ctx, WeylWord((1,)), 3)
    assert res.points == [(), (1,), (2,), (3,)]
    assert not res.contains((0, 1))
    w0 = demazure_b_infinity(ctx, WeylWord((1, 2, 1)), 3)
    assert not w0.contains(zvec({1: 1, 7: 1}))
    assert w0.contains((1, 1)) and w0.contains((0, 1))
    # x_3 > x_2 is outside the image: no e_i lowers it to zero
    assert not w0.contains((0, 0, 1))
    assert set(w0.points) == {p for p in w0.points if w0.contains(p)}


def test_b_infinity_truncation_contains_b_lambda_shape():
    # every B_w(lambda) point is in B_w(infinity) once lambda is large
    A = CartanMatrix.from_rows(G2)
    w = WeylWord((1, 2, 1, 2))
    io = IotaSequence.periodic(1, 2)
    inf = demazure_b_infinity(CrystalContext(A, io), w, 4)
    for p in inf.points:
        assert inf.contains(p)
    big = demazure_crystal(CrystalContext(A, io, Weight((4, 4))), w)
    assert {p for p in big if sum(p) <= 4} == set(inf.points)


def test_string_status_examples():
    ctx = make_ctx(A2, (1, 0))
    S = set(demazure_crystal(ctx, WeylWord((1,))))
    assert i_string_status(ctx, S, 1, ()) == StringStatus.FULL
    # <h_2, Lambda_1> = 0: the 2-string through 0 is a single point
    assert i_string_status(ctx, S, 2, ()) == StringStatus.FULL
    assert i_string_status(ctx, S, 2, (1,)) == StringStatus.HIGHEST_ONLY
    assert i_string_status(ctx, S, 2, (1, 1)) == StringStatus.HIGHEST_ONLY
    full = enumerate_image(ctx).points
    assert i_string_status(ctx, {()}, 2, full[-1]) == StringStatus.EMPTY


def test_sort_points_is_padded_lexicographic():
    assert sort_points([(1, -1), (1,), (0, 5)]) == [(0, 5), (1, -1), (1,)]


# -- properties over enumerated crystals ---------------------------------------------

CONFIGS = [
    (A2, (2, 1), (), (1, 2)),
    (B2, (1, 2), (), (1, 2)),
    (G2, (1, 1), (), (2, 1)),
    (A3, (1, 0, 2), (1, 2, 3, 2, 1, 2), (3, 2, 1)),
]
CRYSTALS = [(make_ctx(r, m, p, c), enumerate_image(make_ctx(r, m, p, c)).points) for r, m, p, c in CONFIGS]


@st.composite
def crystal_points(draw):
    ctx, pts = draw(st.sampled_from(CRYSTALS))
    return ctx, draw(st.sampled_from(pts)), draw(st.integers(1, ctx.A.n))


@settings(max_examples=300)
@given(crystal_points())
def test_crystal_axioms(data):
    ctx, x, i = data
    assert all(v >= 0 for v in x)
    y = ctx.f(i, x)
    if y is not None:
        assert ctx.e(i, y) == x
        assert ctx.wt(y) == ctx.wt(x).minus_alpha(i)
        assert ctx.epsilon(y, i) == ctx.epsilon(x, i) + 1
        assert ctx.phi(y, i) == ctx.phi(x, i) - 1
    z = ctx.e(i, x)
    if z is not None:
        assert ctx.f(i, z) == x
    assert ctx.phi(x, i) >= 0
    assert ctx.phi(x, i) - ctx.epsilon(x, i) == -ctx.sigma0(x, i)


@settings(max_examples=200)
@given(crystal_points(), st.integers(1, 8))
def test_sigma_matches_direct_formula(data, k):
    ctx, x, _ = data
    dense = list(x) + [0] * 8
    seq = ctx.iota.head(len(dense))
    assert ctx.sigma_k(zvec(dense), k) == sigma_direct(ctx.A.a, seq, dense, k)
    assert ctx.sigmas(x) == [sigma_direct(ctx.A.a, seq, dense, j) for j in range(1, len(x) + 1)]
