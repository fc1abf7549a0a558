from fractions import Fraction

import pytest

from heckemac import E, ParamScalar, demazure_limit, generic_context, limit_t_infinity, normalizer
from heckemac.checks import at_one, grid
from heckemac.macdonald import LimitError

from conftest import datum


@pytest.fixture
def a1():
    return generic_context(*datum("A", 1, "P"))


def t(ctx, name, p):
    return ParamScalar.mono(ctx.ns, {name: p})


def test_a1_minus_omega_by_hand(a1):
    # T e^w = t e^{-w} + (t - 1) e^w, then normalize the e^{-w} coefficient
    one = ParamScalar.const(a1.ns)
    want = a1.e((-1,)) + a1.e((1,), one - t(a1, "t1", -1))
    assert E(a1, (-1,)) == want


def test_a1_normalizers(a1):
    assert normalizer(a1, (-1,)) == t(a1, "t1", Fraction(1, 2))
    assert normalizer(a1, (-2,)) == t(a1, "t1", 1)
    assert normalizer(a1, (2,)) == ParamScalar.const(a1.ns)


def test_zero_and_minuscule(ctx):
    assert E(ctx, (0,) * ctx.n) == ctx.e((0,) * ctx.n)
    for nu in ctx.W.minuscule_set():
        assert E(ctx, nu) == ctx.e(nu)


def test_monic(ctx):
    one = ParamScalar.const(ctx.ns)
    for lam in grid(ctx, 2):
        assert E(ctx, lam).coefficient(lam) == one


def test_support_below_orbit(ctx):
    # every weight of E_lam lies in the convex hull of W lam
    for lam in grid(ctx, 2):
        dom, _ = ctx.R.to_dominant(lam)
        for mu in E(ctx, lam).support():
            top, _ = ctx.R.to_dominant(mu)
            diff = [a - b for a, b in zip(dom, top)]
            coeffs = [sum(Fraction(d) * ctx.R.inv_cartan[i][j] for i, d in enumerate(diff))
                      for j in range(ctx.n)]
            assert all(c >= 0 for c in coeffs), (lam, mu)


def test_at_one_is_monomial(ctx):
    for lam in grid(ctx, 2):
        assert at_one(E(ctx, lam)) == {tuple(lam): 1}


def test_limit_matches_demazure(ctx):
    for lam in grid(ctx, 2):
        assert limit_t_infinity(E(ctx, lam), lam) == demazure_limit(ctx.R, lam)


def test_demazure_a1(a1):
    assert demazure_limit(a1.R, (-2,)) == {(-2,): 1, (0,): 1, (2,): 1}
    assert demazure_limit(a1.R, (2,)) == {(2,): 1}


def test_limit_rejects_growth(a1):
    f = a1.e((0,)) + a1.e((2,), t(a1, "t1", 1))
    with pytest.raises(LimitError):
        limit_t_infinity(f, (0,))


def test_bc_free_of_t02():
    ctx = generic_context(*datum("BC", 2, "Q"))
    for lam in grid(ctx, 2):
        for _, c in E(ctx, lam).items():
            assert not c.mentions("t02")


def test_cached_value_is_stable(ctx):
    lam = grid(ctx, 2)[-1]
    assert E(ctx, lam) == E(generic_context(ctx.R, ctx.L), lam)
