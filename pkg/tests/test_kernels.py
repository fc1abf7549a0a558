import random
from fractions import Fraction

import pytest

from heckemac import IMPLEMENTATION, _pykernels

speedups = pytest.importorskip("heckemac._speedups")


def scalar(rng, nvars=3, size=4):
    out = {}
    for _ in range(size):
        e = tuple(rng.randint(-3, 3) for _ in range(nvars))
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        if c:
            out[e] = c
    return out


def element(rng, rank=2, size=12):
    out = {}
    for _ in range(size):
        c = scalar(rng)
        if c:
            out[tuple(rng.randint(-4, 4) for _ in range(rank))] = c
    return out


def test_implementation_flag():
    assert IMPLEMENTATION in ("python", "cython")


@pytest.mark.parametrize("seed", range(20))
def test_parity_scalar_ops(seed):
    rng = random.Random(seed)
    a, b = scalar(rng), scalar(rng)
    for name in ("p_add", "p_sub", "p_mul"):
        assert getattr(speedups, name)(a, b) == getattr(_pykernels, name)(a, b)


@pytest.mark.parametrize("seed", range(20))
def test_parity_group_ops(seed):
    rng = random.Random(seed)
    f, g, s = element(rng), element(rng), scalar(rng)
    assert speedups.g_mul(f, g) == _pykernels.g_mul(f, g)
    assert speedups.g_scale(f, s) == _pykernels.g_scale(f, s)
    assert speedups.g_shift(f, (1, -2)) == _pykernels.g_shift(f, (1, -2))
    assert speedups.g_iadd(dict(f), g, -1) == _pykernels.g_iadd(dict(f), g, -1)


@pytest.mark.parametrize("seed", range(20))
def test_parity_demazure_lusztig(seed):
    rng = random.Random(seed)
    f = element(rng)
    t = {(0, 2, 0): 1}
    tm1 = {(0, 2, 0): 1, (0, 0, 0): -1}
    cc = {(1, 0, 1): 1, (-1, 0, 1): -1}
    for i, alpha in [(0, (2, -1)), (1, (-1, 2))]:
        assert speedups.dl_apply(f, i, alpha, t, tm1) == _pykernels.dl_apply(f, i, alpha, t, tm1)
    even = {w: c for w, c in f.items() if w[0] % 2 == 0}
    assert (speedups.dl_apply_double(even, 0, (2, -1), t, tm1, cc)
            == _pykernels.dl_apply_double(even, 0, (2, -1), t, tm1, cc))


def test_odd_pairing_rejected_by_both():
    f = {(1, 0): {(0, 0, 0): 1}}
    for mod in (speedups, _pykernels):
        with pytest.raises(ArithmeticError):
            mod.dl_apply_double(f, 0, (2, -1), {(0, 0, 0): 1}, {(0, 0, 0): 1}, {(0, 0, 0): 1})
