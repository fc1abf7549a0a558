from fractions import Fraction

import pytest
import sympy

from heckemac import (
    SatakeData, UnramifiedCharacter, delta_P, generic_context, matrix_coefficient, satake_E,
    split_data, vol_ItlamK,
)
from heckemac.checks import delta_homomorphism, grid, poincare
from heckemac.satake import (
    CharacterError, SatakeDataError, preset, tau_namespace, route_residual, validate,
)
from heckemac.coeffs import ParamScalar

from conftest import DATUMS, datum, ids


def tau(R, *powers):
    ns = tau_namespace(R)
    out = ParamScalar(ns)
    for k, c in powers:
        out = out + ParamScalar.mono(ns, {"tau": k}, c)
    return out


@pytest.mark.parametrize("d", DATUMS, ids=ids)
def test_two_routes_agree_split(d):
    R, L = datum(*d)
    data = split_data(R)
    for lam in grid(generic_context(R, L), 2):
        assert not route_residual(R, L, data, lam), lam


@pytest.mark.parametrize("name", ["A1-unequal", "BC1-double", "BC2-double"])
def test_two_routes_agree_presets(name):
    R, L, data = preset(name)
    for lam in grid(generic_context(R, L), 2):
        assert not route_residual(R, L, data, lam), lam


@pytest.mark.parametrize("d", DATUMS, ids=ids)
def test_minuscule_single_term(d):
    R, L = datum(*d)
    data = split_data(R)
    for nu in generic_context(R, L).W.minuscule_set():
        f = satake_E(R, L, data, nu)
        assert f.support() == [nu]
        assert f.coefficient(nu) == delta_P(R, L, data, nu).sqrt().inverse()


def test_poincare_a1():
    R, L = datum("A", 1, "P")
    assert poincare(R, L) == tau(R, (0, 1), (1, 1))


def test_poincare_a2():
    R, L = datum("A", 2, "P")
    assert poincare(R, L) == tau(R, (0, 1), (1, 2), (2, 2), (3, 1))


def test_poincare_b2():
    R, L = datum("B", 2, "P")
    assert poincare(R, L) == tau(R, (0, 1), (1, 2), (2, 2), (3, 2), (4, 1))


@pytest.mark.parametrize("d", DATUMS, ids=ids)
def test_delta_multiplicative(d):
    R, L = datum(*d)
    ok, detail = delta_homomorphism(R, L, split_data(R), pairs=40)
    assert ok, detail


def test_delta_a1():
    R, L = datum("A", 1, "P")
    data = split_data(R)
    assert delta_P(R, L, data, (1,)) == tau(R, (1, 1))
    assert delta_P(R, L, data, (-3,)) == tau(R, (-3, 1))


def test_omega_invariance_enforced():
    R, L = datum("A", 1, "P")
    with pytest.raises(SatakeDataError):
        validate(R, L, SatakeData((3, 1), (0, 0)))
    Rq, Lq = datum("A", 1, "Q")
    validate(Rq, Lq, SatakeData((3, 1), (0, 0)))


@pytest.mark.parametrize("data", [SatakeData((1,), (0,)), SatakeData((1, 1), (0, 1)), SatakeData((0, 1), (0, 0))])
def test_bad_multiplicities(data):
    R, L = datum("A", 1, "Q")
    with pytest.raises(SatakeDataError):
        validate(R, L, data)


def test_identity_coefficient_a1():
    R, L = datum("A", 1, "P")
    data = split_data(R, 5)
    chi = UnramifiedCharacter(L, [(2, 1)])
    assert matrix_coefficient(R, L, data, (0,), chi) == sympy.Rational(1, 6)


@pytest.mark.parametrize("d", [("A", 1, "P"), ("A", 2, "P"), ("C", 2, "Q"), ("BC", 1, "Q")], ids=ids)
def test_identity_coefficient_is_inverse_volume(d):
    R, L = datum(*d)
    data = split_data(R, 3)
    chi = UnramifiedCharacter(L, [(Fraction(1, 2), 1)] * R.rank)
    vol = sum(Fraction(c) * 3 ** (e[0] // tau_namespace(R).denom) for e, c in poincare(R, L).terms.items())
    assert sympy.simplify(matrix_coefficient(R, L, data, (0,) * R.rank, chi) - sympy.Rational(1) / int(vol)) == 0


@pytest.mark.parametrize("lam", [(1,), (-1,), (2,), (-2,)])
def test_exact_float_and_fresh_agree(lam):
    R, L = datum("A", 1, "P")
    data = split_data(R, 7)
    chi = UnramifiedCharacter(L, [(Fraction(3, 2), Fraction(-1, 3))])
    exact = matrix_coefficient(R, L, data, lam, chi)
    fresh = matrix_coefficient(R, L, data, lam, chi, fresh=True)
    assert sympy.simplify(exact - fresh) == 0
    approx = matrix_coefficient(R, L, data, lam, chi.to_float())
    assert abs(complex(exact) - approx) <= 1e-12 * abs(approx)


def test_character_errors():
    R, L = datum("A", 2, "P")
    with pytest.raises(CharacterError):
        UnramifiedCharacter(L, [(1, 0)])
    with pytest.raises(CharacterError):
        UnramifiedCharacter(L, [(1, 0), 2.0])
    with pytest.raises(CharacterError):
        UnramifiedCharacter(L, [0.0, 1.0])


def test_generic_tau_rejected_for_coefficients():
    R, L = datum("A", 1, "P")
    with pytest.raises(SatakeDataError):
        matrix_coefficient(R, L, split_data(R), (0,), UnramifiedCharacter(L, [1.0]))


def test_volume_positive_coefficients():
    R, L = datum("B", 2, "P")
    v = vol_ItlamK(R, L, split_data(R), (-1, 1))
    assert all(c > 0 for c in v.terms.values())
