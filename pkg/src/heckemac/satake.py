"""Specialization to a p-adic group: volumes, modular character, Satake basis
and matrix coefficients of unramified principal series.

Everything on this side lives in the one-parameter namespace ``("tau",)``
where ``tau`` is the residue field cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import sympy

from .coeffs import GroupAlgebraElement, Namespace, ParamScalar
from .hecke import HeckeContext, effective_alias, generic_context, param_namespace
from .macdonald import E, U, normalizer, orbit_recursion
from .rootdata import Lattice, RootSystem, orbit_table
from .weyl import WeylElement, weyl_group

__all__ = [
    "SatakeData", "SatakeDataError", "UnramifiedCharacter", "CharacterError",
    "split_data", "preset", "PRESETS", "tau_namespace", "tau_of", "delta_P",
    "vol_ItlamK", "specialize", "specialized_context", "satake_E", "route_residual",
    "matrix_coefficient", "evaluate_tau",
]


class SatakeDataError(ValueError):
    pass


class CharacterError(ValueError):
    pass


@dataclass(frozen=True)
class SatakeData:
    """Residue cardinality and root multiplicities ``d(a_i)``, ``d(2 a_i)``.

    ``tau`` is an integer >= 2 or ``None`` (formal).
    """
    d: tuple[int, ...]
    d2: tuple[int, ...]
    tau: int | None = None

    def exponent(self, i: int) -> int:
        """``d_i = d(a_i) + d(2 a_i)``, so that ``tau_i = tau^{d_i}``."""
        return self.d[i] + self.d2[i]

    def star_exponent(self, i: int) -> int:
        return self.d[i] - self.d2[i]

    def to_json(self) -> dict:
        return {"tau": self.tau, "d": list(self.d), "d2": list(self.d2)}


def _omega_permutation(R: RootSystem, L: Lattice, nu) -> list[int]:
    W = weyl_group(R, L)
    om = W.omega(nu)
    out = []
    for beta, k in W.simple_affine:
        gb = om.linear(beta)
        k2 = k - R.inner(om.trans, gb)
        out.append(W.simple_affine.index((gb, k2)))
    return out


def validate(R: RootSystem, L: Lattice, data: SatakeData) -> SatakeData:
    n = R.rank
    if len(data.d) != n + 1 or len(data.d2) != n + 1:
        raise SatakeDataError(f"d and d2 need {n + 1} entries (a_0..a_{n})")
    if any(x < 1 for x in data.d) or any(x < 0 for x in data.d2):
        raise SatakeDataError("need d(a_i) >= 1 and d(2a_i) >= 0")
    if data.tau is not None and (not isinstance(data.tau, int) or data.tau < 2):
        raise SatakeDataError("tau must be an integer >= 2")
    doubled = {0, n} if not R.reduced else set()
    for i in range(n + 1):
        if data.d2[i] and i not in doubled:
            raise SatakeDataError(f"2a_{i} is not an affine root, so d2[{i}] must be 0")
    tab = orbit_table(R)
    seen: dict = {}
    for i in range(n + 1):
        k = tab.simple_orbit[i]
        e = (data.d[i], data.d2[i])
        if seen.setdefault(k, e) != e:
            raise SatakeDataError(f"multiplicities differ on one orbit (a_{i})")
    W = weyl_group(R, L)
    for nu in W.minuscule_set():
        perm = _omega_permutation(R, L, nu)
        for i, j in enumerate(perm):
            if data.exponent(i) != data.exponent(j) or data.d2[i] != data.d2[j]:
                raise SatakeDataError(
                    f"multiplicities are not invariant under the length-zero element of {list(nu)}"
                )
    return data


def split_data(R: RootSystem, tau: int | None = None) -> SatakeData:
    n = R.rank
    return SatakeData((1,) * (n + 1), (0,) * (n + 1), tau)


PRESETS = {
    # name: (type, rank, lattice, d, d2)
    "A1-unequal": ("A", 1, "Q", (3, 1), (0, 0)),
    "BC1-double": ("BC", 1, "Q", (1, 2), (1, 1)),
    "BC2-double": ("BC", 2, "Q", (1, 1, 2), (2, 0, 1)),
}


def preset(name: str, tau: int | None = None):
    """``(R, L, data)`` for a named non-split preset."""
    from .rootdata import build_root_system

    t, n, lat, d, d2 = PRESETS[name]
    R = build_root_system(t, n)
    L = Lattice.from_selector(R, lat)
    return R, L, validate(R, L, SatakeData(d, d2, tau))


# -- tau monomials -------------------------------------------------------------

@lru_cache(maxsize=None)
def tau_namespace(R: RootSystem) -> Namespace:
    return Namespace(("tau",), param_namespace(R, ()).denom)


def _tau(R: RootSystem, e) -> ParamScalar:
    return ParamScalar.mono(tau_namespace(R), {"tau": e})


def tau_of(R: RootSystem, L: Lattice, data: SatakeData, w: WeylElement) -> ParamScalar:
    """``tau(w) = tau_{i1} ... tau_{il}`` over a reduced word; length-zero part gives 1."""
    _, word = weyl_group(R, L).reduced_word(w)
    return _tau(R, sum(data.exponent(i) for i in word))


def delta_P(R: RootSystem, L: Lattice, data: SatakeData, lam: Sequence[int]) -> ParamScalar:
    """Modular character at ``t_lam``: ``tau(t_lam)`` on dominant weights, extended multiplicatively."""
    W = weyl_group(R, L)
    lam = tuple(lam)
    c = max(0, (1 - min(lam)) // 2)
    shift = tuple(2 * c for _ in lam)
    top = tuple(a + b for a, b in zip(lam, shift))
    assert R.is_dominant(top)
    num = tau_of(R, L, data, W.translation(top))
    den = tau_of(R, L, data, W.translation(shift))
    return num / den


def vol_ItlamK(R: RootSystem, L: Lattice, data: SatakeData, lam: Sequence[int]) -> ParamScalar:
    """Volume of ``I t_lam K`` as the sum of ``tau(t_lam w)`` over the finite Weyl group."""
    W = weyl_group(R, L)
    t = W.translation(lam)
    out = ParamScalar(tau_namespace(R))
    for w in W.finite_elements():
        out = out + tau_of(R, L, data, t * w)
    return out


# -- specialization ------------------------------------------------------------

def symbol_images(R: RootSystem, data: SatakeData) -> dict[str, ParamScalar]:
    """Image of every generic orbit symbol in the tau namespace."""
    tab = orbit_table(R)
    n = R.rank
    if R.reduced:
        out = {}
        for i in range(n + 1):
            out.setdefault(tab._names[tab.simple_orbit[i]], _tau(R, data.exponent(i)))
        for s in tab.symbols:
            out.setdefault(s, _tau(R, 0))
        return out
    out = {
        "t01": _tau(R, data.star_exponent(n)),
        "t02": _tau(R, data.star_exponent(0)),
        "t03": _tau(R, data.exponent(0)),
        f"t{n}": _tau(R, data.exponent(n)),
    }
    if n > 1:
        if len({data.exponent(i) for i in range(1, n)}) != 1:
            raise SatakeDataError("t_1 .. t_{n-1} must share one multiplicity")
        out["t1"] = _tau(R, data.exponent(1))
    return out


def specialize(f, R: RootSystem, data: SatakeData):
    """Send the generic parameters to powers of ``tau`` (works on scalars and group elements)."""
    ns = tau_namespace(R)
    images = symbol_images(R, data)
    if isinstance(f, ParamScalar):
        return f.substitute(images, ns)
    return f.map_coefficients(lambda c: c.substitute(images, ns), ns)


def specialized_context(R: RootSystem, L: Lattice, data: SatakeData) -> HeckeContext:
    """Hecke operators built directly over ``tau`` from the multiplicities."""
    ns = tau_namespace(R)
    images = symbol_images(R, data)
    binding = {k: images[v] for k, v in effective_alias(R).items()}
    return HeckeContext(R, L, binding, ns)


@lru_cache(maxsize=None)
def _tau_ctx(R, basis, label, data: SatakeData) -> HeckeContext:
    return specialized_context(R, Lattice(R, basis, label), data)


@lru_cache(maxsize=None)
def _gen_ctx(R, basis, label) -> HeckeContext:
    return generic_context(R, Lattice(R, basis, label))


def satake_E(R: RootSystem, L: Lattice, data: SatakeData, lam: Sequence[int], ctx=None) -> GroupAlgebraElement:
    """Satake basis element: ``T_{w_lam}`` applied to ``delta_P^{-1/2}(tilde) e^tilde``."""
    ctx = ctx or _tau_ctx(R, L.basis, L.label, data)
    cache = ctx.__dict__.setdefault("_satake_cache", {})

    def base(x):
        return ctx.e(x, delta_P(R, L, data, x).sqrt().inverse())

    return orbit_recursion(ctx, L.check(lam), base, cache)


def route_residual(R: RootSystem, L: Lattice, data: SatakeData, lam: Sequence[int]) -> GroupAlgebraElement:
    """``satake_E - j_lam(tau) E_lam(tau)``; zero when the two routes agree."""
    g = _gen_ctx(R, L.basis, L.label)
    rhs = specialize(E(g, lam), R, data).scale(specialize(normalizer(g, lam), R, data))
    return satake_E(R, L, data, lam) - rhs


# -- matrix coefficients -------------------------------------------------------

class UnramifiedCharacter:
    """Character of the lattice given by its values on ``L.basis``.

    Values are all exact ``(re, im)`` rational pairs or all floats/complex.
    """

    def __init__(self, L: Lattice, values: Sequence):
        if len(values) != len(L.basis):
            raise CharacterError(f"need {len(L.basis)} values, one per lattice basis vector")
        kinds = {isinstance(v, (tuple, list)) for v in values}
        if len(kinds) != 1:
            raise CharacterError("mixed exact and floating character values")
        self.L = L
        self.exact = kinds.pop()
        if self.exact:
            self.values = [sympy.Rational(Fraction(re)) + sympy.I * sympy.Rational(Fraction(im))
                           for re, im in values]
        else:
            self.values = [complex(v) for v in values]
        if any(v == 0 for v in self.values):
            raise CharacterError("character values must be nonzero")

    def __call__(self, mu: Sequence[int]):
        coords = self.L.coords(mu)
        out = sympy.Integer(1) if self.exact else 1 + 0j
        for c, v in zip(coords, self.values):
            out = out * v ** int(c)
        return out

    def to_float(self) -> "UnramifiedCharacter":
        vals = [complex(v) for v in self.values]
        return UnramifiedCharacter(self.L, vals)


def evaluate_tau(c: ParamScalar, tau, exact: bool):
    """Numeric value of a tau-polynomial."""
    d = c.ns.denom
    if exact:
        base = sympy.Integer(tau)
        return sympy.Add(*[sympy.Rational(Fraction(v)) * base ** sympy.Rational(e, d)
                           for (e,), v in c.terms.items()])
    return sum(float(v) * float(tau) ** (e / d) for (e,), v in c.terms.items())


def matrix_coefficient(R: RootSystem, L: Lattice, data: SatakeData, lam: Sequence[int],
                       chi: UnramifiedCharacter, fresh: bool = False):
    """``E_chi(t_{-lam}) = j_lam(tau) / vol(K t_{-lam} I) * chi^{-1}(E_lam(tau))``."""
    if data.tau is None:
        raise SatakeDataError("matrix coefficients need a numeric tau")
    lam = L.check(lam)
    vol = evaluate_tau(vol_ItlamK(R, L, data, lam), data.tau, chi.exact)
    zero = sympy.Integer(0) if chi.exact else 0j
    if fresh:
        # independent route: new caches, j and E kept apart
        g = generic_context(R, L)
        j = evaluate_tau(specialize(normalizer(g, lam), R, data), data.tau, chi.exact)
        f = specialize(E(g, lam), R, data)
        total = sum((evaluate_tau(c, data.tau, chi.exact) / chi(mu) for mu, c in f.items()), zero)
        return j * total / vol
    g = _gen_ctx(R, L.basis, L.label)
    f = specialize(U(g, lam), R, data)
    total = sum((evaluate_tau(c, data.tau, chi.exact) / chi(mu) for mu, c in f.items()), zero)
    return total / vol
