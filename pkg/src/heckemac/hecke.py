"""Action of the extended affine Hecke algebra on the group algebra of a lattice.

Generators ``T_1..T_n`` act by Demazure-Lusztig operators, ``X_mu`` by
multiplication with ``e^mu``, and ``T_0`` is realised as
``c * X_{theta/c0} * T_{s_theta}^{-1}`` with the scalar ``c`` fixed so that the
quadratic relation for ``T_0`` holds with parameter ``t03``.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from . import kernels as K
from .coeffs import GroupAlgebraElement, Namespace, ParamScalar, string_quotient
from .rootdata import Lattice, RootSystem, orbit_table
from .weyl import AffineWeylGroup, weyl_group

__all__ = [
    "HeckeContext", "generic_context", "effective_alias", "param_namespace",
    "short_simple", "InvariantError",
]


class InvariantError(AssertionError):
    """A defining relation of the Hecke algebra failed."""


def param_namespace(R: RootSystem, names: Sequence[str]) -> Namespace:
    """Namespace wide enough for the t-power normalisation exponents."""
    den = math.lcm(*(c.denominator for row in R.coweight for c in row))
    return Namespace(tuple(names), 2 * den)


def short_simple(R: RootSystem) -> int:
    """Index of a simple root of the same length as ``theta / c0``."""
    target = R.norm(R.mu0)
    return next(i for i in range(1, R.rank + 1) if R.norm(R.simple[i - 1]) == target)


class HeckeContext:
    """Operators of the affine Hecke algebra for fixed parameters.

    ``binding`` maps each of ``t01, t02, t03, t1..tn`` to a monomial.
    """

    def __init__(
        self,
        R: RootSystem,
        L: Lattice,
        binding: Mapping[str, ParamScalar],
        ns: Namespace,
        t0_twist: ParamScalar | int = 1,
    ):
        self.R, self.L, self.ns = R, L, ns
        self.W: AffineWeylGroup = weyl_group(R, L)
        self.binding = dict(binding)
        n = R.rank
        self.n = n
        one = ParamScalar.const(ns)
        self.param = [self.binding["t03"]] + [self.binding[f"t{i}"] for i in range(1, n + 1)]
        self._t = [p.terms for p in self.param]
        self._tm1 = [(p - one).terms for p in self.param]
        self._tinv = [p.inverse().terms for p in self.param]
        self.double_n = not R.reduced
        if self.double_n:
            t03h = self.binding["t03"].sqrt()
            self._cc = (self.binding[f"t{n}"].sqrt() * (t03h - t03h.inverse())).terms
        self.stheta_word = self.W.finite_word(self.W.s_theta)
        c2 = self.param[0]
        for j in self.stheta_word:
            c2 = c2 * self.param[j]
        self.t0_const = c2.sqrt() * t0_twist
        self.mu0 = R.mu0

    # -- generators ------------------------------------------------------------

    def _wrap(self, terms: dict) -> GroupAlgebraElement:
        return GroupAlgebraElement._raw(self.ns, terms)

    def e(self, weight, coeff=1) -> GroupAlgebraElement:
        return GroupAlgebraElement.e(self.ns, weight, coeff)

    def T(self, i: int, f: GroupAlgebraElement) -> GroupAlgebraElement:
        """Apply ``T_i`` for ``0 <= i <= n``."""
        if i == 0:
            return self.T0(f)
        alpha = self.R.simple[i - 1]
        if self.double_n and i == self.n:
            return self._wrap(
                K.dl_apply_double(f.terms, i - 1, alpha, self._t[i], self._tm1[i], self._cc)
            )
        return self._wrap(K.dl_apply(f.terms, i - 1, alpha, self._t[i], self._tm1[i]))

    def T_inv(self, i: int, f: GroupAlgebraElement) -> GroupAlgebraElement:
        """``T_i^{-1} = t_i^{-1} (T_i - (t_i - 1))``."""
        g = K.g_iadd(self.T(i, f).terms, K.g_scale(f.terms, self._tm1[i]), -1)
        return self._wrap(K.g_scale(g, self._tinv[i]))

    def X(self, mu: Sequence[int], f: GroupAlgebraElement) -> GroupAlgebraElement:
        return f.shift(mu)

    def T0(self, f: GroupAlgebraElement) -> GroupAlgebraElement:
        g = f
        for j in self.stheta_word:
            g = self.T_inv(j, g)
        return g.shift(self.mu0).scale(self.t0_const)

    def T_word(self, word: Iterable[int], f: GroupAlgebraElement) -> GroupAlgebraElement:
        """``T_{i1} ... T_{ik} f`` for ``word = (i1, ..., ik)``."""
        for i in reversed(tuple(word)):
            f = self.T(i, f)
        return f

    def T_element(self, w, f: GroupAlgebraElement) -> GroupAlgebraElement:
        omega, word = self.W.reduced_word(w)
        if not omega.is_identity():
            raise ValueError("element has a nontrivial length-zero part")
        return self.T_word(word, f)

    # -- relations -----------------------------------------------------------

    def affine_cartan(self, i: int, j: int) -> int:
        bi = self.W.simple_affine[i][0]
        bj = self.W.simple_affine[j][0]
        return int(2 * self.R.inner(bi, bj) / self.R.norm(bj))

    def braid_order(self, i: int, j: int) -> int | None:
        """Order of ``r_i r_j``, or ``None`` when infinite."""
        p = self.affine_cartan(i, j) * self.affine_cartan(j, i)
        return {0: 2, 1: 3, 2: 4, 3: 6}.get(p)

    def check_quadratic(self, i: int, f: GroupAlgebraElement) -> bool:
        """``(T_i - t_i)(T_i + 1) f == 0``."""
        g = self.T(i, f) + f
        h = self.T(i, g) - g.scale(self.param[i])
        return not h

    def check_braid(self, i: int, j: int, f: GroupAlgebraElement) -> bool:
        m = self.braid_order(i, j)
        if m is None:
            return True
        left = [i, j] * m
        right = [j, i] * m
        return self.T_word(left[:m], f) == self.T_word(right[:m], f)

    def bl_defect(self, i: int, lam: Sequence[int], f: GroupAlgebraElement) -> GroupAlgebraElement:
        """``T_i X_lam f - X_{r_i lam} T_i f`` minus the Bernstein-Lusztig correction."""
        lam = tuple(lam)
        r = self.R.reflect(i, lam)
        left = self.T(i, f.shift(lam)) - self.T(i, f).shift(r)
        diff = self.e(lam) - self.e(r)
        alpha = self.R.simple[i - 1]
        one = ParamScalar.const(self.ns)
        if self.double_n and i == self.n:
            num = diff.scale(self.param[i] - one) + diff.shift(tuple(-a for a in alpha)).scale(
                ParamScalar(self.ns, self._cc)
            )
            corr = string_quotient(num, alpha, 2)
        else:
            corr = string_quotient(diff, alpha, 1).scale(self.param[i] - one)
        return left - corr * f

    def check_all(self, samples: Sequence[Sequence[int]]) -> list[str]:
        """Names of the failing relations on ``e^lam`` for ``lam`` in ``samples``."""
        bad = []
        n = self.n
        for lam in samples:
            f = self.e(lam)
            for i in range(n + 1):
                if not self.check_quadratic(i, f):
                    bad.append(f"quadratic T{i} at {list(lam)}")
                for j in range(i + 1, n + 1):
                    if not self.check_braid(i, j, f):
                        bad.append(f"braid T{i},T{j} at {list(lam)}")
            for i in range(1, n + 1):
                for mu in self.L.basis:
                    if self.bl_defect(i, mu, f):
                        bad.append(f"Bernstein-Lusztig T{i},X{list(mu)} at {list(lam)}")
        return bad


def effective_alias(R: RootSystem) -> dict[str, str]:
    """Parameter names bound to orbit symbols.

    For reduced systems ``T_0`` is conjugate into the finite Hecke algebra
    through ``X_theta``, so ``t01 = t02 = t03 = t0`` must carry the parameter
    of the orbit through ``theta``.  This differs from the orbit of ``a_0``
    whenever the closure splits them (e.g. A1, B2, C2).
    """
    alias = dict(orbit_table(R).alias)
    if R.reduced:
        th = alias[f"t{short_simple(R)}"]
        for k in ("t0", "t01", "t02", "t03"):
            alias[k] = th
    return alias


def generic_context(R: RootSystem, L: Lattice, t0_twist=1) -> HeckeContext:
    """Context over the generic parameter ring, one symbol per orbit."""
    tab = orbit_table(R)
    ns = param_namespace(R, tab.symbols)
    binding = {k: ParamScalar.mono(ns, {v: 1}) for k, v in effective_alias(R).items()}
    return HeckeContext(R, L, binding, ns, t0_twist)
