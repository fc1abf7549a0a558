"""The extended affine Weyl group ``W^e = W_fin x| Lambda``.

Elements are stored as ``t_mu * w`` (translation on the left) with the
finite part given by its integer matrix on fundamental-weight coordinates.
The affine action on weights is the level-zero one:
``r_0 . x = s_theta(x) + theta / c0`` and ``t_mu . x = x + mu``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .rootdata import Lattice, RootSystem, Weight

__all__ = ["WeylElement", "WeightOrbitData", "AffineWeylGroup", "weyl_group"]

Matrix = tuple[tuple[int, ...], ...]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matvec(a: Matrix, x: Sequence) -> tuple:
    return tuple(sum(r[k] * x[k] for k in range(len(x)) if x[k]) for r in a)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    """``t_trans * w`` where ``w`` acts on P-coordinates by ``mat``."""
    trans: Weight
    mat: Matrix

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        mu = tuple(a + b for a, b in zip(self.trans, _matvec(self.mat, other.trans)))
        return WeylElement(mu, _matmul(self.mat, other.mat))

    def linear(self, x: Sequence) -> tuple:
        return _matvec(self.mat, x)

    def act(self, x: Sequence) -> tuple:
        """Affine action ``x -> w(x) + trans``."""
        return tuple(a + b for a, b in zip(self.linear(x), self.trans))

    @property
    def finite(self) -> "WeylElement":
        return WeylElement((0,) * len(self.trans), self.mat)

    def is_identity(self) -> bool:
        return not any(self.trans) and self.mat == _identity(len(self.trans))


@dataclass(frozen=True)
class WeightOrbitData:
    """Distinguished representatives attached to a weight ``lam``.

    ``w = r_{word[0]} ... r_{word[-1]}`` is the minimal element with
    ``w . tilde = lam``; ``fin`` satisfies ``fin^{-1}(lam) = minus``.
    """
    lam: Weight
    tilde: Weight
    w: WeylElement
    word: tuple[int, ...]
    minus: Weight
    fin: WeylElement
    fin_word: tuple[int, ...]


@dataclass(eq=False)
class AffineWeylGroup:
    """Group-theoretic services for a root system and lattice."""
    R: RootSystem
    L: Lattice
    _orbit_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        R = self.R
        n = R.rank
        self.n = n
        self.one = WeylElement((0,) * n, _identity(n))
        mats = []
        for i in range(1, n + 1):
            row = R.cartan[i - 1]
            m = tuple(
                tuple(int(j == k) - (row[j] if k == i - 1 else 0) for k in range(n))
                for j in range(n)
            )
            mats.append(WeylElement((0,) * n, m))
        vth = R.coroot_vec[R.theta]
        sth_q = [[int(j == k) - R.theta[j] * vth[k] for k in range(n)] for j in range(n)]
        assert all(v.denominator == 1 for row in sth_q for v in row)
        sth = tuple(tuple(int(v) for v in row) for row in sth_q)
        self.s_theta = WeylElement((0,) * n, sth)
        self.gens = [WeylElement(R.mu0, sth)] + mats
        # (theta, lambda_j) scaled to integers for alcove tests
        g = [R.inner(R.theta, tuple(int(j == k) for k in range(n))) for j in range(n)]
        self._th_den = math.lcm(*(x.denominator for x in g))
        self._th = tuple(int(x * self._th_den) for x in g)
        # affine simple roots as (finite part, shift)
        self.simple_affine = [(tuple(-c for c in R.mu0), Fraction(1, R.c0))] + [
            (a, Fraction(0)) for a in R.simple
        ]
        self._init_length()

    # -- elements ------------------------------------------------------------

    def simple(self, i: int) -> WeylElement:
        return self.gens[i]

    def translation(self, mu: Sequence[int]) -> WeylElement:
        return WeylElement(tuple(mu), self.one.mat)

    def from_word(self, word: Sequence[int], omega: WeylElement | None = None) -> WeylElement:
        w = omega or self.one
        for i in word:
            w = w * self.gens[i]
        return w

    def inverse(self, w: WeylElement) -> WeylElement:
        word = self.finite_word(w)
        inv_fin = self.from_word(list(reversed(word)))
        mu = inv_fin.linear(w.trans)
        return WeylElement(tuple(-c for c in mu), inv_fin.mat)

    def finite_word(self, w: WeylElement) -> list[int]:
        """Reduced word of the finite part of ``w`` in ``s_1..s_n``."""
        m = w.finite
        rev = []
        while True:
            for i in range(1, self.n + 1):
                if sum(self.R.rc_of[m.linear(self.R.simple[i - 1])]) < 0:
                    m = m * self.gens[i]
                    rev.append(i)
                    break
            else:
                assert m.mat == self.one.mat
                return rev[::-1]

    # -- actions ---------------------------------------------------------------

    def a_value(self, i: int, x: Sequence) -> Fraction:
        """Value of the affine simple root ``a_i`` at ``x``."""
        if i:
            return Fraction(x[i - 1])
        th = Fraction(sum(a * b for a, b in zip(self._th, x)), self._th_den)
        return (1 - th) / self.R.c0

    def reflect(self, i: int, x: Sequence[int]) -> Weight:
        """Level-zero affine action of ``r_i`` on a weight."""
        if i:
            return self.R.reflect(i, x)
        return self.gens[0].act(x)

    def act(self, w: WeylElement, x: Sequence) -> tuple:
        return w.act(x)

    # -- length --------------------------------------------------------------

    def _init_length(self) -> None:
        R = self.R
        n = self.n
        cvec = [R.coroot_vec[a] for a in R.positive_indivisible]
        den = math.lcm(*(v.denominator for vec in cvec for v in vec))
        self._cov = [tuple(int(v * den) for v in vec) for vec in cvec]
        self._cov_den = den
        # interior sample point: half the alcove barycenter
        verts = []
        for i in range(n):
            ci = R.theta_rc[i]
            nn = R.gram_roots[i][i]
            verts.append(Fraction(2) / (ci * nn))
        pt = [v / (2 * (n + 1)) for v in verts]
        L = math.lcm(*(p.denominator for p in pt))
        self._sample = tuple(int(p * L) for p in pt)
        self._sample_den = L

    def length(self, w: WeylElement) -> int:
        """Number of affine hyperplanes separating the alcove from its image."""
        L = self._sample_den
        Y = tuple(a + L * b for a, b in zip(w.linear(self._sample), w.trans))
        den = self._cov_den * L
        total = 0
        for v in self._cov:
            num = sum(a * b for a, b in zip(v, Y))
            if num > 0:
                total += num // den
            else:
                total += (-num) // den + 1
        return total

    def is_descent(self, w: WeylElement, i: int) -> bool:
        """Whether ``l(w r_i) < l(w)``, i.e. ``w(a_i)`` is negative."""
        beta, k = self.simple_affine[i]
        gb = w.linear(beta)
        k2 = k - self.R.inner(w.trans, gb)
        if k2:
            return k2 < 0
        return gb not in self.R.positive_set

    def reduced_word(self, w: WeylElement) -> tuple[WeylElement, tuple[int, ...]]:
        """``(omega, word)`` with ``w = omega * r_word[0] * ... * r_word[-1]``."""
        rev = []
        while True:
            for i in range(self.n + 1):
                if self.is_descent(w, i):
                    w = w * self.gens[i]
                    rev.append(i)
                    break
            else:
                return w, tuple(reversed(rev))

    def format_word(self, w: WeylElement) -> str:
        omega, word = self.reduced_word(w)
        head = "1" if omega.is_identity() else "omega"
        return "w = " + head + (" * " + " ".join(f"r{i}" for i in word) if word else "")

    def in_affine_weyl(self, w: WeylElement) -> bool:
        return self.reduced_word(w)[0].is_identity()

    # -- weights ---------------------------------------------------------------

    def is_minuscule(self, x: Sequence[int]) -> bool:
        return all(self.a_value(i, x) >= 0 for i in range(self.n + 1))

    def minuscule_set(self) -> list[Weight]:
        """Lattice points of the closed fundamental alcove."""
        bounds = [self._th_den // t for t in self._th]
        out = []
        for x in itertools.product(*(range(b + 1) for b in bounds)):
            if self.is_minuscule(x) and self.L.contains(x):
                out.append(tuple(x))
        return sorted(out)

    def omega(self, nu: Sequence[int]) -> WeylElement:
        """``omega_nu = t_nu * fin_nu`` for a minuscule ``nu``."""
        _, word = self.R.to_antidominant(nu)
        return self.translation(nu) * self.from_word(word)

    def orbit_data(self, lam: Sequence[int]) -> WeightOrbitData:
        lam = self.L.check(lam)
        hit = self._orbit_cache.get(lam)
        if hit is not None:
            return hit
        x = lam
        seq = []
        while True:
            for i in range(self.n + 1):
                if self.a_value(i, x) < 0:
                    x = self.reflect(i, x)
                    seq.append(i)
                    break
            else:
                break
        minus, fw = self.R.to_antidominant(lam)
        data = WeightOrbitData(
            lam, x, self.from_word(seq), tuple(seq), minus, self.from_word(fw), tuple(fw)
        )
        self._orbit_cache[lam] = data
        return data

    def finite_elements(self) -> list[WeylElement]:
        seen = {self.one}
        frontier = [self.one]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(1, self.n + 1):
                    u = w * self.gens[i]
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return sorted(seen, key=lambda w: (self.length(w), w.mat))

    def longest(self) -> WeylElement:
        return max(self.finite_elements(), key=self.length)

    def bruhat_leq(self, u: WeylElement, v: WeylElement) -> bool:
        """Subword-property test (small lengths only)."""
        ou, wu = self.reduced_word(u)
        ov, wv = self.reduced_word(v)
        if ou != ov:
            return False
        target = self.from_word(wu)
        reach = {self.one}
        for i in wv:
            reach |= {s * self.gens[i] for s in reach}
        return target in reach


@lru_cache(maxsize=None)
def _cached(R: RootSystem, basis: tuple, label: str) -> AffineWeylGroup:
    return AffineWeylGroup(R, Lattice(R, basis, label))


def weyl_group(R: RootSystem, L: Lattice) -> AffineWeylGroup:
    return _cached(R, L.basis, L.label)
