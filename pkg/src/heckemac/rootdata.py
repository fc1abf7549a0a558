"""Finite root systems, their affinizations, lattices and parameter orbits.

Every weight is handled internally as an integer tuple of coordinates with
respect to the fundamental weights (``P``-coordinates).  The orthogonal
ambient realization is kept for inner products and display only.

>>> R = build_root_system("A", 1)
>>> R.theta, R.c0
((2,), 1)
>>> len(orbit_table(R).orbits)
2
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import sympy

Weight = tuple[int, ...]

__all__ = [
    "RootDataError", "LatticeError", "RootSystem", "AffineRoot", "Lattice",
    "OrbitTable", "build_root_system", "build_affine_roots", "orbit_table",
    "inner", "ExtVector", "load_config",
]


class RootDataError(ValueError):
    """Invalid root datum (type/rank pair or lattice)."""


class LatticeError(ValueError):
    """A weight is not a member of the lattice in use."""


def _e(dim: int, *pairs: tuple[int, Fraction | int]) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * dim
    for i, c in pairs:
        v[i] += Fraction(c)
    return tuple(v)


def _simple_roots(kind: str, n: int) -> tuple[list[tuple[Fraction, ...]], Fraction]:
    """Ambient simple roots and the scale of the ambient dot product."""
    half = Fraction(1, 2)
    if kind == "A" and n >= 1:
        return [_e(n + 1, (i, 1), (i + 1, -1)) for i in range(n)], Fraction(1)
    if kind in ("B", "BC", "C") and n >= (1 if kind == "BC" else 2):
        roots = [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        roots.append(_e(n, (n - 1, 2 if kind == "C" else 1)))
        return roots, Fraction(2 if kind == "B" else 1)
    if kind == "D" and n >= 4:
        roots = [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        roots.append(_e(n, (n - 2, 1), (n - 1, 1)))
        return roots, Fraction(1)
    if kind == "G" and n == 2:
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))], Fraction(1)
    if kind == "F" and n == 4:
        return [
            _e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)),
            _e(4, (0, half), (1, -half), (2, -half), (3, -half)),
        ], Fraction(2)
    if kind == "E" and n in (6, 7, 8):
        e8 = [
            _e(8, (0, half), (7, half), *((k, -half) for k in range(1, 7))),
            _e(8, (0, 1), (1, 1)),
        ] + [_e(8, (k - 1, -1), (k, 1)) for k in range(1, 7)]
        return e8[:n], Fraction(1)
    raise RootDataError(f"invalid root datum ({kind}, {n})")


def _to_fraction_matrix(m: sympy.Matrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(
        tuple(Fraction(int(m[i, j].p), int(m[i, j].q)) for j in range(m.cols))
        for i in range(m.rows)
    )


@dataclass(frozen=True)
class ExtVector:
    """Element ``fin + a*delta + b*Lambda0`` of the extended space."""
    fin: tuple[Fraction, ...]
    delta: Fraction = Fraction(0)
    lambda0: Fraction = Fraction(0)


@dataclass(eq=False)
class RootSystem:
    """Exact data of an irreducible (possibly nonreduced) finite root system.

    Roots and weights are integer tuples in fundamental-weight coordinates.
    """
    type_label: str
    rank: int
    ambient_simple: list[tuple[Fraction, ...]]
    scale: Fraction

    def __post_init__(self) -> None:
        n = self.rank
        amb = self.ambient_simple
        dot = lambda u, v: self.scale * sum(a * b for a, b in zip(u, v))  # noqa: E731
        self.gram_roots = tuple(tuple(dot(amb[i], amb[j]) for j in range(n)) for i in range(n))
        # cartan[i][j] = <alpha_i, alpha_j^vee>
        self.cartan = tuple(
            tuple(int(2 * self.gram_roots[i][j] / self.gram_roots[j][j]) for j in range(n))
            for i in range(n)
        )
        A = sympy.Matrix(self.cartan)
        G = sympy.Matrix(n, n, lambda i, j: sympy.Rational(self.gram_roots[i][j].numerator,
                                                           self.gram_roots[i][j].denominator))
        Ainv = A.inv()
        # (lambda_i, lambda_j) in P-coordinates
        self.gram = _to_fraction_matrix(Ainv * G * Ainv.T)
        # (x, lambda_i^vee) = sum_k coweight[i][k] x_k
        self.coweight = _to_fraction_matrix(A.T.inv())
        self.inv_cartan = _to_fraction_matrix(Ainv)
        self.reduced = self.type_label != "BC"
        self.c0 = 1 if self.reduced else 2
        self._build_roots()

    # -- construction -----------------------------------------------------

    def _root_to_p(self, rc: Sequence[int]) -> Weight:
        n = self.rank
        return tuple(sum(rc[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    def _build_roots(self) -> None:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for j in range(n):
                    pair = sum(beta[i] * self.cartan[i][j] for i in range(n))
                    gamma = tuple(beta[k] - (pair if k == j else 0) for k in range(n))
                    if gamma not in seen:
                        seen.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        if not self.reduced:
            seen |= {tuple(2 * c for c in b) for b in list(seen) if self.norm_rc(b) == 1}
        self.roots_rc = sorted(seen, key=lambda b: (-sum(b), b))
        self.positive_rc = [b for b in self.roots_rc if sum(b) > 0]
        self.roots = [self._root_to_p(b) for b in self.roots_rc]
        self.positive = [self._root_to_p(b) for b in self.positive_rc]
        self.root_set = frozenset(self.roots)
        self.positive_set = frozenset(self.positive)
        self.rc_of = dict(zip(self.roots, self.roots_rc))
        self.simple = [self._root_to_p(b) for b in simple]
        # indivisible positive roots carry one hyperplane family each
        self.positive_indivisible = [
            b for b in self.positive
            if not (all(c % 2 == 0 for c in b) and tuple(c // 2 for c in b) in self.root_set)
        ]
        lengths = {self.norm(b) for b in self.roots}
        short = min(lengths)
        if self.reduced:
            cands = [b for b in self.positive_rc if self.norm_rc(b) == short]
        else:
            cands = self.positive_rc
        self.theta_rc = max(cands, key=sum)
        self.theta = self._root_to_p(self.theta_rc)
        self.lace = int(max(lengths) / short) if self.reduced else None
        if self.reduced:
            assert short == 2
        th = self.theta
        self.mu0 = tuple(c // self.c0 for c in th)
        assert all(c % self.c0 == 0 for c in th)
        self.coroot_vec = {b: self.coroot_pairing_vector(b) for b in self.roots}

    # -- metric -----------------------------------------------------------

    def norm_rc(self, rc: Sequence[int]) -> Fraction:
        n = self.rank
        return sum(rc[i] * rc[j] * self.gram_roots[i][j] for i in range(n) for j in range(n))

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        """Normalized form on P-coordinate vectors (rational entries allowed)."""
        n = self.rank
        g = self.gram
        return sum(Fraction(x[i]) * g[i][j] * y[j] for i in range(n) for j in range(n) if x[i] and y[j])

    def norm(self, x: Sequence) -> Fraction:
        return self.inner(x, x)

    def coroot_pairing_vector(self, alpha: Weight) -> tuple[Fraction, ...]:
        """Vector ``v`` with ``<x, alpha^vee> = v . x`` for x in P-coordinates."""
        nn = self.norm(alpha)
        n = self.rank
        return tuple(
            2 * sum(self.gram[i][j] * alpha[j] for j in range(n)) / nn for i in range(n)
        )

    def pair(self, x: Sequence, alpha: Weight) -> Fraction:
        """``<x, alpha^vee>``."""
        return sum(v * c for v, c in zip(self.coroot_vec[alpha], x))

    def coweight_pair(self, x: Sequence, i: int) -> Fraction:
        """``(x, lambda_i^vee)`` for the 1-based index ``i``."""
        return sum(c * xi for c, xi in zip(self.coweight[i - 1], x))

    def ambient(self, x: Sequence) -> tuple[Fraction, ...]:
        """Orthogonal ambient coordinates of a P-coordinate vector."""
        dim = len(self.ambient_simple[0])
        out = [Fraction(0)] * dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for k in range(self.rank):
                c = Fraction(xi) * self.inv_cartan[i][k]
                if c:
                    for d in range(dim):
                        out[d] += c * self.ambient_simple[k][d]
        return tuple(out)

    # -- finite reflections -------------------------------------------------

    def reflect(self, i: int, x: Sequence[int]) -> Weight:
        """Simple reflection ``r_i`` (1-based) on a P-coordinate vector."""
        m = x[i - 1]
        if not m:
            return tuple(x)
        row = self.cartan[i - 1]
        return tuple(a - m * c for a, c in zip(x, row))

    def reflect_root(self, alpha: Weight, x: Sequence[int]) -> Weight:
        m = self.pair(x, alpha)
        assert m.denominator == 1
        m = int(m)
        return tuple(a - m * c for a, c in zip(x, alpha))

    def is_dominant(self, x: Sequence) -> bool:
        return all(c >= 0 for c in x)

    def is_antidominant(self, x: Sequence) -> bool:
        return all(c <= 0 for c in x)

    def to_antidominant(self, x: Sequence[int]) -> tuple[Weight, list[int]]:
        """Return ``(x_-, [i1..ik])`` with ``x = s_i1...s_ik x_-``."""
        x = tuple(x)
        word: list[int] = []
        while True:
            for i in range(1, self.rank + 1):
                if x[i - 1] > 0:
                    x = self.reflect(i, x)
                    word.append(i)
                    break
            else:
                return x, word

    def to_dominant(self, x: Sequence[int]) -> tuple[Weight, list[int]]:
        """Return ``(x_+, [i1..ik])`` with ``x = s_i1...s_ik x_+`` (minimal)."""
        x = tuple(x)
        word: list[int] = []
        while True:
            for i in range(1, self.rank + 1):
                if x[i - 1] < 0:
                    x = self.reflect(i, x)
                    word.append(i)
                    break
            else:
                return x, word

    def height(self, alpha: Weight) -> int:
        return sum(self.rc_of[alpha])

    def __repr__(self) -> str:
        return f"RootSystem({self.type_label}{self.rank})"


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Construct the root system of the given irreducible type.

    Raises :class:`RootDataError` for an invalid ``(type, rank)`` pair.
    """
    kind = str(type_label).upper()
    try:
        rank = int(rank)
    except (TypeError, ValueError):
        raise RootDataError(f"invalid root datum ({type_label}, {rank})") from None
    simple, scale = _simple_roots(kind, rank)
    return RootSystem(kind, rank, simple, scale)


def inner(R: RootSystem, x: ExtVector, y: ExtVector) -> Fraction:
    """Bilinear form on the extended space; ``(delta, Lambda0) = 1``."""
    return (R.inner(x.fin, y.fin) + x.delta * y.lambda0 + x.lambda0 * y.delta)


# -- affine roots ----------------------------------------------------------

@dataclass(frozen=True, order=True)
class AffineRoot:
    """``alpha + shift*delta`` with ``alpha`` a finite root in P-coordinates."""
    alpha: Weight
    shift: Fraction

    def as_vector(self) -> ExtVector:
        return ExtVector(tuple(Fraction(c) for c in self.alpha), Fraction(self.shift))


def _shift_step(R: RootSystem, alpha: Weight) -> Fraction:
    """Spacing of admissible shifts for the finite root ``alpha``."""
    nn = R.norm(alpha)
    if R.reduced:
        return Fraction(1) if nn == 2 else Fraction(R.lace)
    return Fraction(1, 2) if nn == 1 else Fraction(1)


def build_affine_roots(R: RootSystem, shift_bound) -> list[AffineRoot]:
    """All affine roots with ``|shift| <= shift_bound``."""
    bound = Fraction(shift_bound)
    if bound <= 0:
        raise RootDataError("shift_bound must be positive")
    out = []
    for alpha in R.roots:
        step = _shift_step(R, alpha)
        k = -math.floor(bound / step)
        while k * step <= bound:
            out.append(AffineRoot(alpha, k * step))
            k += 1
    return sorted(out)


def affine_simple_roots(R: RootSystem) -> list[AffineRoot]:
    """``[a_0, a_1, ..., a_n]`` with ``a_0 = c0^{-1}(delta - theta)``."""
    a0 = AffineRoot(tuple(-c for c in R.mu0), Fraction(1, R.c0))
    return [a0] + [AffineRoot(a, Fraction(0)) for a in R.simple]


def affine_reflect(R: RootSystem, i: int, a: AffineRoot) -> AffineRoot:
    """Level-zero action of ``r_i`` on an affine root."""
    if i:
        return AffineRoot(R.reflect(i, a.alpha), a.shift)
    m = R.pair(a.alpha, R.theta)
    assert m.denominator == 1
    m = int(m)
    return AffineRoot(tuple(x - m * t for x, t in zip(a.alpha, R.theta)), a.shift + m)


@dataclass
class OrbitTable:
    """Partition of the affine roots into ``W``-orbits and the parameter names.

    ``orbits`` is a list of frozensets of normalized states ``(alpha, shift mod period)``.
    ``alias`` maps ``t01, t02, t03, t1..tn`` to a generic symbol name; ``symbols``
    lists the generic symbols in namespace order.
    """
    R: RootSystem
    periods: dict
    orbits: list
    orbit_index: dict
    alias: dict
    symbols: tuple
    simple_orbit: list

    def state(self, a: AffineRoot):
        p = self.periods[a.alpha]
        return (a.alpha, a.shift % p)

    def orbit_of(self, a: AffineRoot) -> int:
        return self.orbit_index[self.state(a)]

    def symbol_of_orbit(self, k: int) -> str:
        return self._names[k]


def _period(R: RootSystem, alpha: Weight) -> Fraction:
    vals = [R.inner(s, alpha) for s in R.simple]
    den = math.lcm(*(v.denominator for v in vals))
    g = math.gcd(*(int(v * den) for v in vals))
    return Fraction(g, den)


@lru_cache(maxsize=None)
def orbit_table(R: RootSystem) -> OrbitTable:
    """Compute the orbits of the level-zero ``W``-action on affine roots by closure."""
    periods = {a: _period(R, a) for a in R.roots}
    states = []
    for alpha in R.roots:
        step = _shift_step(R, alpha)
        p = periods[alpha]
        k = Fraction(0)
        while k < p:
            states.append((alpha, k))
            k += step
    index: dict = {}
    orbits = []
    for s in states:
        if s in index:
            continue
        comp = {s}
        frontier = [s]
        while frontier:
            nxt = []
            for alpha, k in frontier:
                for i in range(R.rank + 1):
                    b = affine_reflect(R, i, AffineRoot(alpha, k))
                    t = (b.alpha, b.shift % periods[b.alpha])
                    if t not in comp:
                        comp.add(t)
                        nxt.append(t)
            frontier = nxt
        for t in comp:
            index[t] = len(orbits)
        orbits.append(frozenset(comp))

    def st(a: AffineRoot):
        return index[(a.alpha, a.shift % periods[a.alpha])]

    simple = affine_simple_roots(R)
    simple_orbit = [st(a) for a in simple]
    n = R.rank
    names: dict[int, str] = {}
    alias: dict[str, str] = {}
    if R.reduced:
        for i in list(range(1, n + 1)) + [0]:
            names.setdefault(simple_orbit[i], f"t{i}")
        for i in range(1, n + 1):
            alias[f"t{i}"] = names[simple_orbit[i]]
        alias["t0"] = names[simple_orbit[0]]
        alias["t01"] = alias["t02"] = alias["t03"] = alias["t0"]
    else:
        a0, an = simple[0], simple[n]
        double = lambda a: AffineRoot(tuple(2 * c for c in a.alpha), 2 * a.shift)  # noqa: E731
        names[st(double(a0))] = "t01"
        names[st(a0)] = "t02"
        names[st(an)] = "t03"
        names[st(double(an))] = f"t{n}"
        for i in range(1, n):
            names.setdefault(simple_orbit[i], "t1")
        for k in ("t01", "t02", "t03"):
            alias[k] = k
        for i in range(1, n + 1):
            alias[f"t{i}"] = "t1" if i < n else f"t{n}"
        alias["t0"] = "t03"
    for k in range(len(orbits)):
        names.setdefault(k, f"u{k}")
    order = []
    for nm in sorted(set(names.values()), key=_symbol_key):
        order.append(nm)
    tab = OrbitTable(R, periods, orbits, index, alias, tuple(order), simple_orbit)
    tab._names = names
    return tab


def _symbol_key(name: str):
    if name.startswith("t0") and len(name) == 3:
        return (0, int(name[2]))
    return (1, int(name[1:])) if name[1:].isdigit() else (2, name)


# -- lattices ----------------------------------------------------------------

@dataclass(eq=False)
class Lattice:
    """Intermediate lattice ``Q <= Lambda <= P`` given by an integral basis."""
    R: RootSystem
    basis: tuple[Weight, ...]
    label: str = "custom"
    _inv: tuple = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = self.R.rank
        B = sympy.Matrix([list(b) for b in self.basis])
        if B.shape != (n, n) or B.det() == 0:
            raise RootDataError("lattice basis must have full rank")
        self._inv = _to_fraction_matrix(B.inv())
        for a in self.R.simple:
            if not self.contains(a):
                raise RootDataError("lattice must contain the root lattice")
        if not self.R.reduced:
            for b in self.basis:
                if b[-1] % 2:
                    raise RootDataError("nonreduced lattice must pair evenly with alpha_n^vee")

    @classmethod
    def P(cls, R: RootSystem) -> "Lattice":
        if not R.reduced:
            # integral against every coroot, including (2 alpha_n)^vee
            return cls(R, tuple(R.simple), "P")
        n = R.rank
        return cls(R, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), "P")

    @classmethod
    def Q(cls, R: RootSystem) -> "Lattice":
        return cls(R, tuple(R.simple), "Q")

    @classmethod
    def from_selector(cls, R: RootSystem, selector, basis=None) -> "Lattice":
        if selector == "P":
            return cls.P(R)
        if selector == "Q":
            return cls.Q(R)
        if basis is None:
            raise RootDataError(f"unknown lattice selector {selector!r}")
        return cls(R, tuple(tuple(int(c) for c in b) for b in basis))

    def coords(self, x: Sequence[int]) -> tuple[Fraction, ...]:
        n = self.R.rank
        return tuple(sum(Fraction(x[i]) * self._inv[i][j] for i in range(n)) for j in range(n))

    def contains(self, x: Sequence[int]) -> bool:
        return all(c.denominator == 1 for c in self.coords(x))

    def check(self, x: Sequence[int]) -> Weight:
        x = tuple(int(c) for c in x)
        if len(x) != self.R.rank or not self.contains(x):
            raise LatticeError(f"weight {list(x)} is not in the lattice {self.label}")
        return x

    def index_of_Q(self) -> int:
        """``[Lambda : Q]``."""
        n = self.R.rank
        M = sympy.Matrix([[self.coords(a)[j] for j in range(n)] for a in self.R.simple])
        return abs(int(M.det()))

    def box(self, radius: int) -> list[Weight]:
        """Lattice points with all P-coordinates in ``[-radius, radius]``."""
        import itertools
        rng = range(-radius, radius + 1)
        return [x for x in itertools.product(rng, repeat=self.R.rank) if self.contains(x)]


def load_config(data) -> tuple[RootSystem, Lattice]:
    """Root datum from a JSON string/dict ``{type_label, rank, lattice, basis?}``."""
    if isinstance(data, str):
        data = json.loads(data)
    allowed = {"type_label", "rank", "lattice", "basis"}
    extra = set(data) - allowed
    if extra:
        raise RootDataError(f"unknown keys {sorted(extra)}")
    R = build_root_system(data["type_label"], data["rank"])
    L = Lattice.from_selector(R, data.get("lattice", "P"), data.get("basis"))
    return R, L


def iter_simple(R: RootSystem) -> Iterable[int]:
    return range(R.rank + 1)
