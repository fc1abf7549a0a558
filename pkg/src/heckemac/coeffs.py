"""Exact Laurent-polynomial scalars and the sparse group algebra of a lattice.

A :class:`ParamScalar` is a Laurent polynomial over the rationals in
fractional powers of named parameters.  Exponents are stored as integers
counting ``1/denom`` powers, where ``denom`` belongs to the
:class:`Namespace`; the default ``denom = 2`` gives half-powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import kernels as K

__all__ = [
    "Namespace", "ParamScalar", "GroupAlgebraElement", "IncompatibleError",
    "DivisibilityError", "string_quotient",
]


class IncompatibleError(ValueError):
    """Operands live in different parameter namespaces."""


class DivisibilityError(ArithmeticError):
    """An exact division left a nonzero remainder."""


@dataclass(frozen=True)
class Namespace:
    names: tuple[str, ...]
    denom: int = 2

    @property
    def zero_exp(self) -> tuple[int, ...]:
        return (0,) * len(self.names)

    def exp(self, powers: Mapping[str, Fraction | int]) -> tuple[int, ...]:
        out = [0] * len(self.names)
        for name, p in powers.items():
            v = Fraction(p) * self.denom
            if v.denominator != 1:
                raise ValueError(f"exponent {p} of {name} not a multiple of 1/{self.denom}")
            out[self.names.index(name)] += int(v)
        return tuple(out)


def _num(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class ParamScalar:
    """Sparse Laurent polynomial ``{exponent vector: rational}``."""

    __slots__ = ("ns", "terms")

    def __init__(self, ns: Namespace, terms: Mapping | None = None):
        self.ns = ns
        self.terms = {e: _num(c) for e, c in (terms or {}).items() if c}

    # constructors
    @classmethod
    def const(cls, ns: Namespace, c=1) -> "ParamScalar":
        return cls(ns, {ns.zero_exp: c})

    @classmethod
    def mono(cls, ns: Namespace, powers: Mapping[str, Fraction | int] | None = None, coeff=1):
        return cls(ns, {ns.exp(powers or {}): coeff})

    def _check(self, other: "ParamScalar") -> None:
        if self.ns != other.ns:
            raise IncompatibleError(f"namespace mismatch: {self.ns} vs {other.ns}")

    def _lift(self, other) -> "ParamScalar":
        if isinstance(other, ParamScalar):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return ParamScalar.const(self.ns, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ParamScalar(self.ns, K.p_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar(self.ns, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ParamScalar(self.ns, K.p_sub(self.terms, other.terms))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ParamScalar(self.ns, K.p_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamScalar.const(self.ns, other)
        if not isinstance(other, ParamScalar):
            return NotImplemented
        return self.ns == other.ns and self.terms == other.terms

    def __hash__(self):
        return hash((self.ns, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "ParamScalar":
        if not self.is_monomial():
            raise DivisibilityError(f"{self} is not invertible (not a monomial)")
        (e, c), = self.terms.items()
        return ParamScalar(self.ns, {tuple(-x for x in e): Fraction(1) / c})

    def __truediv__(self, other):
        other = self._lift(other)
        return self * other.inverse()

    def sqrt(self) -> "ParamScalar":
        """Square root of a monomial with coefficient 1."""
        (e, c), = self.terms.items()
        if c != 1 or any(x % 2 for x in e):
            raise ValueError(f"cannot take square root of {self}")
        return ParamScalar(self.ns, {tuple(x // 2 for x in e): 1})

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ParamScalar.const(self.ns)
        for _ in range(k):
            out = out * self
        return out

    def exponents(self, name: str) -> set[Fraction]:
        j = self.ns.names.index(name)
        return {Fraction(e[j], self.ns.denom) for e in self.terms}

    def mentions(self, name: str) -> bool:
        if name not in self.ns.names:
            return False
        j = self.ns.names.index(name)
        return any(e[j] for e in self.terms)

    def substitute(self, images: Mapping[str, "ParamScalar"], target: Namespace) -> "ParamScalar":
        """Ring map sending each symbol ``s`` to the monomial ``images[s]``.

        Fractional powers are taken on the image monomial's exponents.
        """
        img = []
        for name in self.ns.names:
            m = images[name]
            (e, c), = m.terms.items()
            if c != 1:
                raise ValueError("images must be monic monomials")
            img.append(e)
        out: dict = {}
        d = self.ns.denom
        for e, c in self.terms.items():
            new = [0] * len(target.names)
            for x, ie in zip(e, img):
                if x:
                    for k, y in enumerate(ie):
                        v = x * y
                        if v % d:
                            raise ValueError("substituted exponent leaves the namespace grid")
                        new[k] += v // d
            key = tuple(new)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return ParamScalar(target, out)

    def evaluate(self, values: Mapping[str, float]) -> float:
        total = 0.0
        d = self.ns.denom
        for e, c in self.terms.items():
            term = float(c)
            for name, x in zip(self.ns.names, e):
                if x:
                    term *= float(values[name]) ** (x / d)
            total += term
        return total

    # serialization
    def to_json(self) -> list[dict]:
        out = []
        for e, c in sorted(self.terms.items()):
            c = Fraction(c)
            q2 = {}
            for name, x in zip(self.ns.names, e):
                if x:
                    h = Fraction(2 * x, self.ns.denom)
                    q2[name] = h.numerator if h.denominator == 1 else str(h)
            out.append({"q2exp": q2, "num": c.numerator, "den": c.denominator})
        return out

    @classmethod
    def from_json(cls, ns: Namespace, data: Iterable[dict]) -> "ParamScalar":
        terms: dict = {}
        for item in data:
            powers = {k: Fraction(v) / 2 for k, v in item["q2exp"].items()}
            e = ns.exp(powers)
            terms[e] = terms.get(e, 0) + Fraction(item["num"], item["den"])
        return cls(ns, terms)

    def __repr__(self):
        return f"ParamScalar({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mon = "*".join(
                f"{n}^{Fraction(x, self.ns.denom)}" if Fraction(x, self.ns.denom) != 1 else n
                for n, x in zip(self.ns.names, e) if x
            )
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


class GroupAlgebraElement:
    """Finite sum ``sum_lam c_lam e^lam`` with :class:`ParamScalar` coefficients.

    Weights are integer tuples in fundamental-weight coordinates.
    """

    __slots__ = ("ns", "terms")

    def __init__(self, ns: Namespace, terms: Mapping | None = None):
        self.ns = ns
        self.terms = {w: dict(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, ns: Namespace, terms: dict) -> "GroupAlgebraElement":
        obj = cls.__new__(cls)
        obj.ns = ns
        obj.terms = terms
        return obj

    @classmethod
    def e(cls, ns: Namespace, weight, coeff: ParamScalar | int | Fraction = 1):
        if not isinstance(coeff, ParamScalar):
            coeff = ParamScalar.const(ns, coeff)
        return cls(ns, {tuple(weight): coeff.terms})

    @classmethod
    def from_terms(cls, ns: Namespace, items: Mapping) -> "GroupAlgebraElement":
        out = {}
        for w, c in items.items():
            if not isinstance(c, ParamScalar):
                c = ParamScalar.const(ns, c)
            if c.terms:
                out[tuple(w)] = dict(c.terms)
        return cls._raw(ns, out)

    def _check(self, other) -> None:
        if self.ns != other.ns:
            raise IncompatibleError(f"namespace mismatch: {self.ns} vs {other.ns}")

    def __add__(self, other: "GroupAlgebraElement"):
        self._check(other)
        return GroupAlgebraElement._raw(self.ns, K.g_iadd(self.copy().terms, other.terms))

    def __sub__(self, other: "GroupAlgebraElement"):
        self._check(other)
        return GroupAlgebraElement._raw(self.ns, K.g_iadd(self.copy().terms, other.terms, -1))

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "GroupAlgebraElement":
        if not isinstance(c, ParamScalar):
            c = ParamScalar.const(self.ns, c)
        elif c.ns != self.ns:
            raise IncompatibleError("namespace mismatch")
        return GroupAlgebraElement._raw(self.ns, K.g_scale(self.terms, c.terms))

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            self._check(other)
            return GroupAlgebraElement._raw(self.ns, K.g_mul(self.terms, other.terms))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def shift(self, mu) -> "GroupAlgebraElement":
        """Multiplication by ``e^mu``."""
        return GroupAlgebraElement._raw(self.ns, K.g_shift(self.terms, tuple(mu)))

    def copy(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement._raw(self.ns, {w: dict(c) for w, c in self.terms.items()})

    def coefficient(self, weight) -> ParamScalar:
        return ParamScalar(self.ns, self.terms.get(tuple(weight), {}))

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def items(self):
        for w in sorted(self.terms):
            yield w, ParamScalar(self.ns, self.terms[w])

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.ns == other.ns and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def map_coefficients(self, fn, ns: Namespace | None = None) -> "GroupAlgebraElement":
        ns = ns or self.ns
        out = {}
        for w, c in self.terms.items():
            v = fn(ParamScalar(self.ns, c))
            if v.terms:
                out[w] = v.terms
        return GroupAlgebraElement._raw(ns, out)

    def to_json(self) -> list[dict]:
        return [{"weight": list(w), "coeff": c.to_json()} for w, c in self.items()]

    @classmethod
    def from_json(cls, ns: Namespace, data) -> "GroupAlgebraElement":
        out = cls(ns)
        for item in data:
            c = ParamScalar.from_json(ns, item["coeff"])
            out = out + cls.e(ns, item["weight"], c)
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*e{list(w)}" for w, c in self.items())


def _coset_key(w: tuple, beta: tuple) -> tuple[tuple, int]:
    p = next(j for j, b in enumerate(beta) if b)
    k = w[p] // beta[p]
    return tuple(x - k * b for x, b in zip(w, beta)), k


def string_quotient(f: GroupAlgebraElement, alpha, order: int = 1) -> GroupAlgebraElement:
    """Exact ``g`` with ``(1 - e^{-order*alpha}) g = f``, by long division per coset."""
    beta = tuple(order * a for a in alpha)
    if not any(beta):
        raise ValueError("alpha must be nonzero")
    cosets: dict = {}
    for w, c in f.terms.items():
        base, k = _coset_key(w, beta)
        cosets.setdefault(base, {})[k] = c
    out: dict = {}
    for base, col in cosets.items():
        run: dict = {}
        ks = sorted(col, reverse=True)
        k = ks[0]
        lo = ks[-1]
        while k >= lo:
            if k in col:
                K.p_iadd(run, col[k])
            if run:
                out[tuple(x + k * b for x, b in zip(base, beta))] = dict(run)
            k -= 1
        if run:
            raise DivisibilityError(
                f"remainder {ParamScalar(f.ns, run)} in coset of {list(base)} along {list(beta)}"
            )
    return GroupAlgebraElement._raw(f.ns, out)
