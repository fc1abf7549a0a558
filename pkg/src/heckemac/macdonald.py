"""Nonsymmetric Macdonald polynomials in the limit q -> infinity.

``E(ctx, lam)`` is computed by the recursion
``T_{w_lam} (j_tilde e^{tilde}) = j_lam E_lam`` where ``tilde`` is the
minuscule weight in the orbit of ``lam`` and ``w_lam`` the minimal element
carrying it to ``lam``.  Intermediate products are cached per context.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .coeffs import GroupAlgebraElement, Namespace, ParamScalar, string_quotient
from .hecke import HeckeContext

__all__ = [
    "mono_power", "xi", "t_power", "normalizer", "E", "U", "orbit_recursion",
    "demazure", "demazure_limit", "limit_t_infinity", "LimitError",
]


class LimitError(ArithmeticError):
    """A coefficient grows without bound as all parameters tend to infinity."""


def mono_power(m: ParamScalar, q: Fraction | int) -> ParamScalar:
    """``m ** q`` for a monic monomial and rational ``q``."""
    (e, c), = m.terms.items()
    if c != 1:
        raise ValueError("fractional power of a non-monic monomial")
    out = []
    for x in e:
        v = Fraction(x) * q
        if v.denominator != 1:
            raise ValueError(f"exponent {v} / {m.ns.denom} leaves the namespace grid")
        out.append(int(v))
    return ParamScalar(m.ns, {tuple(out): 1})


def xi(ctx: HeckeContext, word: Sequence[int]) -> ParamScalar:
    b = ctx.binding
    t0 = b["t01"].sqrt() * b["t03"].sqrt()
    out = ParamScalar.const(ctx.ns)
    for i in word:
        out = out * (t0 if i == 0 else b[f"t{i}"])
    return out


def t_power(ctx: HeckeContext, lam: Sequence[int]) -> ParamScalar:
    """``(t_n^* t_n)^{(lam_-, w_n)/2} prod_{i<n} t_i^{(lam_-, w_i)}`` with ``w_i`` fundamental coweights."""
    R, b, n = ctx.R, ctx.binding, ctx.n
    minus, _ = R.to_antidominant(lam)
    tn_star = b[f"t{n}"] if R.reduced else b["t01"]
    out = mono_power(tn_star * b[f"t{n}"], R.coweight_pair(minus, n) / 2)
    for i in range(1, n):
        out = out * mono_power(b[f"t{i}"], R.coweight_pair(minus, i))
    return out


def normalizer(ctx: HeckeContext, lam: Sequence[int]) -> ParamScalar:
    """``j_lam = xi(w_lam) t^(lam)``."""
    d = ctx.W.orbit_data(lam)
    return xi(ctx, d.word) * t_power(ctx, d.lam)


def orbit_recursion(ctx: HeckeContext, lam: Sequence[int], base, cache: dict) -> GroupAlgebraElement:
    """``T_{w_lam} base(tilde)``, memoised along the reduced word of ``w_lam``.

    Uses ``w_{r_i lam} = r_i w_lam`` so every intermediate weight of the
    greedy walk to the alcove is cached too.
    """
    d = ctx.W.orbit_data(lam)
    hit = cache.get(d.lam)
    if hit is not None:
        return hit
    chain = [d.lam]
    x = d.lam
    for i in d.word:
        x = ctx.W.reflect(i, x)
        if x in cache:
            break
        chain.append(x)
    if x not in cache:
        cache[x] = base(x)
    cur = cache[x]
    start = len(chain) - 2 if chain[-1] == x else len(chain) - 1
    for k in range(start, -1, -1):
        cur = ctx.T(d.word[k], cur)
        cache[chain[k]] = cur
    return cache[d.lam]


def U(ctx: HeckeContext, lam: Sequence[int]) -> GroupAlgebraElement:
    """``j_lam E_lam``."""
    cache = ctx.__dict__.setdefault("_u_cache", {})
    return orbit_recursion(ctx, lam, lambda x: ctx.e(x, t_power(ctx, x)), cache)


def E(ctx: HeckeContext, lam: Sequence[int]) -> GroupAlgebraElement:
    """Nonsymmetric Macdonald polynomial ``E_lam(q = infinity, t)``."""
    cache = ctx.__dict__.setdefault("_e_cache", {})
    lam = ctx.L.check(lam)
    if lam not in cache:
        cache[lam] = U(ctx, lam).scale(normalizer(ctx, lam).inverse())
    return cache[lam]


# -- classical limits ----------------------------------------------------------

def limit_t_infinity(f: GroupAlgebraElement, lead: Sequence[int] | None = None) -> dict:
    """Send every parameter to one variable ``s`` and take ``s -> infinity``.

    With ``lead`` the element is first divided by its (monomial) coefficient
    of ``e^lead``.  Returns ``{weight: Fraction}``.
    """
    ns = Namespace(("s",), f.ns.denom)
    s = ParamScalar.mono(ns, {"s": 1})
    g = f.map_coefficients(lambda c: c.substitute({k: s for k in f.ns.names}, ns), ns)
    if lead is not None:
        g = g.scale(g.coefficient(lead).inverse())
    out = {}
    for w, c in g.items():
        for (e,), v in c.terms.items():
            if e > 0:
                raise LimitError(f"coefficient of e^{list(w)} has positive degree {Fraction(e, ns.denom)}")
            if e == 0:
                out[w] = Fraction(v)
    return out


def _reflect_all(R, i: int, f: GroupAlgebraElement) -> GroupAlgebraElement:
    return GroupAlgebraElement.from_terms(f.ns, {R.reflect(i, w): c for w, c in f.items()})


def demazure(R, i: int, f: GroupAlgebraElement) -> GroupAlgebraElement:
    """``(f - e^{-a_i} r_i f) / (1 - e^{-a_i})``."""
    alpha = R.simple[i - 1]
    num = f - _reflect_all(R, i, f).shift(tuple(-a for a in alpha))
    return string_quotient(num, alpha, 1)


def demazure_limit(R, lam: Sequence[int]) -> dict:
    """Demazure character ``pi_u e^{lam_+}`` with ``u`` minimal, ``u lam_+ = lam``."""
    plus, word = R.to_dominant(lam)
    ns = Namespace(())
    f = GroupAlgebraElement.e(ns, plus)
    for i in reversed(word):
        f = demazure(R, i, f)
    return {w: Fraction(ParamScalar(ns, c).terms.get((), 0)) for w, c in f.terms.items()}
