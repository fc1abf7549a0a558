"""Named invariant suites shared by ``heckemac verify`` and the test-suite.

Every check returns ``(ok, detail)``; ``detail`` names the first failure.
"""

from __future__ import annotations

import random
from collections import deque
from fractions import Fraction

from .coeffs import Namespace, ParamScalar
from .hecke import HeckeContext, generic_context
from .macdonald import E, demazure_limit, limit_t_infinity
from .rootdata import Lattice, RootSystem, orbit_table
from .satake import (
    SatakeData, delta_P, satake_E, split_data, tau_of, route_residual, vol_ItlamK,
)
from .weyl import weyl_group

Result = tuple[bool, str]


def at_one(f) -> dict:
    """All parameters set to 1."""
    ns = Namespace(())
    one = ParamScalar.const(ns)
    g = f.map_coefficients(lambda c: c.substitute({k: one for k in f.ns.names}, ns), ns)
    return {w: Fraction(c.terms.get((), 0)) for w, c in g.items()}


def hecke_relations(ctx: HeckeContext, radius: int = 3, samples: int = 200, seed: int = 0) -> Result:
    """Quadratic, braid and Bernstein-Lusztig relations on random ``e^lam``."""
    rng = random.Random(seed)
    pts = ctx.L.box(radius)
    chosen = [rng.choice(pts) for _ in range(samples)]
    n = ctx.n
    for lam in chosen:
        f = ctx.e(lam)
        kind = rng.randrange(3)
        if kind == 0:
            i = rng.randrange(n + 1)
            if not ctx.check_quadratic(i, f):
                return False, f"quadratic T{i} at {list(lam)}"
        elif kind == 1:
            i, j = sorted(rng.sample(range(n + 1), 2)) if n else (0, 0)
            if i != j and not ctx.check_braid(i, j, f):
                return False, f"braid T{i},T{j} at {list(lam)}"
        else:
            i = rng.randrange(1, n + 1)
            mu = rng.choice(pts)
            if ctx.bl_defect(i, mu, f):
                return False, f"Bernstein-Lusztig T{i},X{list(mu)} at {list(lam)}"
    # every generator's quadratic relation at least once
    for i in range(n + 1):
        for lam in pts[:: max(1, len(pts) // 7)]:
            if not ctx.check_quadratic(i, ctx.e(lam)):
                return False, f"quadratic T{i} at {list(lam)}"
    return True, f"{samples} random instances"


def bl_sweep(ctx: HeckeContext, radius: int = 3) -> Result:
    """Both Bernstein-Lusztig displays for every ``T_i``, ``X_{+-b}`` (``b`` a lattice basis vector), on the box."""
    shifts = [tuple(b) for b in ctx.L.basis] + [tuple(-x for x in b) for b in ctx.L.basis]
    pts = ctx.L.box(radius)
    for i in range(1, ctx.n + 1):
        for mu in shifts:
            for lam in pts:
                if ctx.bl_defect(i, mu, ctx.e(lam)):
                    return False, f"Bernstein-Lusztig T{i},X{list(mu)} at {list(lam)}"
    return True, f"{ctx.n * len(shifts) * len(pts)} instances"


def grid(ctx: HeckeContext, radius: int, max_len: int = 10) -> list:
    return [lam for lam in ctx.L.box(radius) if len(ctx.W.orbit_data(lam).word) <= max_len]


def length_grid(ctx: HeckeContext, max_len: int = 10) -> list:
    """All lattice weights with ``l(w_lam) <= max_len``, grown shell by shell.

    Stops after two consecutive nonempty shells without a hit.
    """
    out, r, misses = [], 0, 0
    while misses < 2:
        shell = [x for x in ctx.L.box(r) if max(map(abs, x), default=0) == r]
        hit = [x for x in shell if len(ctx.W.orbit_data(x).word) <= max_len]
        if shell:
            misses = 0 if hit else misses + 1
        out += hit
        r += 1
    return sorted(out)


def base_cases(ctx: HeckeContext) -> Result:
    zero = (0,) * ctx.n
    if E(ctx, zero) != ctx.e(zero):
        return False, "E_0 != 1"
    for nu in ctx.W.minuscule_set():
        if E(ctx, nu) != ctx.e(nu):
            return False, f"E_{list(nu)} != e^nu"
    return True, "E_0 = 1 and E_nu = e^nu"


def monicity(ctx: HeckeContext, lams) -> Result:
    one = ParamScalar.const(ctx.ns)
    for lam in lams:
        c = E(ctx, lam).coefficient(lam)
        if c != one:
            return False, f"leading coefficient {c} at {list(lam)}"
    return True, f"{len(lams)} weights"


def t02_free(ctx: HeckeContext, lams) -> Result:
    if ctx.R.reduced:
        return True, "t02 is identified with t0 for reduced systems"
    for lam in lams:
        for _, c in E(ctx, lam).items():
            if c.mentions("t02"):
                return False, f"t02 occurs in E_{list(lam)}"
    return True, f"{len(lams)} weights"


def collapse_one(ctx: HeckeContext, lams) -> Result:
    for lam in lams:
        if at_one(E(ctx, lam)) != {tuple(lam): 1}:
            return False, f"E_{list(lam)} at t=1 is not e^lam"
    return True, f"{len(lams)} weights"


def collapse_demazure(ctx: HeckeContext, lams) -> Result:
    for lam in lams:
        if limit_t_infinity(E(ctx, lam), lam) != demazure_limit(ctx.R, lam):
            return False, f"t -> infinity limit differs from Demazure character at {list(lam)}"
    return True, f"{len(lams)} weights"


def two_route_identity(R, L, data: SatakeData, lams) -> Result:
    for lam in lams:
        r = route_residual(R, L, data, lam)
        if r:
            return False, f"residual {r} at {list(lam)}"
    return True, f"{len(lams)} weights"


def minuscule_satake(R, L, data: SatakeData) -> Result:
    for nu in weyl_group(R, L).minuscule_set():
        f = satake_E(R, L, data, nu)
        want = delta_P(R, L, data, nu).sqrt().inverse()
        if len(f) != 1 or f.coefficient(nu) != want:
            return False, f"Satake element of minuscule {list(nu)} is {f}"
    return True, "single term delta^{-1/2} e^nu"


def satake_step(R, L, data: SatakeData, lams) -> Result:
    """``T_i`` moves Satake elements up along length-increasing steps."""
    from .satake import _tau_ctx

    ctx = _tau_ctx(R, L.basis, L.label, data)
    W = ctx.W
    count = 0
    for lam in lams:
        lw = len(W.orbit_data(lam).word)
        for i in range(R.rank + 1):
            mu = W.reflect(i, lam)
            if mu == lam or len(W.orbit_data(mu).word) <= lw:
                continue
            count += 1
            if ctx.T(i, satake_E(R, L, data, lam)) != satake_E(R, L, data, mu):
                return False, f"T{i} on {list(lam)}"
    return True, f"{count} steps"


def poincare(R, L, data: SatakeData | None = None) -> ParamScalar:
    data = data or split_data(R)
    return vol_ItlamK(R, L, data, (0,) * R.rank)


def vol_at_one(R, L, data: SatakeData) -> Result:
    v = vol_ItlamK(R, L, data, (0,) * R.rank)
    size = len(weyl_group(R, L).finite_elements())
    got = sum(Fraction(c) for c in v.terms.values())
    return got == size, f"vol(K) at tau=1 is {got}, |W| = {size}"


def delta_conjugation(R, L, data: SatakeData, radius: int = 3) -> Result:
    """``tau(w t_lam w^{-1}) = tau(t_{w lam}) = delta_P(t_lam)`` for dominant ``lam``."""
    W = weyl_group(R, L)
    fin = W.finite_elements()
    for lam in L.box(radius):
        if not R.is_dominant(lam):
            continue
        t = W.translation(lam)
        vals = {tau_of(R, L, data, w * t * W.inverse(w)) for w in fin}
        if len(vals) != 1 or vals.pop() != delta_P(R, L, data, lam):
            return False, f"conjugates of t_{list(lam)} differ"
        for w in fin:
            if tau_of(R, L, data, W.translation(w.linear(lam))) != delta_P(R, L, data, lam):
                return False, f"tau(t_wlam) != delta_P(t_lam) at {list(lam)}"
    return True, "dominant weights in the box"


def length_additivity(R, L, pairs: int = 500, radius: int = 3, seed: int = 1) -> Result:
    W = weyl_group(R, L)
    rng = random.Random(seed)
    anti = [x for x in L.box(radius) if R.is_antidominant(x)]
    for _ in range(pairs):
        a, b = rng.choice(anti), rng.choice(anti)
        s = tuple(x + y for x, y in zip(a, b))
        if W.length(W.translation(s)) != W.length(W.translation(a)) + W.length(W.translation(b)):
            return False, f"l(t_{list(s)}) not additive"
    return True, f"{pairs} antidominant pairs"


def delta_homomorphism(R, L, data: SatakeData, pairs: int = 100, seed: int = 2) -> Result:
    rng = random.Random(seed)
    pts = L.box(2)
    for _ in range(pairs):
        a, b = rng.choice(pts), rng.choice(pts)
        s = tuple(x + y for x, y in zip(a, b))
        if delta_P(R, L, data, s) != delta_P(R, L, data, a) * delta_P(R, L, data, b):
            return False, f"delta_P({list(s)})"
    return True, f"{pairs} pairs"


def bfs_lengths(R, L, max_len: int) -> dict:
    """Minimal word length of every element within ``max_len`` generators (incl. Omega)."""
    W = weyl_group(R, L)
    omegas = [W.omega(nu) for nu in W.minuscule_set()]
    seen = {om: 0 for om in omegas}
    queue = deque(omegas)
    while queue:
        w = queue.popleft()
        d = seen[w]
        if d == max_len:
            continue
        for i in range(R.rank + 1):
            u = w * W.simple(i)
            if u not in seen:
                seen[u] = d + 1
                queue.append(u)
    return seen


def length_oracle(R, L, max_len: int = 6) -> Result:
    W = weyl_group(R, L)
    table = bfs_lengths(R, L, max_len)
    for w, d in table.items():
        if W.length(w) != d:
            return False, f"length {W.length(w)} vs word length {d} for {W.format_word(w)}"
    return True, f"{len(table)} elements"


def parity(R, L) -> Result:
    """Nonreduced types: every lattice weight pairs evenly with ``alpha_n^vee``."""
    if R.reduced:
        return True, "reduced"
    bad = [b for b in L.basis if b[-1] % 2]
    return not bad, "lattice basis pairs evenly with alpha_n^vee"


def orbit_count(R, expected: int | None = None) -> Result:
    k = len(orbit_table(R).orbits)
    if expected is None:
        return True, f"{k} orbits"
    return k == expected, f"{k} orbits (expected {expected})"


def run_suite(R: RootSystem, L: Lattice, data: SatakeData | None = None, radius: int = 2,
              ctx: HeckeContext | None = None, samples: int = 200) -> dict[str, Result]:
    """Run every named invariant on one root datum."""
    ctx = ctx or generic_context(R, L)
    data = data or split_data(R)
    lams = grid(ctx, radius)
    out = {
        "hecke_relations": hecke_relations(ctx, samples=samples),
        "bernstein_lusztig": bl_sweep(ctx, radius),
        "base_cases": base_cases(ctx),
        "monicity": monicity(ctx, lams),
        "t02_free": t02_free(ctx, lams),
        "collapse_t_one": collapse_one(ctx, lams),
        "collapse_demazure": collapse_demazure(ctx, lams),
        "satake_identity": two_route_identity(R, L, data, lams),
        "minuscule_satake": minuscule_satake(R, L, data),
        "satake_step": satake_step(R, L, data, lams),
        "volume_at_one": vol_at_one(R, L, data),
        "delta_conjugation": delta_conjugation(R, L, data, radius=min(radius + 1, 3)),
        "length_additivity": length_additivity(R, L, pairs=100),
        "parity": parity(R, L),
        "orbits": orbit_count(R, 4 if (not R.reduced and R.rank == 1) else None),
    }
    if R.rank <= 2:
        out["length_oracle"] = length_oracle(R, L, 4)
    return out
