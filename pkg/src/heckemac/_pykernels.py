"""Pure-Python sparse kernels.

Scalars are dicts ``{exponent tuple: rational}``; group-algebra elements are
dicts ``{weight tuple: scalar dict}``.  Zero entries are never stored.  The
compiled ``_speedups`` module implements the same functions.
"""

IMPLEMENTATION = "python"


def p_iadd(acc, a, sign=1):
    """``acc += sign * a`` in place."""
    for e, c in a.items():
        v = acc.get(e, 0) + sign * c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)
    return acc


def p_add(a, b):
    return p_iadd(dict(a), b)


def p_sub(a, b):
    return p_iadd(dict(a), b, -1)


def p_iadd_mul(acc, a, b, sign=1):
    """``acc += sign * a * b`` in place."""
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            v = acc.get(e, 0) + sign * ca * cb
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
    return acc


def p_mul(a, b):
    if len(a) == 1 and len(b) == 1:
        (ea, ca), = a.items()
        (eb, cb), = b.items()
        return {tuple([x + y for x, y in zip(ea, eb)]): ca * cb}
    return p_iadd_mul({}, a, b)


def g_iadd_term(acc, w, c, sign=1):
    """``acc[w] += sign * c`` for a scalar dict ``c``."""
    cur = acc.get(w)
    if cur is None:
        if sign == 1:
            acc[w] = dict(c)
        else:
            acc[w] = {e: -v for e, v in c.items()}
        return
    p_iadd(cur, c, sign)
    if not cur:
        del acc[w]


def g_iadd(acc, f, sign=1):
    for w, c in f.items():
        g_iadd_term(acc, w, c, sign)
    return acc


def g_scale(f, s):
    out = {}
    for w, c in f.items():
        v = p_mul(c, s)
        if v:
            out[w] = v
    return out


def g_shift(f, mu):
    return {tuple([x + y for x, y in zip(w, mu)]): dict(c) for w, c in f.items()}


def g_mul(f, g):
    out = {}
    for w1, c1 in f.items():
        for w2, c2 in g.items():
            w = tuple([x + y for x, y in zip(w1, w2)])
            cur = out.get(w)
            if cur is None:
                cur = out[w] = {}
            p_iadd_mul(cur, c1, c2)
            if not cur:
                del out[w]
    return out


def _string(acc, lam, m, alpha, step, c):
    """Add ``c * (e^lam - e^{lam - m alpha}) / (1 - e^{-step*alpha})``.

    ``m`` is a multiple of ``step``; the quotient is the finite alpha-string.
    """
    if m > 0:
        w = list(lam)
        for _ in range(m // step):
            g_iadd_term(acc, tuple(w), c)
            for j in range(len(w)):
                w[j] -= step * alpha[j]
    elif m < 0:
        w = list(lam)
        for _ in range(-m // step):
            for j in range(len(w)):
                w[j] += step * alpha[j]
            g_iadd_term(acc, tuple(w), c, -1)


def dl_apply(f, i, alpha, t, tm1):
    """Demazure-Lusztig operator of a simple root with ``2 alpha`` not a root.

    ``T e^lam = t e^{r lam} + (t-1)(e^lam - e^{r lam})/(1 - e^{-alpha})`` where
    ``m = lam[i] = <lam, alpha^vee>``.
    """
    out = {}
    for lam, c in f.items():
        m = lam[i]
        if m:
            r = tuple([x - m * a for x, a in zip(lam, alpha)])
        else:
            r = lam
        g_iadd_term(out, r, p_mul(t, c))
        if m:
            _string(out, lam, m, alpha, 1, p_mul(tm1, c))
    return out


def dl_apply_double(f, i, alpha, t, tm1, cc):
    """Nonreduced variant dividing by ``1 - e^{-2 alpha}``.

    Numerator factor is ``(t - 1) + cc * e^{-alpha}``; ``lam[i]`` must be even.
    """
    out = {}
    for lam, c in f.items():
        m = lam[i]
        if m % 2:
            raise ArithmeticError(f"odd pairing {m} at weight {lam}")
        r = tuple([x - m * a for x, a in zip(lam, alpha)]) if m else lam
        g_iadd_term(out, r, p_mul(t, c))
        if m:
            _string(out, lam, m, alpha, 2, p_mul(tm1, c))
            low = tuple([x - a for x, a in zip(lam, alpha)])
            _string(out, low, m, alpha, 2, p_mul(cc, c))
    return out
