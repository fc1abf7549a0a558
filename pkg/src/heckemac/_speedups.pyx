# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse kernels; same contract as ``_pykernels``."""

IMPLEMENTATION = "cython"


cdef inline tuple _addt(tuple a, tuple b):
    cdef Py_ssize_t k, n = len(a)
    cdef list out = [None] * n
    for k in range(n):
        out[k] = <long>a[k] + <long>b[k]
    return tuple(out)


cdef inline tuple _axpy(tuple a, long s, tuple b):
    cdef Py_ssize_t k, n = len(a)
    cdef list out = [None] * n
    for k in range(n):
        out[k] = <long>a[k] + s * <long>b[k]
    return tuple(out)


cpdef dict p_iadd(dict acc, dict a, int sign=1):
    cdef object e, c, v
    for e, c in a.items():
        v = acc.get(e, 0) + sign * c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)
    return acc


cpdef dict p_add(dict a, dict b):
    return p_iadd(dict(a), b)


cpdef dict p_sub(dict a, dict b):
    return p_iadd(dict(a), b, -1)


cpdef dict p_iadd_mul(dict acc, dict a, dict b, int sign=1):
    cdef tuple ea, eb, e
    cdef object ca, cb, v
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _addt(ea, eb)
            v = acc.get(e, 0) + sign * ca * cb
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
    return acc


cpdef dict p_mul(dict a, dict b):
    cdef tuple ea, eb
    if len(a) == 1 and len(b) == 1:
        for ea in a:
            for eb in b:
                return {_addt(ea, eb): a[ea] * b[eb]}
    return p_iadd_mul({}, a, b)


cpdef g_iadd_term(dict acc, tuple w, dict c, int sign=1):
    cdef object cur = acc.get(w)
    if cur is None:
        if sign == 1:
            acc[w] = dict(c)
        else:
            acc[w] = {e: -v for e, v in c.items()}
        return
    p_iadd(<dict>cur, c, sign)
    if not cur:
        del acc[w]


cpdef dict g_iadd(dict acc, dict f, int sign=1):
    for w, c in f.items():
        g_iadd_term(acc, w, c, sign)
    return acc


cpdef dict g_scale(dict f, dict s):
    cdef dict out = {}
    cdef dict v
    for w, c in f.items():
        v = p_mul(c, s)
        if v:
            out[w] = v
    return out


cpdef dict g_shift(dict f, tuple mu):
    return {_addt(w, mu): dict(c) for w, c in f.items()}


cpdef dict g_mul(dict f, dict g):
    cdef dict out = {}
    cdef tuple w
    cdef object cur
    for w1, c1 in f.items():
        for w2, c2 in g.items():
            w = _addt(w1, w2)
            cur = out.get(w)
            if cur is None:
                cur = out[w] = {}
            p_iadd_mul(<dict>cur, c1, c2)
            if not cur:
                del out[w]
    return out


cdef void _string(dict acc, tuple lam, long m, tuple alpha, long step, dict c):
    cdef long k, cnt
    cdef tuple w = lam
    if m > 0:
        cnt = m // step
        for k in range(cnt):
            g_iadd_term(acc, w, c)
            w = _axpy(w, -step, alpha)
    elif m < 0:
        cnt = (-m) // step
        for k in range(cnt):
            w = _axpy(w, step, alpha)
            g_iadd_term(acc, w, c, -1)


cpdef dict dl_apply(dict f, int i, tuple alpha, dict t, dict tm1):
    cdef dict out = {}
    cdef tuple lam, r
    cdef long m
    for lam, c in f.items():
        m = lam[i]
        r = _axpy(lam, -m, alpha) if m else lam
        g_iadd_term(out, r, p_mul(t, c))
        if m:
            _string(out, lam, m, alpha, 1, p_mul(tm1, c))
    return out


cpdef dict dl_apply_double(dict f, int i, tuple alpha, dict t, dict tm1, dict cc):
    cdef dict out = {}
    cdef tuple lam, r, low
    cdef long m
    for lam, c in f.items():
        m = lam[i]
        if m % 2:
            raise ArithmeticError(f"odd pairing {m} at weight {lam}")
        r = _axpy(lam, -m, alpha) if m else lam
        g_iadd_term(out, r, p_mul(t, c))
        if m:
            _string(out, lam, m, alpha, 2, p_mul(tm1, c))
            low = _axpy(lam, -1, alpha)
            _string(out, low, m, alpha, 2, p_mul(cc, c))
    return out
