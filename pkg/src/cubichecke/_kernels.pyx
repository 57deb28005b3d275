# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels for sparse Laurent data.

Behaviourally identical to cubichecke._laurent (the pure-Python twin).
Data stays in plain Python dicts with tuple keys and int values; the win
comes from typed loops and avoiding interpreter dispatch in the inner
term-by-term products, which dominate table construction.
"""


def poly_add(dict x, dict y):
    cdef dict out = dict(x)
    cdef object k, v, s
    for k, v in y.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def poly_neg(dict x):
    cdef dict out = {}
    cdef object k, v
    for k, v in x.items():
        out[k] = -v
    return out


def poly_add_inplace(dict acc, dict x):
    cdef object k, v, s
    for k, v in x.items():
        s = acc.get(k, 0) + v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def poly_mul(dict x, dict y):
    cdef dict out = {}
    cdef tuple xk, yk, k
    cdef object xv, yv, s
    if not x or not y:
        return out
    for xk, xv in x.items():
        for yk, yv in y.items():
            k = (
                <object> xk[0] + <object> yk[0],
                <object> xk[1] + <object> yk[1],
                <object> xk[2] + <object> yk[2],
            )
            s = out.get(k, 0) + xv * yv
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def poly_addmul_inplace(dict acc, dict x, dict y):
    cdef tuple xk, yk, k
    cdef object xv, yv, s
    if not x or not y:
        return
    for xk, xv in x.items():
        for yk, yv in y.items():
            k = (
                <object> xk[0] + <object> yk[0],
                <object> xk[1] + <object> yk[1],
                <object> xk[2] + <object> yk[2],
            )
            s = acc.get(k, 0) + xv * yv
            if s:
                acc[k] = s
            else:
                del acc[k]


def vec_axpy_inplace(dict accvec, dict coeff, dict vec):
    cdef object i
    cdef dict p, cur
    if not coeff or not vec:
        return
    for i, p in vec.items():
        cur = accvec.get(i)
        if cur is None:
            cur = {}
            accvec[i] = cur
        poly_addmul_inplace(cur, coeff, p)
        if not cur:
            del accvec[i]
