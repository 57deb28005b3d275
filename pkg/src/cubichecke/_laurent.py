"""Pure-Python arithmetic kernels for sparse Laurent data.

A polynomial is a plain dict mapping exponent triples (ea, eb, ec) to
nonzero Python ints; ea, eb >= 0 and ec may be negative.  A vector is a
plain dict mapping a basis index (int) to such a polynomial dict.  Zero
entries are always purged so that `not d` means d == 0.

The compiled twin of this module is cubichecke._kernels; both must stay
behaviourally identical (tests/test_kernels.py enforces this).
"""


def poly_add(x, y):
    """Return x + y as a new dict."""
    out = dict(x)
    for k, v in y.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def poly_neg(x):
    return {k: -v for k, v in x.items()}

def poly_add_inplace(acc, x):
    """acc += x, mutating acc."""
    for k, v in x.items():
        s = acc.get(k, 0) + v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def poly_mul(x, y):
    """Return x * y as a new dict."""
    if not x or not y:
        return {}
    out = {}
    for (xa, xb, xc), xv in x.items():
        for (ya, yb, yc), yv in y.items():
            k = (xa + ya, xb + yb, xc + yc)
            s = out.get(k, 0) + xv * yv
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def poly_addmul_inplace(acc, x, y):
    """acc += x * y, mutating acc."""
    if not x or not y:
        return
    for (xa, xb, xc), xv in x.items():
        for (ya, yb, yc), yv in y.items():
            k = (xa + ya, xb + yb, xc + yc)
            s = acc.get(k, 0) + xv * yv
            if s:
                acc[k] = s
            else:
                del acc[k]


def vec_axpy_inplace(accvec, coeff, vec):
    """accvec += coeff * vec for sparse vectors of polynomials.

    accvec and vec map index -> poly dict; coeff is a poly dict.
    Entries of accvec that become zero are removed.
    """
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
