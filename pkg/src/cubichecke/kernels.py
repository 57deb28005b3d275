"""Kernel selection: compiled extension if available, pure Python otherwise.

Set CUBICHECKE_PURE=1 to force the pure-Python kernels regardless of
whether the compiled module built.
"""

import os

if os.environ.get("CUBICHECKE_PURE"):
    from cubichecke import _laurent as _impl

    BACKEND = "pure"
else:
    try:
        from cubichecke import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from cubichecke import _laurent as _impl

        BACKEND = "pure"

poly_add = _impl.poly_add
poly_neg = _impl.poly_neg
poly_add_inplace = _impl.poly_add_inplace
poly_mul = _impl.poly_mul
poly_addmul_inplace = _impl.poly_addmul_inplace
vec_axpy_inplace = _impl.vec_axpy_inplace
