"""Build script.

The compiled kernel module is optional: if Cython or a C compiler is
unavailable, the build falls back to the pure-Python implementation in
cubichecke._laurent and everything still works (slower).
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "cubichecke._kernels",
                ["src/cubichecke/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover
    sys.stderr.write(f"cubichecke: skipping compiled kernels ({exc})\n")
    ext_modules = []

setup(ext_modules=ext_modules)
