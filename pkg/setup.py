"""Build script: compiles the Cython solver kernel when Cython and a C
toolchain are available, otherwise installs the pure-Python package (the
solver falls back to its Python backend at import time)."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/graphnim/_solver_core.pyx"],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception as exc:  # pragma: no cover - toolchain-dependent
    import sys

    print(f"graphnim: building without compiled solver core ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
