"""Builds the compiled kernel extension.

The package works without it (a pure-Python twin is selected at import
time), so a failed build only costs speed.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "planar_arena._kernels_cy",
                ["src/planar_arena/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": 3},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"cython unavailable ({exc}); building pure-python only")

setup(ext_modules=ext_modules)
