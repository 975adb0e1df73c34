"""Build script: compiles the optional mod-p elimination kernel.

The package is fully functional without the extension (a numpy fallback
is selected at import time), so any failure here downgrades to a pure
build instead of aborting the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hfstrata.linalg._kernel",
                ["src/hfstrata/linalg/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception as exc:  # pragma: no cover - depends on build env
    print(f"hfstrata: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
