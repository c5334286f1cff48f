import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PARZON_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext = Extension(
            "parzon._kernels._fastcore",
            ["src/parzon/_kernels/_fastcore.pyx"],
            # -ffp-contract=off: no FMA contraction, so the compiled kernels
            # round exactly like the pure-Python fallback
            extra_compile_args=["-O3", "-ffp-contract=off"],
        )
        ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
