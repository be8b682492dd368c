import os

from setuptools import setup

ext_modules = []
if os.environ.get("F2HOPF_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/f2hopf/_kernels_c.pyx"],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        # The compiled kernels are an optimisation only; the pure-Python
        # fallback in f2hopf._kernels implements the same interface.
        ext_modules = []

setup(ext_modules=ext_modules)
