import os

from setuptools import setup

ext_modules = []
if os.environ.get("HYPERCIRCLE_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hypercircle/_kernel_c.pyx"], language_level=3
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
