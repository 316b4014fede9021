import os

from setuptools import setup

# The compiled kernel is optional: when Cython or a C compiler is missing the
# package falls back to the pure Python twin in edsx._fallback.
ext_modules = []
if not os.environ.get("EDSX_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/edsx/_speedups.pyx"],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
