"""Build script: compiles the enumeration kernel when Cython is present.

The package works without the extension (a pure-Python twin is selected at
import time), so a missing compiler or Cython only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("effectalg._tablesearch", ["src/effectalg/_tablesearch.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
