"""Build the optional compiled kernels.

The package works without them; ``heckemac.kernels`` falls back to the
pure-Python implementation when the extension is absent.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("HECKEMAC_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("heckemac._speedups", ["src/heckemac/_speedups.pyx"])],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )
    except ImportError:
        print("Cython not available; installing the pure-Python kernels only")

setup(ext_modules=ext_modules)
