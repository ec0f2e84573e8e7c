"""Build hook: compile the optional exact-arithmetic core if Cython is present.

The package is fully functional without the extension; ``stressmatroid.exactla``
falls back to the pure-Python twin at import time.  Set STRESSMATROID_NO_EXT=1
to skip compilation even when Cython is installed.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("STRESSMATROID_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/stressmatroid/_exactla.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
