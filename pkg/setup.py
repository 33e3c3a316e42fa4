"""Build script: compiles the Cython search kernel when Cython is available.

The package works without the extension (a pure-Python kernel is selected at
import time), so cythonization failures only cost speed.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/sghom/_kernel_c.pyx"],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
