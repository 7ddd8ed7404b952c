"""Build the optional compiled canonicalization kernel.

The package works without it (a numpy fallback is selected at import);
building just makes graph canonicalization and census enumeration faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("indexcoding._canon_fast", ["src/indexcoding/_canon_fast.pyx"])],
        language_level="3",
    )

setup(ext_modules=ext_modules)
