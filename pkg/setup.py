"""Build hook for the optional compiled kernels.

The package works without the extension (pure-Python fallback); skipping the
build when Cython is unavailable keeps source installs possible everywhere.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("cayleyviz._speedups", ["src/cayleyviz/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
