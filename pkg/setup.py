"""Build hook for the optional compiled kernels.

Metadata lives in pyproject.toml.  When Cython is missing the package
still installs and runs on the pure-Python kernels.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("abvass._kernels", ["src/abvass/_kernels.pyx"])],
        language_level=3,
        quiet=True,
    )

setup(ext_modules=ext_modules)
