"""Build script: compiles the optional clique kernel when Cython is available.

The package is fully functional without the extension; ``qgc._kernels``
falls back to a pure-Python implementation at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "qgc._kernels._fast",
                ["src/qgc/_kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
