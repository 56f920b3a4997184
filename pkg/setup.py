"""Build script for the optional compiled subset-sampling kernel.

The package works without the extension (a pure-Python kernel with the
identical random stream is selected at import time), so the build degrades
gracefully when Cython or a C compiler is unavailable.
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
                "alphaindex._kernels._subset_ext",
                ["src/alphaindex/_kernels/_subset_ext.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
