"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a numpy fallback is selected at
import time), so the extension is marked optional and any build failure is
non-fatal.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "shadowcodes._kernels._speedups",
                ["src/shadowcodes/_kernels/_speedups.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
