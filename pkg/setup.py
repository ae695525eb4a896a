"""Build script for the optional compiled kernels.

The package works without the extension: movingdd._kernels falls back to
numpy implementations when the compiled module is absent. A failed
extension build therefore degrades the install instead of breaking it.
"""

import sys

from setuptools import Extension, setup


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        print("movingdd: cython/numpy unavailable, skipping compiled kernels",
              file=sys.stderr)
        return []
    ext = Extension(
        "movingdd._kernels._speedups",
        ["src/movingdd/_kernels/_speedups.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
