"""Build hook for the optional compiled kernel extension.

The package is fully functional without the extension; a pure-Python
twin of every kernel ships alongside it and is selected at import time
when the compiled module is missing (or when FROBKIT_PURE_PYTHON=1).
"""

from setuptools import Extension, setup

extensions = []
try:
    import numpy
    from Cython.Build import cythonize

    ext = Extension(
        "frobkit.kernels._fast",
        ["src/frobkit/kernels/_fast.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        optional=True,  # a failed compile must not fail the install
    )
    extensions = cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    # No Cython available: install pure-Python only.
    extensions = []

setup(ext_modules=extensions)
