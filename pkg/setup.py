import os

from setuptools import Extension, setup

# The compiled scan kernels are optional: without a working Cython/C
# toolchain the package falls back to the pure-Python backend at import.
ext_modules = []
if os.environ.get("KRONREP_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("kronrep._sweeps_c", ["src/kronrep/_sweeps_c.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
