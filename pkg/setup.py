"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (fibl.kernels falls
back to the pure-Python twin at import time); building it just makes the
dense-polynomial hot loops several times faster.  Any build failure is
therefore non-fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "fibl._kernels_c",
                ["src/fibl/_kernels_c.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
