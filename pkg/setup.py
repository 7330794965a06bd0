"""Build script for the optional compiled bitset kernel.

The package is fully functional without the extension; when the build
fails (no compiler, no Cython) the pure-Python kernel is used instead.
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
                "galmine._kernel._bitcore",
                ["src/galmine/_kernel/_bitcore.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
