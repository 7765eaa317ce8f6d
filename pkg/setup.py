"""Build script: compiles the confusion-count kernel when possible.

The compiled extension is an optimization, not a requirement. If Cython or
a C compiler is missing the install still succeeds and the package runs on
the pure-Python kernel. Set SEGSCORE_PURE=1 to skip compilation outright.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

_BUILD_ERRORS = (CCompilerError, ExecError, PlatformError, FileNotFoundError)


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except _BUILD_ERRORS as exc:
            _warn_skipped(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except _BUILD_ERRORS as exc:
            _warn_skipped(exc)


def _warn_skipped(exc):
    print(f"warning: compiled kernel not built ({exc}); "
          "segscore will use the pure-Python fallback")


def extensions():
    if os.environ.get("SEGSCORE_PURE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        _warn_skipped("Cython not installed")
        return []
    ext = Extension("segscore._counts", ["src/segscore/_counts.pyx"])
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
