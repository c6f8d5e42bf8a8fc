"""Build the optional compiled kernel.

The package is pure Python plus one Cython extension for the hot series
arithmetic.  If Cython or a C toolchain is missing the extension is skipped
and the pure fallback in linesing._kernel._slow is used at import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"warning: compiled kernel skipped ({exc}); "
              "falling back to the pure Python backend", file=sys.stderr)


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("linesing._kernel._fast", ["src/linesing/_kernel/_fast.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
