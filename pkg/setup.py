"""Build script: compiles the optional Cython kernel backend.

The extension is a performance twin of fgap.kernels._pure; if Cython or a C
compiler is unavailable the install proceeds with the pure-Python backend.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, otherwise install without it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print("warning: extension build skipped (%s); "
                  "using the pure-Python kernels" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print("warning: could not compile %s (%s); "
                  "using the pure-Python kernels" % (ext.name, exc))


ext_modules = []
if not os.environ.get("FGAP_NO_EXT"):
    try:
        from Cython.Build import cythonize
        ext_modules = cythonize(
            [Extension("fgap.kernels._ck", ["src/fgap/kernels/_ck.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
