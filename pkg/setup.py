"""Build script: compiles the optional Cython kernel extension.

The extension is an accelerator only; if the build fails (no compiler,
no Cython) the package installs anyway and falls back to the pure-numpy
kernels at import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the accelerator if possible, warn and continue otherwise."""

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # compiler missing, cythonize failure, ...
            print(
                f"WARNING: could not build {ext.name} ({exc!r}); "
                "qrineq will use the pure-Python kernels",
                file=sys.stderr,
            )


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        print(f"WARNING: {exc!r}; skipping compiled kernels", file=sys.stderr)
        return []
    return cythonize(
        [
            Extension(
                "qrineq._kernels._speedups",
                ["src/qrineq/_kernels/_speedups.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
