"""Build script for the optional compiled kernels.

The package is pure Python plus one Cython extension holding the enumeration
hot loops (Ising configuration sums, graph-automorphism scans). If the
extension cannot be built, installation still succeeds and the numpy fallback
in ``symbreak._kernels`` is used instead.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            warnings.warn(f"compiled kernels skipped ({exc}); using numpy fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            warnings.warn(f"compiled kernels skipped ({exc}); using numpy fallback")


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - build env without cython
        return []
    ext = Extension(
        "symbreak._kernels._ckernels",
        sources=["src/symbreak/_kernels/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
