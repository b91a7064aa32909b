"""Build the optional compiled sweep kernel; the package runs pure-python without it."""
import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never fail the install over the C extension: there is a pure-python fallback."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            sys.stderr.write(f"warning: skipping compiled kernel ({exc})\n")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            sys.stderr.write(
                f"warning: {ext.name} failed to build ({exc}); "
                "falling back to the pure-python kernel\n"
            )


ext_modules = []
if not os.environ.get("SEMIGROUP_LD_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "semigroup_ld._speedups",
                    ["src/semigroup_ld/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        sys.stderr.write("warning: Cython unavailable; using the pure-python kernel\n")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
