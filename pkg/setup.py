"""Build script: compiles the optional Cython kernel extension.

If the extension cannot be built (no compiler, Cython missing), the
package installs anyway and falls back to the pure-Python kernels at
import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "kbounds._core",
                ["src/kbounds/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # noqa: BLE001 - any build failure means "pure mode"
    print(f"kbounds: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
