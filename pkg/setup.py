import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; the numpy kernels take over
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("PALIN_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "palin._ckernels",
                ["src/palin/_ckernels.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
