from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "berge._ckernels",
        ["src/berge/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )
)
