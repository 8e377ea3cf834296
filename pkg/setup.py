import numpy
from Cython.Build import cythonize
from setuptools import Extension, setup

ext = Extension(
    "gha._ckern",
    ["src/gha/_ckern.pyx"],
    include_dirs=[numpy.get_include()],
)

setup(
    ext_modules=cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    ),
)
