"""Builds the optional compiled relation kernel; the package works without it."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    pass
else:
    ext_modules = cythonize(["src/coherent/_relcore.pyx"], language_level=3, quiet=True)

setup(ext_modules=ext_modules)
