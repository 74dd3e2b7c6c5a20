"""Build glue for the optional compiled kernel.

The extension accelerates the structural hot loop (biideal splits and
vertex-subset restriction on flat parent arrays). It is marked optional:
if no compiler or Cython is available the package installs pure-Python
and forest_bialg._kernel falls back to _splits_py automatically.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension("forest_bialg._splits", ["src/forest_bialg/_splits.pyx"])
    ext.optional = True
    ext_modules = cythonize([ext], language_level=3)

setup(ext_modules=ext_modules)
