import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ADELCAT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "adelcat._hnf_cy",
                    ["src/adelcat/_hnf_cy.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )

setup(ext_modules=ext_modules)
