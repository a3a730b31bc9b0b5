import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("BASEDFVS_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "basedfvs._kernels",
                    ["src/basedfvs/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
