import os

from setuptools import Extension, setup

ext_modules = []
if (
    os.environ.get("NEARCONV_NO_EXT") != "1"
    and os.path.exists("src/nearconv/_kernels/_fastcore.pyx")
):
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "nearconv._kernels._fastcore",
                    ["src/nearconv/_kernels/_fastcore.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # The package is fully functional on the pure backend.
        ext_modules = []

setup(ext_modules=ext_modules)
