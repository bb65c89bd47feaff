from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("newtprofile._kernels", ["src/newtprofile/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # The package falls back to the pure-Python kernels at import time.
    extensions = []

setup(ext_modules=extensions)
