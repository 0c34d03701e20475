from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python fallback kernels are selected at import time, so the
    # package still works without the compiled extension.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("parkres._kernels", ["src/parkres/_kernels.pyx"])],
        language_level="3",
    )

setup(ext_modules=ext_modules)
