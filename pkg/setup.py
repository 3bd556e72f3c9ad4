from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("invlat._kernels", ["src/invlat/_kernels.pyx"])],
        language_level="3",
    )
except ImportError:
    # Pure-Python fallback in invlat._kernels_py is used when the
    # compiled module is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
