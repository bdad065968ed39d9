from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python fallback is selected at import
    ext_modules = []
else:
    ext_modules = cythonize(
        ["src/permrel/_kernels.pyx"],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
