from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure-Python
# implementations in biparts._fallback when the extension is unavailable.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("biparts._speedups", ["src/biparts/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
