from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in monoclose._kernels_py when the extension is absent.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "monoclose._speedups",
                ["src/monoclose/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
